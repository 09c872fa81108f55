//! Command-line surface behind the `spectra` binary.
//!
//! Exit codes: 0 success, 1 usage, 2 parse/input, 3 scale guard,
//! 4 invalid model (negative mass, negative conditional, zero posterior),
//! 5 postselection failure. `SPECTRA_GUARD_OVERRIDE=1` unlocks the extended
//! symmetric-group guard.

mod files;

pub use files::{
    CreatedBy, FilterDescriptor, FrequencyRepr, GroupDescriptor, ModelFile, SparseCoefficient,
    SpectrumFile, SpectrumRecord, FORMAT_VERSION,
};

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use ndarray::Array2;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::group::{
    count_bandlimited_frequencies, fourier, Frequency, GroupSpec, DENSE_GUARD,
};
use crate::models::{
    autoregressive_sample, empirical_coefficient, empirical_distribution, fit_theta, kde_sample,
    sample_indices, smooth, Dataset, FilterSpec,
};
use crate::quantum::{
    decay_filter_diagonal, prepare_superposition, qnn_extract_spectrum, qnn_frequency_set,
    random_unitary, walsh_qft, FrequencySet, QnnEncodingSpec, QnnModel,
};
use crate::sn::{
    markov_model, marginal_pattern, IrrepTable, PatternMap, SnScale, Step,
};
use crate::Result;

#[derive(Parser)]
#[command(
    name = "spectra",
    version,
    about = "Spectral design of probabilistic models over discrete groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the empirical Fourier spectrum of a bitstring dataset.
    Spectrum(SpectrumArgs),
    /// Smooth the empirical distribution with an order-decay filter.
    Smooth(SmoothArgs),
    /// Draw samples from a persisted model or the noise-kernel sampler.
    Sample(SampleArgs),
    /// Run the amplitude-space smoothing pipeline and persist the Born model.
    Qsmooth(QsmoothArgs),
    /// Fit the order-decay width by held-out likelihood.
    Fit(FitArgs),
    /// Frequency-set analysis of an encoding, optionally with a demo model.
    QnnSpectrum(QnnSpectrumArgs),
    /// Diffusion/conditioning Markov pipelines over the symmetric group.
    Sn(SnArgs),
}

#[derive(Args)]
struct SpectrumArgs {
    /// Dataset file: one '0'/'1' string per line, '#' comments.
    input: PathBuf,
    /// Keep only the K records of largest magnitude.
    #[arg(long)]
    top: Option<usize>,
    /// Restrict to frequencies of Hamming weight at most this band.
    #[arg(long)]
    band: Option<usize>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SmoothArgs {
    /// Dataset file.
    input: PathBuf,
    /// Order-decay width in [0, 1].
    #[arg(long)]
    theta: f64,
    /// Model file path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write plot data (index,bitstring,probability CSV).
    #[arg(long)]
    plot: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    /// Sample from a persisted model file.
    #[arg(long, conflicts_with_all = ["kde", "theta", "input"])]
    model: Option<PathBuf>,
    /// Sample by the noise-kernel trick instead (needs --theta and --input).
    #[arg(long, requires = "theta", requires = "input")]
    kde: bool,
    /// Bit-flip probability for --kde.
    #[arg(long)]
    theta: Option<f64>,
    /// Dataset file for --kde.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Number of samples.
    #[arg(long)]
    count: usize,
    /// RNG seed; required so runs are reproducible by construction.
    #[arg(long)]
    seed: u64,
}

#[derive(Args)]
struct QsmoothArgs {
    /// Dataset file.
    input: PathBuf,
    /// Decay width in [0, 1/2].
    #[arg(long)]
    theta: f64,
    /// Model file path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the postselection success probability and its closed-form check.
    #[arg(long)]
    report: bool,
    /// Dump the intermediate statevectors as JSON arrays of [re, im] pairs.
    #[arg(long)]
    dump_states: bool,
}

#[derive(Args)]
struct FitArgs {
    /// Training dataset file.
    #[arg(long)]
    train: PathBuf,
    /// Validation dataset file.
    #[arg(long)]
    valid: PathBuf,
    /// Number of grid points on [0, 1/2]; at least 3.
    #[arg(long, default_value_t = 11)]
    grid: usize,
    /// Write the (theta, log_likelihood) curve as CSV.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct QnnSpectrumArgs {
    /// Comma-separated eigenvalue list of one encoding gate; repeatable.
    #[arg(long = "eigs", allow_hyphen_values = true)]
    eigs: Vec<String>,
    /// Build a demo model (one qubit per 2-eigenvalue gate, seeded random
    /// trainables) and extract its spectrum.
    #[arg(long)]
    demo_model: bool,
    /// Extraction band; defaults to the largest accessible frequency.
    #[arg(long)]
    kmax: Option<usize>,
    /// Seed for the demo model's trainable blocks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SnArgs {
    /// Number of permuted objects.
    #[arg(long)]
    n: usize,
    /// Steps JSON: [{"diffuse": 0.5}, {"condition": {"maps": [...]}}] with
    /// 1-based objects/positions.
    #[arg(long)]
    steps: Option<String>,
    /// Pattern JSON {"maps": [{"objects": [...], "positions": [...]}]}
    /// (1-based); prints its probability under the final distribution.
    #[arg(long)]
    marginal: Option<String>,
    /// Write the full distribution as CSV (permutation,probability).
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit code for a library error, per the documented map.
fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Parse { .. } | Error::Io(_) => 2,
        Error::DenseGuard { .. }
        | Error::SnGuard { .. }
        | Error::QubitGuard { .. }
        | Error::BudgetExceeded { .. } => 3,
        Error::NegativeMass { .. }
        | Error::NegativeConditional { .. }
        | Error::ZeroPosteriorMass
        | Error::NotAProbability(_)
        | Error::InvalidModel(_) => 4,
        Error::ZeroSuccessProbability { .. } => 5,
        _ => 1,
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn amend(mut self, extra: &str) -> Self {
        self.message = format!("{}; {extra}", self.message);
        self
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { code: exit_code(&error), message: error.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    1
                }
            };
        }
    };
    let outcome = match cli.command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Smooth(args) => cmd_smooth(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Qsmooth(args) => cmd_qsmooth(args),
        Command::Fit(args) => cmd_fit(args),
        Command::QnnSpectrum(args) => cmd_qnn_spectrum(args),
        Command::Sn(args) => cmd_sn(args),
    };
    match outcome {
        Ok(()) => 0,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

fn read_dataset(path: &Path) -> std::result::Result<Dataset, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    Ok(Dataset::parse_bytes(&bytes)?)
}

fn emit(out: Option<&Path>, content: &str) -> CmdResult {
    match out {
        Some(path) => {
            std::fs::write(path, content).map_err(|e| Failure {
                code: 2,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
        }
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
        }
    }
    Ok(())
}

fn dense_fits(bits: usize) -> bool {
    bits < usize::BITS as usize && (1usize << bits) <= DENSE_GUARD
}

fn cmd_spectrum(args: SpectrumArgs) -> CmdResult {
    let dataset = read_dataset(&args.input)?;
    let bits = dataset.bits();
    let mut entries: Vec<(Frequency, f64, f64)> = Vec::new();
    match args.band {
        Some(band) => {
            if band > bits {
                return Err(usage(format!("band {band} exceeds the {bits}-bit samples")));
            }
            // Sparse path: enumerate supports within the band under the
            // default budget.
            let count = count_bandlimited_frequencies(bits as u64, band as u64)?;
            if count > num_bigint::BigUint::from(crate::models::DEFAULT_FREQUENCY_BUDGET) {
                return Err(Error::BudgetExceeded {
                    count,
                    budget: crate::models::DEFAULT_FREQUENCY_BUDGET,
                }
                .into());
            }
            let mut stack: Vec<Vec<usize>> = vec![vec![]];
            while let Some(support) = stack.pop() {
                let k = Frequency::from_support(bits, &support)?;
                let value = empirical_coefficient(&dataset, &k)?;
                entries.push((k, value, 0.0));
                if support.len() < band {
                    let start = support.last().map(|&b| b + 1).unwrap_or(0);
                    for bit in start..bits {
                        let mut grown = support.clone();
                        grown.push(bit);
                        stack.push(grown);
                    }
                }
            }
        }
        None => {
            if !dense_fits(bits) {
                return Err(Failure::from(Error::DenseGuard {
                    group: format!("Z2^{bits}"),
                    order: num_bigint::BigUint::from(2u8).pow(bits as u32),
                    max: DENSE_GUARD,
                })
                .amend("pass --band to use the sparse path"));
            }
            let spectrum = fourier(&empirical_distribution(&dataset)?);
            let group = GroupSpec::boolean(bits)?;
            for (idx, v) in spectrum.values().iter().enumerate() {
                entries.push((group.unpack_frequency(idx)?, v.re, v.im));
            }
        }
    }
    if let Some(top) = args.top {
        // Largest magnitude first; ties broken by frequency for determinism.
        entries.sort_by(|a, b| {
            let mag_a = a.1 * a.1 + a.2 * a.2;
            let mag_b = b.1 * b.1 + b.2 * b.2;
            mag_b
                .partial_cmp(&mag_a)
                .expect("finite magnitudes")
                .then_with(|| a.0.cmp(&b.0))
        });
        entries.truncate(top);
    }
    let file = SpectrumFile::from_entries(GroupDescriptor::Boolean { bits }, entries);
    emit(args.out.as_deref(), &file.to_json())
}

fn plot_csv(distribution: &[f64], bits: usize) -> Result<String> {
    let group = GroupSpec::boolean(bits)?;
    let mut out = String::from("index,bitstring,probability\n");
    for (idx, p) in distribution.iter().enumerate() {
        let bitstring = group.unpack(idx)?.bit_string();
        out.push_str(&format!("{idx},{bitstring},{p}\n"));
    }
    Ok(out)
}

fn cmd_smooth(args: SmoothArgs) -> CmdResult {
    if !(0.0..=1.0).contains(&args.theta) {
        return Err(usage(format!("--theta {} outside [0, 1]", args.theta)));
    }
    let dataset = read_dataset(&args.input)?;
    let model = smooth(&dataset, &FilterSpec::OrderDecay { theta: args.theta })?;
    let file = ModelFile::from_smoothed(&model, "classical")?;
    emit(args.out.as_deref(), &file.to_json())?;
    if let Some(plot) = &args.plot {
        emit(Some(plot), &plot_csv(model.distribution(), model.bits())?)?;
    }
    Ok(())
}

fn cmd_sample(args: SampleArgs) -> CmdResult {
    let lines: Vec<String> = match (&args.model, args.kde) {
        (Some(path), false) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure {
                code: 2,
                message: format!("cannot read {}: {e}", path.display()),
            })?;
            let file = ModelFile::from_json(&text)?;
            if let Some(sparse) = file.sparse_model()? {
                autoregressive_sample(&sparse, args.seed, args.count)?
                    .iter()
                    .map(|x| x.bit_string())
                    .collect()
            } else {
                let probs = file.dense_probabilities.as_ref().ok_or_else(|| {
                    Error::InvalidModel("model file has neither dense nor sparse payload".into())
                })?;
                let GroupDescriptor::Boolean { bits } = file.group else {
                    return Err(Failure::from(Error::InvalidModel(
                        "sampling expects a Boolean model".into(),
                    )));
                };
                if !dense_fits(bits) || probs.len() != 1usize << bits {
                    return Err(Failure::from(Error::InvalidModel(
                        "dense probability table has the wrong length".into(),
                    )));
                }
                let total: f64 = probs.iter().sum();
                if probs.iter().any(|&p| p < -1e-9) || (total - 1.0).abs() > 1e-6 {
                    return Err(Failure::from(Error::NotAProbability(format!(
                        "stored table sums to {total}"
                    ))));
                }
                let group = GroupSpec::boolean(bits)?;
                sample_indices(probs, args.seed, args.count)
                    .into_iter()
                    .map(|idx| group.unpack(idx).map(|e| e.bit_string()))
                    .collect::<Result<_>>()?
            }
        }
        (None, true) => {
            let theta = args.theta.expect("clap requires --theta with --kde");
            if !(0.0..=1.0).contains(&theta) {
                return Err(usage(format!("--theta {theta} outside [0, 1]")));
            }
            let input = args.input.as_ref().expect("clap requires --input with --kde");
            let dataset = read_dataset(input)?;
            kde_sample(&dataset, theta, args.seed, args.count)?
                .iter()
                .map(|x| x.bit_string())
                .collect()
        }
        _ => return Err(usage("pass exactly one of --model or --kde")),
    };
    let mut stdout = std::io::stdout().lock();
    for line in lines {
        writeln!(stdout, "{line}").map_err(|e| Failure { code: 2, message: e.to_string() })?;
    }
    Ok(())
}

fn cmd_qsmooth(args: QsmoothArgs) -> CmdResult {
    if !(0.0..=0.5).contains(&args.theta) {
        return Err(usage(format!("--theta {} outside [0, 1/2]", args.theta)));
    }
    let dataset = read_dataset(&args.input)?;
    let prepared = prepare_superposition(&dataset)?;
    let in_fourier = walsh_qft(&prepared);
    let filtered = crate::quantum::ancilla_decay_filter(&in_fourier, args.theta)?;
    let output_state = walsh_qft(&filtered.state_after);
    let distribution = crate::quantum::born_distribution(&output_state)?;
    let success_prob = filtered.success_prob;
    let file = ModelFile::from_dense(
        dataset.bits(),
        FilterDescriptor::OrderDecay { theta: args.theta },
        "quantum",
        distribution.real_values(),
        dataset.digest(),
    );
    emit(args.out.as_deref(), &file.to_json())?;
    if args.dump_states {
        println!(
            "states: {{\"prepared\": {}, \"fourier\": {}, \"filtered\": {}, \"output\": {}}}",
            prepared.to_json(),
            in_fourier.to_json(),
            filtered.state_after.to_json(),
            output_state.to_json()
        );
    }
    if args.report {
        // Closed-form check via the diagonal reference route.
        let closed_form = decay_filter_diagonal(&in_fourier, args.theta)?.success_prob;
        println!("success_probability: {success_prob}");
        println!("closed_form_check: {closed_form}");
        println!("difference: {:e}", (success_prob - closed_form).abs());
    }
    Ok(())
}

fn cmd_fit(args: FitArgs) -> CmdResult {
    if args.grid < 3 {
        return Err(usage(format!("--grid must be at least 3, got {}", args.grid)));
    }
    let train = read_dataset(&args.train)?;
    let valid = read_dataset(&args.valid)?;
    let fit = fit_theta(&train, &valid, args.grid)?;
    println!("theta_star: {}", fit.theta);
    if let Some(out) = &args.out {
        let mut csv = String::from("theta,log_likelihood\n");
        for (theta, ll) in &fit.curve {
            csv.push_str(&format!("{theta},{ll}\n"));
        }
        emit(Some(out), &csv)?;
    }
    Ok(())
}

fn parse_eigs(lists: &[String]) -> std::result::Result<QnnEncodingSpec, Failure> {
    if lists.is_empty() {
        return Err(usage("at least one --eigs list is required"));
    }
    let mut gates = Vec::with_capacity(lists.len());
    let mut combinations = 1f64;
    for (i, raw) in lists.iter().enumerate() {
        if raw.trim().is_empty() {
            return Err(usage(format!("--eigs list {} is empty", i + 1)));
        }
        let eigenvalues = raw
            .split(',')
            .map(|tok| {
                tok.trim().parse::<f64>().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("bad eigenvalue '{}'", tok.trim()),
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        combinations *= eigenvalues.len() as f64;
        gates.push(eigenvalues);
    }
    // Worst case the sum enumeration is the product of list sizes.
    if combinations > (1u64 << 22) as f64 {
        return Err(usage("eigenvalue lists enumerate too many sum combinations"));
    }
    Ok(QnnEncodingSpec::new(gates)?)
}

fn demo_model(spec: &QnnEncodingSpec, seed: u64) -> std::result::Result<QnnModel, Failure> {
    let gates = spec.gates();
    for (i, gate) in gates.iter().enumerate() {
        if gate.len() != 2 {
            return Err(usage(format!(
                "--demo-model needs exactly 2 eigenvalues per gate; gate {} has {}",
                i + 1,
                gate.len()
            )));
        }
    }
    let n = gates.len();
    if n > crate::quantum::QNN_QUBIT_GUARD {
        return Err(Failure::from(Error::QubitGuard {
            n,
            max: crate::quantum::QNN_QUBIT_GUARD,
        }));
    }
    let dim = 1usize << n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trainables = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        trainables.push(random_unitary(dim, &mut rng));
    }
    let encodings: Vec<(usize, Array2<Complex64>)> = gates
        .iter()
        .enumerate()
        .map(|(qubit, eigenvalues)| {
            let mut h = Array2::from_elem((2, 2), Complex64::new(0.0, 0.0));
            h[[0, 0]] = Complex64::new(eigenvalues[0], 0.0);
            h[[1, 1]] = Complex64::new(eigenvalues[1], 0.0);
            (qubit, h)
        })
        .collect();
    // Observable: Z on qubit 0.
    let mut observable = Array2::from_elem((dim, dim), Complex64::new(0.0, 0.0));
    for idx in 0..dim {
        let sign = if idx & 1 == 0 { 1.0 } else { -1.0 };
        observable[[idx, idx]] = Complex64::new(sign, 0.0);
    }
    Ok(QnnModel::new(n, trainables, encodings, observable)?)
}

fn default_kmax(omega: &FrequencySet) -> usize {
    omega
        .values
        .iter()
        .map(|v| v.abs().ceil() as usize)
        .max()
        .unwrap_or(1)
        .max(1)
}

fn cmd_qnn_spectrum(args: QnnSpectrumArgs) -> CmdResult {
    let spec = parse_eigs(&args.eigs)?;
    let omega = qnn_frequency_set(&spec);
    let mut output = serde_json::Map::new();
    output.insert(
        "omega".into(),
        serde_json::to_value(&omega.values).expect("floats serialise"),
    );
    output.insert("integer_spectrum".into(), serde_json::Value::Bool(omega.integer));
    if args.demo_model {
        let model = demo_model(&spec, args.seed)?;
        let k_max = args.kmax.unwrap_or_else(|| default_kmax(&omega));
        if k_max == 0 {
            return Err(usage("--kmax must be at least 1"));
        }
        let coeffs: BTreeMap<i64, Complex64> = qnn_extract_spectrum(&model, k_max)?;
        let mut max_out_of_band = 0.0f64;
        let mut rendered = Vec::with_capacity(coeffs.len());
        for (k, c) in &coeffs {
            if !omega.contains(*k as f64) {
                max_out_of_band = max_out_of_band.max(c.norm());
            }
            rendered.push(serde_json::json!({"k": k, "re": c.re, "im": c.im}));
        }
        output.insert("coefficients".into(), serde_json::Value::Array(rendered));
        output.insert(
            "max_out_of_band".into(),
            serde_json::to_value(max_out_of_band).expect("float serialises"),
        );
    }
    let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(output))
        .expect("json serialises");
    text.push('\n');
    print!("{text}");
    Ok(())
}

#[derive(serde::Deserialize)]
struct MapSpec {
    objects: Vec<usize>,
    positions: Vec<usize>,
}

#[derive(serde::Deserialize)]
struct PatternSpec {
    maps: Vec<MapSpec>,
}

#[derive(serde::Deserialize)]
#[serde(rename_all = "lowercase")]
enum StepSpec {
    Diffuse(f64),
    Condition(PatternSpec),
}

fn pattern_from_spec(spec: &PatternSpec) -> Result<PatternMap> {
    let maps = spec
        .maps
        .iter()
        .map(|m| {
            let objects = m
                .objects
                .iter()
                .map(|&o| {
                    o.checked_sub(1).ok_or_else(|| {
                        Error::MalformedPattern("objects/positions are 1-based".into())
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            let positions = m
                .positions
                .iter()
                .map(|&p| {
                    p.checked_sub(1).ok_or_else(|| {
                        Error::MalformedPattern("objects/positions are 1-based".into())
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            Ok((objects, positions))
        })
        .collect::<Result<Vec<_>>>()?;
    PatternMap::new(maps)
}

fn cmd_sn(args: SnArgs) -> CmdResult {
    let scale = if std::env::var("SPECTRA_GUARD_OVERRIDE").as_deref() == Ok("1") {
        SnScale::Extended
    } else {
        SnScale::Standard
    };
    if args.n > scale.max_transform_n() {
        return Err(Failure::from(Error::SnGuard {
            n: args.n,
            max: scale.max_transform_n(),
        }));
    }
    if args.n < 2 {
        return Err(usage("--n must be at least 2"));
    }
    let steps: Vec<Step> = match &args.steps {
        None => Vec::new(),
        Some(text) => {
            let specs: Vec<StepSpec> = serde_json::from_str(text).map_err(|e| Error::Parse {
                line: e.line(),
                message: format!("steps JSON: {e}"),
            })?;
            specs
                .iter()
                .map(|s| -> Result<Step> {
                    Ok(match s {
                        StepSpec::Diffuse(p) => Step::Diffuse(*p),
                        StepSpec::Condition(pattern) => Step::Condition(
                            crate::sn::pattern_indicator(args.n, &pattern_from_spec(pattern)?)?,
                        ),
                    })
                })
                .collect::<Result<Vec<Step>>>()?
        }
    };
    let table = IrrepTable::new(args.n)?;
    let distribution = markov_model(args.n, &steps, &table, scale)?;
    if let Some(text) = &args.marginal {
        let spec: PatternSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: format!("marginal JSON: {e}"),
        })?;
        let pattern = pattern_from_spec(&spec)?;
        let value = marginal_pattern(&distribution, &pattern)?;
        println!("marginal: {value}");
    }
    let csv = {
        let mut out = String::from("permutation,probability\n");
        for (rank, value) in distribution.values().iter().enumerate() {
            let p = crate::sn::Permutation::from_lex_rank(args.n, rank)?;
            out.push_str(&format!("\"{}\",{value}\n", p.one_line_string()));
        }
        out
    };
    match &args.out {
        Some(path) => emit(Some(path), &csv)?,
        None if args.marginal.is_none() => emit(None, &csv)?,
        None => {}
    }
    Ok(())
}
