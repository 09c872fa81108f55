//! End-to-end tests of the `spectra` binary: exit codes, file formats,
//! determinism, and parity with in-process sampling.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use spectra::cli::{ModelFile, SpectrumFile};
use spectra::models::{sample_indices, smooth, Dataset, FilterSpec};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spectra"))
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn spectrum_of_single_sample() {
    let dir = tempfile::tempdir().unwrap();
    let data = write(dir.path(), "data.txt", "11\n");
    let out = binary().arg("spectrum").arg(&data).output().unwrap();
    assert!(out.status.success());
    let file = SpectrumFile::from_json(&stdout(&out)).unwrap();
    let values: Vec<f64> = file.records.iter().map(|r| r.re).collect();
    assert_eq!(values, vec![0.5, -0.5, -0.5, 0.5]);
    let orders: Vec<usize> = file.records.iter().map(|r| r.order).collect();
    assert_eq!(orders, vec![0, 1, 1, 2]);
}

#[test]
fn spectrum_top_one_is_the_zero_frequency() {
    let dir = tempfile::tempdir().unwrap();
    let data = write(dir.path(), "data.txt", "0110\n1100\n0001\n");
    let out = binary()
        .arg("spectrum")
        .arg(&data)
        .args(["--top", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let file = SpectrumFile::from_json(&stdout(&out)).unwrap();
    assert_eq!(file.records.len(), 1);
    assert_eq!(file.records[0].order, 0);
    assert!((file.records[0].re - 0.25).abs() < 1e-15);
}

#[test]
fn spectrum_band_restricts_orders() {
    let dir = tempfile::tempdir().unwrap();
    let data = write(dir.path(), "data.txt", "0110\n1100\n");
    let out = binary()
        .arg("spectrum")
        .arg(&data)
        .args(["--band", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let file = SpectrumFile::from_json(&stdout(&out)).unwrap();
    assert_eq!(file.records.len(), 5); // 1 + C(4,1)
    assert!(file.records.iter().all(|r| r.order <= 1));
}

#[test]
fn smooth_plot_matches_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let data = write(dir.path(), "data.txt", "1\n");
    let plot = dir.path().join("plot.csv");
    let model = dir.path().join("model.json");
    let status = binary()
        .arg("smooth")
        .arg(&data)
        .args(["--theta", "0.25", "--out"])
        .arg(&model)
        .arg("--plot")
        .arg(&plot)
        .status()
        .unwrap();
    assert!(status.success());
    let csv = std::fs::read_to_string(&plot).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "index,bitstring,probability");
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!((rows[0][0], rows[0][1]), ("0", "0"));
    assert_eq!((rows[1][0], rows[1][1]), ("1", "1"));
    assert!((rows[0][2].parse::<f64>().unwrap() - 0.25).abs() < 1e-12);
    assert!((rows[1][2].parse::<f64>().unwrap() - 0.75).abs() < 1e-12);
}

#[test]
fn smooth_extremes_give_empirical_and_uniform_plots() {
    let dir = tempfile::tempdir().unwrap();
    let data = write(dir.path(), "data.txt", "10\n10\n01\n11\n");
    let run = |theta: &str, name: &str| {
        let plot = dir.path().join(name);
        let status = binary()
            .arg("smooth")
            .arg(&data)
            .args(["--theta", theta, "--out"])
            .arg(dir.path().join("m.json"))
            .arg("--plot")
            .arg(&plot)
            .status()
            .unwrap();
        assert!(status.success());
        std::fs::read_to_string(&plot).unwrap()
    };
    let empirical = run("0", "empirical.csv");
    assert!(empirical.contains("\n1,10,0.5\n"), "got: {empirical}");
    assert!(empirical.contains("\n0,00,0\n"));
    let uniform = run("0.5", "uniform.csv");
    for line in uniform.lines().skip(1) {
        assert!(line.ends_with(",0.25"), "got: {line}");
    }
}

#[test]
fn loading_a_model_and_sampling_matches_in_process() {
    let dir = tempfile::tempdir().unwrap();
    let text = "110\n011\n110\n000\n";
    let data = write(dir.path(), "data.txt", text);
    let model_path = dir.path().join("model.json");
    assert!(binary()
        .arg("smooth")
        .arg(&data)
        .args(["--theta", "0.2", "--out"])
        .arg(&model_path)
        .status()
        .unwrap()
        .success());

    let out = binary()
        .args(["sample", "--model"])
        .arg(&model_path)
        .args(["--count", "64", "--seed", "31"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let cli_lines: Vec<String> = stdout(&out).lines().map(|l| l.to_string()).collect();

    // Same model, same seed, in process.
    let dataset = Dataset::parse(text).unwrap();
    let model = smooth(&dataset, &FilterSpec::OrderDecay { theta: 0.2 }).unwrap();
    let group = spectra::group::GroupSpec::boolean(3).unwrap();
    let in_process: Vec<String> = sample_indices(model.distribution(), 31, 64)
        .into_iter()
        .map(|idx| group.unpack(idx).unwrap().bit_string())
        .collect();
    assert_eq!(cli_lines, in_process);
}

#[test]
fn model_file_round_trip_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let data = write(dir.path(), "data.txt", "0101\n1110\n");
    let model_path = dir.path().join("model.json");
    assert!(binary()
        .arg("smooth")
        .arg(&data)
        .args(["--theta", "0.3", "--out"])
        .arg(&model_path)
        .status()
        .unwrap()
        .success());
    let bytes = std::fs::read(&model_path).unwrap();
    let reparsed = ModelFile::from_json(std::str::from_utf8(&bytes).unwrap()).unwrap();
    assert_eq!(reparsed.to_json().as_bytes(), &bytes[..]);
}

#[test]
fn delta_model_sample_lines_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let data = write(dir.path(), "data.txt", "101\n");
    let model_path = dir.path().join("model.json");
    assert!(binary()
        .arg("smooth")
        .arg(&data)
        .args(["--theta", "0", "--out"])
        .arg(&model_path)
        .status()
        .unwrap()
        .success());
    let out = binary()
        .args(["sample", "--model"])
        .arg(&model_path)
        .args(["--count", "20", "--seed", "5"])
        .output()
        .unwrap();
    for line in stdout(&out).lines() {
        assert_eq!(line, "101");
    }
}

#[test]
fn kde_and_model_sampling_agree_in_law() {
    let dir = tempfile::tempdir().unwrap();
    let text = "110\n100\n001\n";
    let data = write(dir.path(), "data.txt", text);
    let model_path = dir.path().join("model.json");
    assert!(binary()
        .arg("smooth")
        .arg(&data)
        .args(["--theta", "0.3", "--out"])
        .arg(&model_path)
        .status()
        .unwrap()
        .success());
    let count = 200_000usize;
    let kde = binary()
        .args(["sample", "--kde", "--theta", "0.3", "--input"])
        .arg(&data)
        .args(["--count", &count.to_string(), "--seed", "7"])
        .output()
        .unwrap();
    assert!(kde.status.success());
    let model = binary()
        .args(["sample", "--model"])
        .arg(&model_path)
        .args(["--count", &count.to_string(), "--seed", "8"])
        .output()
        .unwrap();
    assert!(model.status.success());
    let tally = |text: &str| {
        let mut counts = vec![0usize; 8];
        for line in text.lines() {
            let idx = line
                .chars()
                .enumerate()
                .map(|(i, c)| if c == '1' { 1usize << i } else { 0 })
                .sum::<usize>();
            counts[idx] += 1;
        }
        counts
    };
    let a = tally(&stdout(&kde));
    let b = tally(&stdout(&model));
    let tv: f64 = a
        .iter()
        .zip(&b)
        .map(|(&x, &y)| (x as f64 - y as f64).abs() / count as f64)
        .sum::<f64>()
        / 2.0;
    assert!(tv <= 0.02, "total variation {tv}");
}

#[test]
fn qsmooth_extremes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let data = write(dir.path(), "data.txt", "00\n11\n");
    // θ = 0: uniform over unique training points, success 1.
    let out = binary()
        .arg("qsmooth")
        .arg(&data)
        .args(["--theta", "0", "--report", "--out"])
        .arg(dir.path().join("q0.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let report = stdout(&out);
    assert!(report.contains("success_probability: 1"), "got: {report}");
    let model = ModelFile::from_json(&std::fs::read_to_string(dir.path().join("q0.json")).unwrap())
        .unwrap();
    let probs = model.dense_probabilities.unwrap();
    assert!((probs[0] - 0.5).abs() < 1e-12 && (probs[3] - 0.5).abs() < 1e-12);

    // θ = 1/2: uniform over all outcomes.
    let out = binary()
        .arg("qsmooth")
        .arg(&data)
        .args(["--theta", "0.5", "--report", "--out"])
        .arg(dir.path().join("q5.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let model = ModelFile::from_json(&std::fs::read_to_string(dir.path().join("q5.json")).unwrap())
        .unwrap();
    for p in model.dense_probabilities.unwrap() {
        assert!((p - 0.25).abs() < 1e-12);
    }

    // Regression fixture: θ = 1/4 puts 25/68 at each training point and the
    // success probability is 17/32.
    let out = binary()
        .arg("qsmooth")
        .arg(&data)
        .args(["--theta", "0.25", "--report", "--out"])
        .arg(dir.path().join("q25.json"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let reported: f64 = stdout(&out)
        .lines()
        .find_map(|l| l.strip_prefix("success_probability: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((reported - 17.0 / 32.0).abs() < 1e-12);
    let model =
        ModelFile::from_json(&std::fs::read_to_string(dir.path().join("q25.json")).unwrap())
            .unwrap();
    let probs = model.dense_probabilities.unwrap();
    assert!((probs[0] - 25.0 / 68.0).abs() < 1e-12);
    assert_eq!(model.pipeline, "quantum");
}

#[test]
fn fit_finds_the_boundary_optima() {
    let dir = tempfile::tempdir().unwrap();
    // Validating on the training cluster itself: no smoothing wanted.
    let cluster = write(dir.path(), "cluster.txt", "1010\n1010\n1011\n1010\n");
    let out = binary()
        .args(["fit", "--train"])
        .arg(&cluster)
        .arg("--valid")
        .arg(&cluster)
        .args(["--grid", "11"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    let theta: f64 = text.trim().strip_prefix("theta_star: ").unwrap().parse().unwrap();
    assert!(theta < 0.02, "theta {theta}");

    // Unstructured validation: full smoothing wanted, and the curve CSV is
    // written.
    let noise: String = (0..16).map(|i| format!("{:04b}\n", i)).collect();
    let valid = write(dir.path(), "valid.txt", &noise);
    let curve = dir.path().join("curve.csv");
    let out = binary()
        .args(["fit", "--train"])
        .arg(&cluster)
        .arg("--valid")
        .arg(&valid)
        .args(["--grid", "11", "--out"])
        .arg(&curve)
        .output()
        .unwrap();
    assert!(out.status.success());
    let theta: f64 = stdout(&out).trim().strip_prefix("theta_star: ").unwrap().parse().unwrap();
    assert!(theta > 0.48, "theta {theta}");
    let csv = std::fs::read_to_string(&curve).unwrap();
    assert!(csv.starts_with("theta,log_likelihood\n"));
    assert_eq!(csv.lines().count(), 12);
}

#[test]
fn qnn_spectrum_reports_band_and_out_of_band_mass() {
    let out = binary()
        .args(["qnn-spectrum", "--eigs", "0,1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["omega"], serde_json::json!([-1.0, 0.0, 1.0]));
    assert_eq!(json["integer_spectrum"], serde_json::json!(true));

    let out = binary()
        .args([
            "qnn-spectrum",
            "--eigs",
            "-0.5,0.5",
            "--eigs",
            "-0.5,0.5",
            "--eigs",
            "-0.5,0.5",
            "--demo-model",
            "--kmax",
            "4",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let omega: Vec<f64> = json["omega"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    assert_eq!(omega, (-3..=3).map(|k| k as f64).collect::<Vec<_>>());
    let max_out = json["max_out_of_band"].as_f64().unwrap();
    assert!(max_out < 1e-9, "out-of-band mass {max_out}");
}

#[test]
fn sn_degenerate_and_uniformising_pipelines() {
    // No steps: the delta at the identity, so the identity pattern has
    // probability 1.
    let out = binary()
        .args(["sn", "--n", "4", "--marginal", r#"{"maps":[{"objects":[2],"positions":[2]}]}"#])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "marginal: 1");

    // A long diffusion chain converges to uniform: P(object 2 ↦ position 4)
    // = 1/4 within 1e-9.
    let steps: Vec<String> = (0..60).map(|_| r#"{"diffuse":0.5}"#.to_string()).collect();
    let steps_json = format!("[{}]", steps.join(","));
    let out = binary()
        .args([
            "sn",
            "--n",
            "4",
            "--steps",
            &steps_json,
            "--marginal",
            r#"{"maps":[{"objects":[2],"positions":[4]}]}"#,
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: f64 = stdout(&out).trim().strip_prefix("marginal: ").unwrap().parse().unwrap();
    assert!((value - 0.25).abs() < 1e-9, "marginal {value}");
}

#[test]
fn sn_distribution_csv_uses_one_line_notation() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("dist.csv");
    let status = binary()
        .args(["sn", "--n", "3", "--steps", r#"[{"diffuse":0.5}]"#, "--out"])
        .arg(&out_path)
        .status()
        .unwrap();
    assert!(status.success());
    let csv = std::fs::read_to_string(&out_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "permutation,probability");
    assert_eq!(lines.next().unwrap(), "\"1,2,3\",0.5");
    assert_eq!(csv.lines().count(), 7);
}

#[test]
fn error_exit_codes_match_the_documented_map() {
    let dir = tempfile::tempdir().unwrap();
    let run_code = |args: &[&str]| {
        binary().args(args).output().unwrap().status.code().unwrap()
    };

    // 1: usage.
    assert_eq!(run_code(&["fit", "--train", "x", "--valid", "y", "--grid", "2"]), 1);
    assert_eq!(run_code(&["qnn-spectrum", "--eigs", ""]), 1);
    assert_eq!(run_code(&["nonsense-command"]), 1);

    // 2: parse.
    let empty = write(dir.path(), "empty.txt", "");
    assert_eq!(run_code(&["spectrum", empty.to_str().unwrap()]), 2);
    let ragged = write(dir.path(), "ragged.txt", "01\n011\n");
    assert_eq!(run_code(&["spectrum", ragged.to_str().unwrap()]), 2);
    assert_eq!(run_code(&["spectrum", dir.path().join("missing.txt").to_str().unwrap()]), 2);
    assert_eq!(run_code(&["sn", "--n", "3", "--steps", "not json"]), 2);
    assert_eq!(run_code(&["qnn-spectrum", "--eigs", "a,b"]), 2);

    // 2: model version check on load.
    let data = write(dir.path(), "d.txt", "01\n");
    let model = dir.path().join("m.json");
    assert!(binary()
        .arg("smooth")
        .arg(&data)
        .args(["--theta", "0.1", "--out"])
        .arg(&model)
        .status()
        .unwrap()
        .success());
    let bumped = std::fs::read_to_string(&model)
        .unwrap()
        .replace("\"format_version\": 1", "\"format_version\": 2");
    let bad_model = write(dir.path(), "bad.json", &bumped);
    assert_eq!(
        run_code(&["sample", "--model", bad_model.to_str().unwrap(), "--count", "1", "--seed", "0"]),
        2
    );

    // 3: guards.
    assert_eq!(run_code(&["sn", "--n", "7"]), 3);
    let wide = write(dir.path(), "wide.txt", &format!("{}\n", "10".repeat(50)));
    assert_eq!(run_code(&["spectrum", wide.to_str().unwrap()]), 3);

    // 4: invalid models.
    let negative = write(
        dir.path(),
        "negative.json",
        r#"{
  "format_version": 1,
  "group": { "kind": "boolean", "bits": 1 },
  "filter": { "variant": "order_decay", "theta": 0.0 },
  "pipeline": "classical",
  "dense_probabilities": [1.4, -0.4],
  "dataset_digest": "",
  "created_by": { "tool": "spectra", "version": "0.0.0" }
}
"#,
    );
    assert_eq!(
        run_code(&["sample", "--model", negative.to_str().unwrap(), "--count", "1", "--seed", "0"]),
        4
    );
    assert_eq!(
        run_code(&[
            "sn",
            "--n",
            "3",
            "--steps",
            r#"[{"condition":{"maps":[{"objects":[1],"positions":[2]}]}}]"#
        ]),
        4
    );
}

#[test]
fn guard_override_unlocks_extended_sn() {
    let out = binary()
        .args(["sn", "--n", "7", "--marginal", r#"{"maps":[{"objects":[1],"positions":[1]}]}"#])
        .env("SPECTRA_GUARD_OVERRIDE", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "marginal: 1");
}
