//! Bandlimited sparse models: tractable probabilities and marginals from a
//! small set of retained coefficients, autoregressive sampling, and the
//! frequency budget that stops combinatorial blowups early.
//!
//! Run with `cargo run --example bandlimited_sparse`.

use spectra::group::count_bandlimited_frequencies;
use spectra::models::{
    autoregressive_sample, sparse_marginal, sparse_model, sparse_prob, Dataset, FilterSpec,
};

fn main() -> spectra::Result<()> {
    // 16-bit samples: the dense table would have 65536 entries; band 2 keeps
    // 1 + 16 + 120 = 137 coefficients.
    let dataset = Dataset::from_bit_strs(&[
        "1100110011001100",
        "1100110011001101",
        "1100110011011100",
        "0100110011001100",
        "1101110011001100",
    ])?;
    let filter = FilterSpec::OrderDecay { theta: 0.15 };
    let model = sparse_model(&dataset, &filter, 2)?;
    println!(
        "16-bit model, band 2: {} retained coefficients (of {} frequencies total)",
        model.term_count(),
        count_bandlimited_frequencies(16, 16)?
    );

    // Tractable pointwise probabilities.
    let training_point = spectra::group::GroupElement::from_bit_str("1100110011001100")?;
    let far_point = spectra::group::GroupElement::from_bit_str("0011001100110011")?;
    println!(
        "p(training point) = {:.3e}, p(bitwise complement) = {:.3e}",
        sparse_prob(&model, &training_point)?,
        sparse_prob(&model, &far_point)?
    );

    // Tractable marginals: the first four bits.
    println!("marginals over the first four bits:");
    for value in 0..16u32 {
        let prefix: Vec<u32> = (0..4).map(|b| (value >> b) & 1).collect();
        let m = sparse_marginal(&model, &prefix)?;
        if m > 0.01 {
            let rendered: String =
                prefix.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect();
            println!("  p(x starts with {rendered}) = {m:.4}");
        }
    }

    // Autoregressive sampling works off the same truncated series, but a
    // hard truncation of data this concentrated leaves negative conditionals
    // somewhere, and the sampler refuses rather than sampling a signed
    // "distribution".
    if let Err(e) = autoregressive_sample(&model, 11, 5) {
        println!("\nsampling the band-2 model at theta = 0.15: {e}");
    }

    // Stronger smoothing pulls every conditional back above zero.
    let wide_filter = FilterSpec::OrderDecay { theta: 0.4 };
    let smoother = sparse_model(&dataset, &wide_filter, 2)?;
    let samples = autoregressive_sample(&smoother, 11, 5)?;
    println!("five autoregressive draws at theta = 0.4:");
    for s in &samples {
        println!("  {}", s.bit_string());
    }

    // The budget refuses frequency sets that cannot be enumerated.
    let wide_strings = ["1".repeat(10_000)];
    let refs: Vec<&str> = wide_strings.iter().map(|s| s.as_str()).collect();
    let wide = Dataset::from_bit_strs(&refs)?;
    match sparse_model(&wide, &FilterSpec::OrderDecay { theta: 0.1 }, 2) {
        Err(e) => println!("\n10,000-bit band-2 model refused: {e}"),
        Ok(_) => unreachable!("the band-2 count at 10,000 bits exceeds the budget"),
    }
    Ok(())
}
