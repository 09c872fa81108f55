//! The noise-kernel sampler: drawing from the smoothed model by per-bit
//! flips, with no dense table. At small width the law is checked against the
//! dense pipeline; at large width the dense pipeline cannot even allocate.
//!
//! Run with `cargo run --example noise_kernel_sampling`.

use spectra::group::GroupSpec;
use spectra::models::{kde_sample, noise_kernel, smooth, Dataset, FilterSpec};

fn main() -> spectra::Result<()> {
    let dataset = Dataset::from_bit_strs(&["10110", "10010", "00110"])?;
    let theta = 0.2;

    // Dense reference law.
    let model = smooth(&dataset, &FilterSpec::OrderDecay { theta })?;
    let group = GroupSpec::boolean(dataset.bits())?;

    // Flip-based sampling from the identical law.
    let draws = 200_000usize;
    let samples = kde_sample(&dataset, theta, 99, draws)?;
    let mut counts = vec![0usize; group.dense_len()?];
    for s in &samples {
        counts[group.pack(s)?] += 1;
    }
    let tv: f64 = counts
        .iter()
        .zip(model.distribution())
        .map(|(&c, &p)| (c as f64 / draws as f64 - p).abs())
        .sum::<f64>()
        / 2.0;
    println!("total variation between sampler frequencies and the dense law: {tv:.4}");

    // The law is literally the kernel sum.
    let x = spectra::group::GroupElement::from_bit_str("10111")?;
    let mut kernel_sum = 0.0;
    for y in dataset.samples() {
        kernel_sum += noise_kernel(&x, y, theta)? / dataset.len() as f64;
    }
    println!(
        "p(10111): dense pipeline {:.6}, kernel sum {:.6}\n",
        model.distribution()[group.pack(&x)?],
        kernel_sum
    );

    // 512-bit samples: the dense table would need 2^512 entries, the flip
    // sampler does not care.
    let wide_strings: Vec<String> = vec![
        format!("{}{}", "10".repeat(128), "01".repeat(128)),
        format!("{}{}", "11".repeat(128), "00".repeat(128)),
    ];
    let refs: Vec<&str> = wide_strings.iter().map(|s| s.as_str()).collect();
    let wide = Dataset::from_bit_strs(&refs)?;
    let wide_samples = kde_sample(&wide, 0.05, 5, 3)?;
    println!("three 512-bit draws at theta = 0.05 (first 48 bits shown):");
    for s in &wide_samples {
        println!("  {}…", &s.bit_string()[..48]);
    }
    let dense_attempt = GroupSpec::boolean(512)?.dense_len();
    println!("dense table at 512 bits: {}", dense_attempt.unwrap_err());
    Ok(())
}
