//! Group Fourier transforms on `ℤ₂ⁿ` and `ℤ_d^N`: characters, fast paths,
//! convolution through the spectrum, decay profiles, and the MMD between
//! distributions.
//!
//! Run with `cargo run --example transforms`.

use num_complex::Complex64;
use spectra::group::{
    convolve, convolve_direct, fourier, inverse_fourier, mmd_squared, mmd_squared_direct,
    smoothness_decay_profile, DenseFunction, GroupElement, GroupSpec,
};
use spectra::models::noise_kernel_function;

fn main() -> spectra::Result<()> {
    // The Walsh spectrum of a point mass: every parity is fully correlated.
    let group = GroupSpec::boolean(3)?;
    let point = DenseFunction::delta(group.clone(), &GroupElement::from_bit_str("101")?)?;
    let spectrum = fourier(&point);
    println!("Walsh spectrum of the point mass at 101:");
    for (idx, v) in spectrum.values().iter().enumerate() {
        let k = group.unpack_frequency(idx)?;
        println!("  k = {}  |k| = {}  coefficient = {:+.4}", k.bit_string(), k.order_weight(), v.re);
    }

    // Round trip through the inverse transform.
    let back = inverse_fourier(&spectrum);
    let max_err = back
        .values()
        .iter()
        .zip(point.values())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("round-trip error: {max_err:.2e}\n");

    // Convolution theorem: smoothing a two-point distribution with the noise
    // kernel by both routes.
    let data = DenseFunction::from_real(group.clone(), &[0.5, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0])?;
    let kernel = noise_kernel_function(3, 0.2)?;
    let spectral = convolve(&data, &kernel)?;
    let direct = convolve_direct(&data, &kernel)?;
    let diff = spectral
        .values()
        .iter()
        .zip(direct.values())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("convolution via spectrum vs double sum: max diff {diff:.2e}");
    println!("smoothed distribution: {:?}\n", spectral.real_values().iter().map(|p| (p * 1e4).round() / 1e4).collect::<Vec<_>>());

    // A cyclic group: the discrete Gaussian has a fast-decaying spectrum.
    let cyclic = GroupSpec::cyclic(64, 1)?;
    let sigma = 5.0;
    let gauss: Vec<f64> = (0..64)
        .map(|x| (-0.5 * ((x as f64 - 32.0) / sigma).powi(2)).exp())
        .collect();
    let gauss_fn = DenseFunction::from_real(cyclic, &gauss)?;
    println!("decay profile of a discrete Gaussian on Z_64 (shell, max |coeff|):");
    for (order, magnitude) in smoothness_decay_profile(&gauss_fn).iter().take(9) {
        println!("  {order:>2}  {magnitude:.3e}");
    }
    println!();

    // MMD between two point masses under the noise kernel, both routes.
    let p = DenseFunction::delta(group.clone(), &GroupElement::from_bit_str("000")?)?;
    let q = DenseFunction::delta(group, &GroupElement::from_bit_str("111")?)?;
    let phi = noise_kernel_function(3, 0.25)?;
    let fast = mmd_squared(&p, &q, &phi)?;
    let slow = mmd_squared_direct(&p, &q, &phi)?;
    println!("MMD²(δ000, δ111) under the noise kernel: {fast:.6} (direct {slow:.6})");

    // Unit-modulus characters multiply pointwise.
    let c = GroupSpec::cyclic(4, 1)?;
    let k = c.frequency(vec![1])?;
    let x = c.element(vec![1])?;
    let chi: Complex64 = c.character(&k, &x)?;
    println!("character of Z4 at k=1, x=1: {chi} (the quarter turn)");
    Ok(())
}
