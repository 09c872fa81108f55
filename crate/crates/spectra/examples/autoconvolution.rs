//! The amplitude→probability spectrum identity: the Fourier coefficients of
//! a Born distribution are the autoconvolution of the amplitude
//! coefficients, `p̂(k) = (1/√2ⁿ) Σ_s ψ̂(s) ψ̂*(s + k)`.
//!
//! Run with `cargo run --example autoconvolution`.

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use spectra::group::{fourier, DenseFunction, GroupSpec};
use spectra::quantum::{autoconvolution_spectrum, born_distribution, StateVector};

fn main() -> spectra::Result<()> {
    let n = 4usize;
    let group = GroupSpec::boolean(n)?;
    let mut rng = StdRng::seed_from_u64(17);

    // A random state.
    let len = 1usize << n;
    let mut amps: Vec<Complex64> = (0..len)
        .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in amps.iter_mut() {
        *a /= norm;
    }
    let state = StateVector::new(n, 0, amps)?;

    // Route 1: Fourier-transform the measurement distribution.
    let direct = fourier(&born_distribution(&state)?);
    // Route 2: autoconvolve the amplitude spectrum.
    let psi = DenseFunction::new(group.clone(), state.amps().to_vec())?;
    let via_identity = autoconvolution_spectrum(&fourier(&psi))?;

    let max_diff = direct
        .values()
        .iter()
        .zip(via_identity.values())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("max |fourier(|psi|^2) - autoconvolution(psi_hat)| = {max_diff:.2e}\n");

    println!("first coefficients by both routes:");
    println!("{:>6}  {:>22}  {:>22}", "k", "from distribution", "from amplitudes");
    for idx in 0..8 {
        let k = group.unpack_frequency(idx)?;
        let a = direct.values()[idx];
        let b = via_identity.values()[idx];
        println!(
            "{:>6}  {:>10.5} {:>+10.5}i  {:>10.5} {:>+10.5}i",
            k.bit_string(),
            a.re,
            a.im,
            b.re,
            b.im
        );
    }

    // The identity turns phase structure into probability structure: a
    // uniform-magnitude state with random phases has a flat amplitude power
    // spectrum but a far-from-flat probability spectrum.
    let phased: Vec<Complex64> = (0..len)
        .map(|_| {
            Complex64::from_polar(
                1.0 / (len as f64).sqrt(),
                rng.random::<f64>() * std::f64::consts::TAU,
            )
        })
        .collect();
    let state = StateVector::new(n, 0, phased)?;
    let psi = DenseFunction::new(group, state.amps().to_vec())?;
    let p_hat = autoconvolution_spectrum(&fourier(&psi))?;
    let energy_outside_zero: f64 = p_hat.values()[1..].iter().map(|v| v.norm_sqr()).sum();
    println!(
        "\nuniform-magnitude random-phase state: probability-spectrum energy outside k = 0 is {energy_outside_zero:.4}"
    );
    Ok(())
}
