//! Frequency sets of encoding-based quantum models: the eigenvalue sums of
//! the encoding generators bandlimit the model's Fourier series, whatever
//! the trainable blocks do.
//!
//! Run with `cargo run --example qnn_frequencies`.

use ndarray::Array2;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::SeedableRng;
use spectra::quantum::{
    qnn_evaluate, qnn_extract_spectrum, qnn_frequency_set, random_unitary, QnnEncodingSpec,
    QnnModel,
};

fn main() -> spectra::Result<()> {
    // Accessible frequencies for a few encodings.
    for (label, gates) in [
        ("one gate, eigenvalues {0, 1}", vec![vec![0.0, 1.0]]),
        ("three parallel gates, eigenvalues ±1/2", vec![vec![-0.5, 0.5]; 3]),
        ("one gate, eigenvalues {0, √2}", vec![vec![0.0, std::f64::consts::SQRT_2]]),
    ] {
        let spec = QnnEncodingSpec::new(gates)?;
        let omega = qnn_frequency_set(&spec);
        println!(
            "{label}: Ω = {:?}{}",
            omega.values,
            if omega.integer { "" } else { "  (non-integer spectrum)" }
        );
    }
    println!();

    // A 3-qubit model with random trainables: the extracted Fourier series
    // lives exactly on Ω = {−3, …, 3}.
    let n = 3usize;
    let dim = 1usize << n;
    let mut rng = StdRng::seed_from_u64(23);
    let trainables: Vec<Array2<Complex64>> = (0..=n).map(|_| random_unitary(dim, &mut rng)).collect();
    let half_z = {
        let mut h = Array2::from_elem((2, 2), Complex64::new(0.0, 0.0));
        h[[0, 0]] = Complex64::new(0.5, 0.0);
        h[[1, 1]] = Complex64::new(-0.5, 0.0);
        h
    };
    let encodings = (0..n).map(|qubit| (qubit, half_z.clone())).collect();
    let mut observable = Array2::from_elem((dim, dim), Complex64::new(0.0, 0.0));
    for idx in 0..dim {
        observable[[idx, idx]] = Complex64::new(if idx & 1 == 0 { 1.0 } else { -1.0 }, 0.0);
    }
    let model = QnnModel::new(n, trainables, encodings, observable)?;

    println!("model values on a coarse grid (2π-periodic):");
    for j in 0..7 {
        let x = j as f64;
        println!("  f({x:.1}) = {:+.5}", qnn_evaluate(&model, x)?);
    }
    let wrapped = qnn_evaluate(&model, 1.0 + 2.0 * std::f64::consts::PI)?;
    println!("  f(1 + 2π) = {wrapped:+.5}\n");

    let coeffs = qnn_extract_spectrum(&model, 5)?;
    println!("extracted Fourier coefficients (band Ω = [-3, 3], sampled to k = ±5):");
    for (k, c) in &coeffs {
        let marker = if k.unsigned_abs() <= 3 { "in band " } else { "out of band" };
        println!("  k = {k:>2}  |c| = {:>9.2e}  {marker}", c.norm());
    }
    Ok(())
}
