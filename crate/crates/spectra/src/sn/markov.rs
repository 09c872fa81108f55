//! Diffusion/conditioning Markov models over `𝕊ₙ`.
//!
//! Diffusion convolves with a mixture of the identity and all transpositions
//! (a lazy random walk on the Cayley graph). The kernel is a class function,
//! so its Fourier coefficients are scalar matrices and each diffusion step is
//! a per-irrep scalar multiplication in Fourier space. Conditioning is a
//! pointwise Bayesian update in direct space.

use std::collections::HashMap;

use super::transform::{sn_fourier, sn_inverse_fourier, SnFunction};
use super::yor::IrrepTable;
use super::{enumerate, factorial, Partition, Permutation, SnScale};
use crate::error::Error;
use crate::tolerance;
use crate::Result;

/// The diffusion kernel: mass `p` on the identity, the rest spread evenly
/// over all transpositions.
pub fn diffusion_kernel(n: usize, p: f64) -> Result<SnFunction> {
    if !(0.0..=1.0).contains(&p) || !p.is_finite() {
        return Err(Error::InvalidArgument(format!("identity mass {p} outside [0, 1]")));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("diffusion needs n >= 2".into()));
    }
    let mut kernel = SnFunction::zeros(n)?;
    kernel.values_mut()[Permutation::identity(n).lex_rank()] = p;
    let pair_count = (n * (n - 1) / 2) as f64;
    let each = (1.0 - p) / pair_count;
    for i in 0..n {
        for j in i + 1..n {
            let t = Permutation::transposition(n, i, j)?;
            kernel.values_mut()[t.lex_rank()] = each;
        }
    }
    Ok(kernel)
}

/// True when the function is constant on conjugacy classes (cycle types).
pub fn is_class_function(f: &SnFunction) -> bool {
    let mut per_class: HashMap<Vec<usize>, f64> = HashMap::new();
    let perms = match enumerate(f.n()) {
        Ok(p) => p,
        Err(_) => return false,
    };
    for (rank, perm) in perms.iter().enumerate() {
        let key = perm.cycle_type().parts().to_vec();
        let value = f.values()[rank];
        match per_class.get(&key) {
            Some(&seen) => {
                let scale = seen.abs().max(value.abs()).max(1.0);
                if (seen - value).abs() > 1e-12 * scale {
                    return false;
                }
            }
            None => {
                per_class.insert(key, value);
            }
        }
    }
    true
}

/// Largest deviation of the Fourier coefficients from scalar matrices:
/// the maximum over irreps of off-diagonal magnitude and diagonal spread.
/// Class functions stay below [`tolerance::CLASS_DIAGONALITY`].
pub fn class_diagonality_check(f: &SnFunction, table: &IrrepTable, scale: SnScale) -> Result<f64> {
    let spectrum = sn_fourier(f, table, scale)?;
    let mut residual = 0.0f64;
    for coeff in spectrum.coefficients() {
        let d = coeff.nrows();
        let mut diag_min = f64::INFINITY;
        let mut diag_max = f64::NEG_INFINITY;
        for i in 0..d {
            diag_min = diag_min.min(coeff[[i, i]]);
            diag_max = diag_max.max(coeff[[i, i]]);
            for j in 0..d {
                if i != j {
                    residual = residual.max(coeff[[i, j]].abs());
                }
            }
        }
        residual = residual.max(diag_max - diag_min);
    }
    Ok(residual)
}

/// Per-irrep scalar multipliers of one diffusion step: the convolution
/// theorem factor `√n!` cancels the kernel's normalisation, leaving
/// `m_λ = p + (1−p) · s_λ / C(n,2)` where `s_λ·I = Σ_τ σ_λ(τ)` is the
/// transposition class sum (a scalar by Schur's lemma).
fn diffusion_multipliers(table: &IrrepTable, p: f64) -> Result<Vec<f64>> {
    let n = table.n();
    let pair_count = (n * (n - 1) / 2) as f64;
    let mut multipliers = Vec::with_capacity(table.partitions().len());
    for idx in 0..table.partitions().len() {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                let t = Permutation::transposition(n, i, j)?;
                s += table.irrep(idx, &t)?[[0, 0]];
            }
        }
        multipliers.push(p + (1.0 - p) * s / pair_count);
    }
    Ok(multipliers)
}

/// One diffusion step through Fourier space: transform, scale each `f̂(λ)`
/// by the kernel's scalar, transform back.
pub fn diffuse_spectral(
    f: &SnFunction,
    p: f64,
    table: &IrrepTable,
    scale: SnScale,
) -> Result<SnFunction> {
    if !(0.0..=1.0).contains(&p) || !p.is_finite() {
        return Err(Error::InvalidArgument(format!("identity mass {p} outside [0, 1]")));
    }
    let multipliers = diffusion_multipliers(table, p)?;
    let mut spectrum = sn_fourier(f, table, scale)?;
    for (coeff, m) in spectrum.coefficients_mut().iter_mut().zip(&multipliers) {
        coeff.mapv_inplace(|v| v * m);
    }
    sn_inverse_fourier(&spectrum, table, scale)
}

/// One diffusion step by brute-force convolution with the kernel.
pub fn diffuse_brute(f: &SnFunction, p: f64) -> Result<SnFunction> {
    super::sn_convolve(f, &diffusion_kernel(f.n(), p)?)
}

/// Bayesian update: pointwise product with a nonnegative likelihood,
/// renormalised to unit mass.
pub fn condition(prior: &SnFunction, likelihood: &SnFunction) -> Result<SnFunction> {
    if prior.n() != likelihood.n() {
        return Err(Error::DimensionMismatch { expected: prior.n(), got: likelihood.n() });
    }
    prior.check_probability()?;
    if likelihood.values().iter().any(|&v| v < 0.0) {
        return Err(Error::InvalidArgument("likelihood must be nonnegative".into()));
    }
    let product: Vec<f64> = prior
        .values()
        .iter()
        .zip(likelihood.values())
        .map(|(a, b)| a * b)
        .collect();
    let mass: f64 = product.iter().sum();
    if mass <= tolerance::MIN_POSTERIOR_MASS {
        return Err(Error::ZeroPosteriorMass);
    }
    SnFunction::new(prior.n(), product.into_iter().map(|v| v / mass).collect())
}

/// One step of the Markov pipeline.
#[derive(Debug, Clone)]
pub enum Step {
    /// Convolve with the diffusion kernel of identity mass `p`.
    Diffuse(f64),
    /// Multiply by a likelihood and renormalise.
    Condition(SnFunction),
}

/// Run the Markov pipeline from `δ_identity`.
///
/// Diffusion uses the spectral fast path. A pipeline of diffusion steps only
/// stays scalar per irrep throughout, so it runs at any `n ≤ 8` via the
/// character sum; pipelines with conditioning steps need full transforms and
/// obey the scale guard.
pub fn markov_model(
    n: usize,
    steps: &[Step],
    table: &IrrepTable,
    scale: SnScale,
) -> Result<SnFunction> {
    if table.n() != n {
        return Err(Error::DimensionMismatch { expected: n, got: table.n() });
    }
    for step in steps {
        match step {
            Step::Diffuse(p) if !(0.0..=1.0).contains(p) || !p.is_finite() => {
                return Err(Error::InvalidArgument(format!("identity mass {p} outside [0, 1]")))
            }
            Step::Condition(likelihood) if likelihood.n() != n => {
                return Err(Error::DimensionMismatch { expected: n, got: likelihood.n() })
            }
            _ => {}
        }
    }

    let diffusion_only = steps.iter().all(|s| matches!(s, Step::Diffuse(_)));
    if diffusion_only && n >= 2 {
        return diffusion_chain(n, steps, table);
    }

    let mut state = SnFunction::delta(&Permutation::identity(n))?;
    for step in steps {
        state = match step {
            Step::Diffuse(p) => diffuse_spectral(&state, *p, table, scale)?,
            Step::Condition(likelihood) => condition(&state, likelihood)?,
        };
    }
    Ok(state)
}

/// Pure-diffusion pipeline: `δ_e` has spectrum `(1/√n!g)·I` per irrep, every
/// step multiplies by a scalar, and the inverse transform collapses to a
/// character sum `f(π) = (1/n!) Σ_λ d_λ (Π m_λ) χ_λ(π)`, evaluated per cycle
/// type.
fn diffusion_chain(n: usize, steps: &[Step], table: &IrrepTable) -> Result<SnFunction> {
    let mut accumulated = vec![1.0f64; table.partitions().len()];
    for step in steps {
        let Step::Diffuse(p) = step else { unreachable!("checked diffusion-only") };
        for (acc, m) in accumulated.iter_mut().zip(diffusion_multipliers(table, *p)?) {
            *acc *= m;
        }
    }
    // Characters per cycle type via one representative each.
    let mut class_value: HashMap<Vec<usize>, f64> = HashMap::new();
    for class in super::partitions(n)? {
        let representative = class_representative(&class);
        let mut value = 0.0;
        for (idx, &dim) in table.dims().iter().enumerate() {
            let m = table.irrep(idx, &representative)?;
            let trace: f64 = (0..dim).map(|i| m[[i, i]]).sum();
            value += dim as f64 * accumulated[idx] * trace;
        }
        class_value.insert(class.parts().to_vec(), value / factorial(n) as f64);
    }
    let mut out = SnFunction::zeros(n)?;
    for (rank, perm) in enumerate(n)?.iter().enumerate() {
        out.values_mut()[rank] = class_value[perm.cycle_type().parts()];
    }
    Ok(out)
}

/// Canonical permutation with the given cycle type: consecutive blocks of
/// cyclic shifts.
fn class_representative(class: &Partition) -> Permutation {
    let n = class.n();
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in class.parts() {
        for offset in 0..len {
            images[start + offset] = start + (offset + 1) % len;
        }
        start += len;
    }
    Permutation::from_images(images).expect("cycle blocks form a bijection")
}
