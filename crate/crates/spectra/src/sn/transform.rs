//! Matrix-valued Fourier transforms over `𝕊ₙ` and group convolution.

use ndarray::Array2;

use super::yor::IrrepTable;
use super::{enumerate, factorial, plain_changes_walk, Partition, Permutation, SnScale, SN_HARD_GUARD};
use crate::error::Error;
use crate::tolerance;
use crate::Result;

/// A real-valued function on `𝕊ₙ`, indexed by lexicographic one-line rank.
#[derive(Debug, Clone, PartialEq)]
pub struct SnFunction {
    n: usize,
    values: Vec<f64>,
}

impl SnFunction {
    /// Wrap a full table of `n!` values.
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        if n == 0 || n > SN_HARD_GUARD {
            return Err(Error::SnGuard { n, max: SN_HARD_GUARD });
        }
        if values.len() != factorial(n) {
            return Err(Error::DimensionMismatch { expected: factorial(n), got: values.len() });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { n, values })
    }

    /// The zero function.
    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(n, vec![0.0; factorial(n)])
    }

    /// Point mass of weight 1 at a permutation.
    pub fn delta(at: &Permutation) -> Result<Self> {
        let mut f = Self::zeros(at.n())?;
        f.values[at.lex_rank()] = 1.0;
        Ok(f)
    }

    /// The uniform distribution `1/n!`.
    pub fn uniform(n: usize) -> Result<Self> {
        let total = factorial(n);
        Self::new(n, vec![1.0 / total as f64; total])
    }

    /// The group size parameter.
    pub fn n(&self) -> usize {
        self.n
    }

    /// All values in lexicographic-rank order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at a permutation.
    pub fn value(&self, p: &Permutation) -> Result<f64> {
        if p.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: p.n() });
        }
        Ok(self.values[p.lex_rank()])
    }

    /// Mutable access for construction sites inside the crate.
    pub(crate) fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// Total mass `Σ_π f(π)`.
    pub fn total_mass(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Checks the function is a probability distribution.
    pub fn check_probability(&self) -> Result<()> {
        if self.values.iter().any(|&v| v < -tolerance::PROBABILITY_SUM) {
            return Err(Error::NotAProbability("negative value".into()));
        }
        let mass = self.total_mass();
        if (mass - 1.0).abs() > tolerance::PROBABILITY_SUM {
            return Err(Error::NotAProbability(format!("total mass {mass}")));
        }
        Ok(())
    }
}

/// Matrix-valued Fourier coefficients, one per partition of `n`.
#[derive(Debug, Clone)]
pub struct SnSpectrum {
    n: usize,
    partitions: Vec<Partition>,
    coeffs: Vec<Array2<f64>>,
}

impl SnSpectrum {
    /// The group size parameter.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The partitions indexing the coefficients, `(n)` first.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Coefficient matrices in partition order.
    pub fn coefficients(&self) -> &[Array2<f64>] {
        &self.coeffs
    }

    /// Coefficient matrix of one partition.
    pub fn coefficient(&self, partition: &Partition) -> Option<&Array2<f64>> {
        self.partitions.iter().position(|p| p == partition).map(|i| &self.coeffs[i])
    }

    /// Mutable coefficient access inside the crate (spectral fast paths).
    pub(crate) fn coefficients_mut(&mut self) -> &mut [Array2<f64>] {
        &mut self.coeffs
    }

    /// Assemble a spectrum from coefficient matrices in partition order.
    pub fn from_parts(
        n: usize,
        partitions: Vec<Partition>,
        coeffs: Vec<Array2<f64>>,
    ) -> Result<Self> {
        if partitions.len() != coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: partitions.len(),
                got: coeffs.len(),
            });
        }
        for (p, c) in partitions.iter().zip(&coeffs) {
            let d = p.dimension();
            if c.nrows() != d || c.ncols() != d {
                return Err(Error::InvalidPartition(format!(
                    "coefficient of {p} must be {d}x{d}"
                )));
            }
        }
        Ok(Self { n, partitions, coeffs })
    }

    /// `Σ_λ d_λ ‖f̂(λ)‖²_F`; equals `‖f‖²₂` under the balanced convention.
    pub fn plancherel_energy(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|m| m.nrows() as f64 * m.iter().map(|v| v * v).sum::<f64>())
            .sum()
    }
}

fn lex_rank_of(images: &[usize]) -> usize {
    let n = images.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller_later = images[i + 1..].iter().filter(|&&v| v < images[i]).count();
        rank = rank * (n - i) + smaller_later;
    }
    rank
}

/// Forward transform `f̂(λ) = (1/√n!) Σ_π f(π) σ_λ(π)ᵀ`.
///
/// Walks the plain-changes order so each step updates every irrep matrix by
/// one sparse generator instead of rebuilding products per permutation.
pub fn sn_fourier(f: &SnFunction, table: &IrrepTable, scale: SnScale) -> Result<SnSpectrum> {
    if f.n() != table.n() {
        return Err(Error::DimensionMismatch { expected: table.n(), got: f.n() });
    }
    scale.check(f.n())?;
    let n = f.n();
    let mut mats: Vec<Array2<f64>> = table.dims().iter().map(|&d| Array2::eye(d)).collect();
    let mut coeffs: Vec<Array2<f64>> =
        table.dims().iter().map(|&d| Array2::zeros((d, d))).collect();
    plain_changes_walk(n, |perm, swap| {
        if let Some(j) = swap {
            for (idx, m) in mats.iter_mut().enumerate() {
                table.apply_generator(idx, j, m);
            }
        }
        let value = f.values()[lex_rank_of(perm)];
        if value != 0.0 {
            for (c, m) in coeffs.iter_mut().zip(&mats) {
                c.scaled_add(value, &m.t());
            }
        }
    });
    let norm = 1.0 / (factorial(n) as f64).sqrt();
    for c in coeffs.iter_mut() {
        c.mapv_inplace(|v| v * norm);
    }
    Ok(SnSpectrum { n, partitions: table.partitions().to_vec(), coeffs })
}

/// Inverse transform `f(π) = (1/√n!) Σ_λ d_λ tr(f̂(λ) σ_λ(π))`.
pub fn sn_inverse_fourier(s: &SnSpectrum, table: &IrrepTable, scale: SnScale) -> Result<SnFunction> {
    if s.n() != table.n() {
        return Err(Error::DimensionMismatch { expected: table.n(), got: s.n() });
    }
    if s.partitions() != table.partitions() {
        return Err(Error::InvalidPartition("spectrum and table index different irreps".into()));
    }
    scale.check(s.n())?;
    let n = s.n();
    let mut mats: Vec<Array2<f64>> = table.dims().iter().map(|&d| Array2::eye(d)).collect();
    let mut values = vec![0.0f64; factorial(n)];
    let norm = 1.0 / (factorial(n) as f64).sqrt();
    plain_changes_walk(n, |perm, swap| {
        if let Some(j) = swap {
            for (idx, m) in mats.iter_mut().enumerate() {
                table.apply_generator(idx, j, m);
            }
        }
        let mut acc = 0.0;
        for (coeff, m) in s.coefficients().iter().zip(&mats) {
            let d = m.nrows();
            let mut trace = 0.0;
            for i in 0..d {
                for j in 0..d {
                    trace += coeff[[i, j]] * m[[j, i]];
                }
            }
            acc += d as f64 * trace;
        }
        values[lex_rank_of(perm)] = acc * norm;
    });
    SnFunction::new(n, values)
}

/// Group convolution `(f ⋆ g)(x) = Σ_y f(x ∘ y⁻¹) g(y)` by the defining
/// `O((n!)²)` sum.
///
/// Under the balanced convention its transform is `√n! · ĝ(λ) f̂(λ)`, with
/// the right operand's coefficient multiplying from the left; the ordering
/// is pinned on `𝕊₃` by test.
pub fn sn_convolve(f: &SnFunction, g: &SnFunction) -> Result<SnFunction> {
    if f.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: f.n(), got: g.n() });
    }
    let n = f.n();
    let perms = enumerate(n)?;
    let mut out = vec![0.0f64; factorial(n)];
    for (y_rank, y) in perms.iter().enumerate() {
        let gy = g.values()[y_rank];
        if gy == 0.0 {
            continue;
        }
        let y_inv = y.inverse();
        for (x_rank, x) in perms.iter().enumerate() {
            // x ∘ y⁻¹ without allocating a Permutation.
            let rank = {
                let images: Vec<usize> =
                    y_inv.images().iter().map(|&i| x.images()[i]).collect();
                lex_rank_of(&images)
            };
            out[x_rank] += f.values()[rank] * gy;
        }
    }
    SnFunction::new(n, out)
}
