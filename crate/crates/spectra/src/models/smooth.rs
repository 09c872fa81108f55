//! Dense empirical smoothing: empirical distribution → filter in Fourier
//! space → validated probability model.

use num_complex::Complex64;

use super::dataset::Dataset;
use super::filter::{apply_filter, FilterSpec};
use super::BitstringModel;
use crate::error::Error;
use crate::group::{fourier, inverse_fourier, DenseFunction, Frequency, GroupElement, GroupSpec, Spectrum};
use crate::tolerance;
use crate::Result;

/// Empirical distribution `p_X(x) = count(x ∈ X)/|X|` as a dense table.
pub fn empirical_distribution(dataset: &Dataset) -> Result<DenseFunction> {
    let group = GroupSpec::boolean(dataset.bits())?;
    let len = group.dense_len()?;
    let mut counts = vec![0.0f64; len];
    for s in dataset.samples() {
        counts[group.pack(s)?] += 1.0;
    }
    let total = dataset.len() as f64;
    for c in counts.iter_mut() {
        *c /= total;
    }
    DenseFunction::from_real(group, &counts)
}

/// A single empirical Fourier coefficient
/// `(1/(√2ⁿ·|X|)) Σ_{x∈X} (−1)^{k·x}`, in `O(|X|·n)` with no dense table.
pub fn empirical_coefficient(dataset: &Dataset, k: &Frequency) -> Result<f64> {
    if k.len() != dataset.bits() {
        return Err(Error::DimensionMismatch { expected: dataset.bits(), got: k.len() });
    }
    let mut acc = 0i64;
    for x in dataset.samples() {
        let parity: u32 = x
            .coords()
            .iter()
            .zip(k.coords())
            .map(|(&a, &b)| a & b)
            .sum::<u32>()
            & 1;
        acc += if parity == 0 { 1 } else { -1 };
    }
    let norm = ((1u64 << dataset.bits()) as f64).sqrt();
    Ok(acc as f64 / (norm * dataset.len() as f64))
}

/// Clip tiny negative values (within the clipping budget) to zero and
/// renormalise; reject anything more negative as an invalid filter output.
pub fn as_distribution(signed_values: &[f64]) -> Result<Vec<f64>> {
    let negative_total: f64 = signed_values.iter().filter(|&&v| v < 0.0).map(|v| -v).sum();
    if negative_total > tolerance::NEGATIVE_CLIP_BUDGET {
        return Err(Error::NegativeMass { total: negative_total });
    }
    let clipped: Vec<f64> = signed_values.iter().map(|&v| v.max(0.0)).collect();
    let mass: f64 = clipped.iter().sum();
    if mass <= 0.0 {
        return Err(Error::NegativeMass { total: negative_total });
    }
    Ok(clipped.into_iter().map(|v| v / mass).collect())
}

/// A smoothed model: the filtered spectrum, its direct-space values before
/// and after nonnegativity repair, and the provenance of the training data.
#[derive(Debug, Clone)]
pub struct SmoothedModel {
    bits: usize,
    filter: FilterSpec,
    signed_values: Vec<f64>,
    distribution: Vec<f64>,
    spectrum: Spectrum,
    dataset_digest: String,
}

impl SmoothedModel {
    /// Bits per sample.
    pub fn bits(&self) -> usize {
        self.bits
    }

    /// The filter that produced the model.
    pub fn filter(&self) -> &FilterSpec {
        &self.filter
    }

    /// Direct-space values straight from the inverse transform, possibly
    /// carrying float-level negatives.
    pub fn signed_values(&self) -> &[f64] {
        &self.signed_values
    }

    /// The validated probability vector, indexed by packed index.
    pub fn distribution(&self) -> &[f64] {
        &self.distribution
    }

    /// The filtered spectrum.
    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// SHA-256 digest of the training data.
    pub fn dataset_digest(&self) -> &str {
        &self.dataset_digest
    }

    /// Rebuild a model from a stored probability table (for model files).
    pub fn from_distribution(
        bits: usize,
        filter: FilterSpec,
        distribution: Vec<f64>,
        dataset_digest: String,
    ) -> Result<Self> {
        let group = GroupSpec::boolean(bits)?;
        let f = DenseFunction::from_real(group, &distribution)?;
        f.check_probability()?;
        let spectrum = fourier(&f);
        Ok(Self {
            bits,
            filter,
            signed_values: distribution.clone(),
            distribution,
            spectrum,
            dataset_digest,
        })
    }
}

impl BitstringModel for SmoothedModel {
    fn bits(&self) -> usize {
        self.bits
    }

    fn prob(&self, x: &GroupElement) -> Result<f64> {
        let group = GroupSpec::boolean(self.bits)?;
        Ok(self.distribution[group.pack(x)?])
    }
}

/// Run the full smoothing pipeline: empirical distribution, forward
/// transform, filter, inverse transform, nonnegativity repair.
///
/// Filters must leave the zero-frequency coefficient at `1/√2ⁿ` (unit mass);
/// anything else is rejected before the inverse transform.
pub fn smooth(dataset: &Dataset, filter: &FilterSpec) -> Result<SmoothedModel> {
    filter.validate(dataset.bits())?;
    let empirical = empirical_distribution(dataset)?;
    let spectrum = fourier(&empirical);
    let filtered = apply_filter(&spectrum, filter)?;

    let expected_mass = 1.0 / ((1u64 << dataset.bits()) as f64).sqrt();
    let zero_coeff = filtered.values()[0];
    if (zero_coeff - Complex64::new(expected_mass, 0.0)).norm() > tolerance::PROBABILITY_SUM {
        return Err(Error::InvalidFilter(format!(
            "filter moved the zero-frequency coefficient to {zero_coeff} (expected {expected_mass}); \
             total mass is no longer 1"
        )));
    }

    let direct = inverse_fourier(&filtered);
    let mut signed_values = Vec::with_capacity(direct.values().len());
    for (i, v) in direct.values().iter().enumerate() {
        if v.im.abs() > tolerance::REALNESS {
            return Err(Error::InvalidFilter(format!(
                "filter produced non-real direct-space value {v} at index {i}"
            )));
        }
        signed_values.push(v.re);
    }
    let distribution = as_distribution(&signed_values)?;
    Ok(SmoothedModel {
        bits: dataset.bits(),
        filter: filter.clone(),
        signed_values,
        distribution,
        spectrum: filtered,
        dataset_digest: dataset.digest(),
    })
}
