//! Spectral filters: per-frequency multipliers applied in Fourier space.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::Error;
use crate::group::{Frequency, Spectrum};
use crate::Result;

/// A per-frequency multiplier `ĝ(k)`.
#[derive(Debug, Clone, PartialEq)]
pub enum FilterSpec {
    /// `ĝ(k) = (1 − 2θ)^{|k|}` with `θ ∈ [0, 1]`; the noise-kernel filter.
    /// At `θ = 1/2` the convention `0⁰ = 1` keeps the zero frequency intact.
    OrderDecay { theta: f64 },
    /// One weight per Hamming-weight class; `weights[m]` scales order-`m`
    /// coefficients, so the vector must have length `n + 1`.
    PerOrder { weights: Vec<f64> },
    /// Explicit per-frequency multipliers; frequencies not present keep their
    /// coefficient (multiplier 1).
    PerFrequency { weights: BTreeMap<Frequency, Complex64> },
}

impl FilterSpec {
    /// Validate the filter for functions on `bits` bits.
    pub fn validate(&self, bits: usize) -> Result<()> {
        match self {
            FilterSpec::OrderDecay { theta } => {
                if !(0.0..=1.0).contains(theta) || !theta.is_finite() {
                    return Err(Error::InvalidFilter(format!("theta {theta} outside [0, 1]")));
                }
            }
            FilterSpec::PerOrder { weights } => {
                if weights.len() != bits + 1 {
                    return Err(Error::InvalidFilter(format!(
                        "need {} per-order weights, got {}",
                        bits + 1,
                        weights.len()
                    )));
                }
                if weights.iter().any(|w| !w.is_finite()) {
                    return Err(Error::InvalidFilter("non-finite per-order weight".into()));
                }
            }
            FilterSpec::PerFrequency { weights } => {
                for (k, w) in weights {
                    if k.len() != bits {
                        return Err(Error::InvalidFilter(format!(
                            "frequency of {} coordinates in a {bits}-bit filter",
                            k.len()
                        )));
                    }
                    if !w.re.is_finite() || !w.im.is_finite() {
                        return Err(Error::InvalidFilter("non-finite frequency weight".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Multiplier applied to the coefficient at `k`.
    pub fn weight(&self, k: &Frequency) -> Complex64 {
        match self {
            FilterSpec::OrderDecay { theta } => {
                let base = 1.0 - 2.0 * theta;
                // powi(0) = 1 covers the 0⁰ = 1 convention at theta = 1/2.
                Complex64::new(base.powi(k.order_weight() as i32), 0.0)
            }
            FilterSpec::PerOrder { weights } => {
                Complex64::new(weights[k.order_weight()], 0.0)
            }
            FilterSpec::PerFrequency { weights } => {
                weights.get(k).copied().unwrap_or(Complex64::new(1.0, 0.0))
            }
        }
    }

    /// The multiplier at the zero frequency; must be 1 for mass-preserving
    /// smoothing.
    pub fn zero_frequency_weight(&self, bits: usize) -> Complex64 {
        let zero = Frequency::from_support(bits, &[]).expect("zero frequency");
        self.weight(&zero)
    }
}

/// Pointwise product of a spectrum with a filter.
pub fn apply_filter(s: &Spectrum, filter: &FilterSpec) -> Result<Spectrum> {
    filter.validate(s.group().arity())?;
    let values = s
        .values()
        .iter()
        .enumerate()
        .map(|(idx, v)| {
            let k = s.group().unpack_frequency(idx)?;
            Ok(v * filter.weight(&k))
        })
        .collect::<Result<Vec<Complex64>>>()?;
    Spectrum::new(s.group().clone(), values)
}
