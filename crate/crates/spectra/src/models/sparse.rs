//! Bandlimited sparse models: filtered empirical coefficients up to a
//! Hamming-weight band, with tractable probabilities, marginals and an
//! autoregressive sampler. No dense table is ever built, so these work far
//! beyond the dense guard.

use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::dataset::Dataset;
use super::filter::FilterSpec;
use super::smooth::empirical_coefficient;
use super::BitstringModel;
use crate::error::Error;
use crate::group::{count_bandlimited_frequencies, Frequency, GroupElement};
use crate::tolerance;
use crate::Result;

/// Default cap on the number of retained frequencies.
pub const DEFAULT_FREQUENCY_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone)]
struct Term {
    /// Sorted bit positions where the frequency is 1.
    support: Vec<u16>,
    /// Filtered empirical coefficient `ĝ(k)·p̂_X(k)`.
    coeff: f64,
}

/// A bandlimited model: every filtered empirical coefficient of order ≤ band.
#[derive(Debug, Clone)]
pub struct SparseModel {
    bits: usize,
    band: usize,
    terms: Vec<Term>,
}

impl SparseModel {
    /// Bits per sample.
    pub fn bits(&self) -> usize {
        self.bits
    }

    /// The retained band (maximum Hamming weight).
    pub fn band(&self) -> usize {
        self.band
    }

    /// Number of retained coefficients.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The retained `(frequency, coefficient)` pairs, materialised on demand.
    pub fn retained(&self) -> Vec<(Frequency, f64)> {
        self.terms
            .iter()
            .map(|t| {
                let support: Vec<usize> = t.support.iter().map(|&b| b as usize).collect();
                (
                    Frequency::from_support(self.bits, &support).expect("support in range"),
                    t.coeff,
                )
            })
            .collect()
    }

    /// Rebuild a model from stored `(support, coefficient)` pairs.
    pub fn from_terms(bits: usize, band: usize, terms: Vec<(Vec<u16>, f64)>) -> Result<Self> {
        for (support, _) in &terms {
            if support.len() > band {
                return Err(Error::InvalidModel(format!(
                    "term of order {} in a band-{band} model",
                    support.len()
                )));
            }
            if support.iter().any(|&b| b as usize >= bits) {
                return Err(Error::InvalidModel("support bit out of range".into()));
            }
        }
        let expected = 1.0 / ((bits as f64) * 0.5).exp2();
        let zero = terms
            .iter()
            .find(|(support, _)| support.is_empty())
            .ok_or_else(|| Error::InvalidModel("missing zero-frequency term".into()))?;
        if (zero.1 - expected).abs() > tolerance::PROBABILITY_SUM {
            return Err(Error::InvalidModel(format!(
                "zero-frequency coefficient {} must be 1/√2ⁿ = {expected}",
                zero.1
            )));
        }
        Ok(Self {
            bits,
            band,
            terms: terms
                .into_iter()
                .map(|(mut support, coeff)| {
                    support.sort_unstable();
                    Term { support, coeff }
                })
                .collect(),
        })
    }

    fn parity(&self, term: &Term, x: &GroupElement) -> f64 {
        let ones = term
            .support
            .iter()
            .filter(|&&bit| x.coords()[bit as usize] == 1)
            .count();
        if ones % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

impl BitstringModel for SparseModel {
    fn bits(&self) -> usize {
        self.bits
    }

    fn prob(&self, x: &GroupElement) -> Result<f64> {
        sparse_prob(self, x)
    }
}

fn enumerate_supports(bits: usize, band: usize) -> Vec<Vec<u16>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<u16>> = vec![Vec::new()];
    for _ in 0..band {
        let mut next = Vec::new();
        for support in &frontier {
            let start = support.last().map(|&b| b + 1).unwrap_or(0);
            for bit in start..bits as u16 {
                let mut grown = support.clone();
                grown.push(bit);
                next.push(grown);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Build a bandlimited model under the default frequency budget.
pub fn sparse_model(dataset: &Dataset, filter: &FilterSpec, band: usize) -> Result<SparseModel> {
    sparse_model_with_budget(dataset, filter, band, DEFAULT_FREQUENCY_BUDGET)
}

/// Build a bandlimited model, rejecting bands whose frequency count exceeds
/// `budget` before any coefficient is computed.
pub fn sparse_model_with_budget(
    dataset: &Dataset,
    filter: &FilterSpec,
    band: usize,
    budget: usize,
) -> Result<SparseModel> {
    let bits = dataset.bits();
    if band > bits {
        return Err(Error::InvalidArgument(format!("band {band} exceeds bit count {bits}")));
    }
    filter.validate(bits)?;
    let count = count_bandlimited_frequencies(bits as u64, band as u64)?;
    if count > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { count, budget });
    }
    let zero_weight = filter.zero_frequency_weight(bits);
    if (zero_weight.re - 1.0).abs() > tolerance::PROBABILITY_SUM
        || zero_weight.im.abs() > tolerance::REALNESS
    {
        return Err(Error::InvalidFilter(format!(
            "filter weight {zero_weight} at the zero frequency breaks normalisation"
        )));
    }

    let mut terms = Vec::new();
    for support in enumerate_supports(bits, band) {
        let positions: Vec<usize> = support.iter().map(|&b| b as usize).collect();
        let k = Frequency::from_support(bits, &positions)?;
        let weight = filter.weight(&k);
        if weight.im.abs() > tolerance::REALNESS {
            return Err(Error::InvalidFilter(
                "sparse models require real filter weights".into(),
            ));
        }
        let coeff = weight.re * empirical_coefficient(dataset, &k)?;
        terms.push(Term { support, coeff });
    }
    Ok(SparseModel { bits, band, terms })
}

/// The truncated character sum
/// `p(x) = (1/√2ⁿ) Σ_{|k| ≤ band} c_k (−1)^{k·x}`.
///
/// Aggressive truncation can make this negative; the value is returned as-is
/// so callers can decide.
pub fn sparse_prob(model: &SparseModel, x: &GroupElement) -> Result<f64> {
    if x.len() != model.bits {
        return Err(Error::DimensionMismatch { expected: model.bits, got: x.len() });
    }
    let norm = 1.0 / ((model.bits as f64) * 0.5).exp2();
    Ok(model
        .terms
        .iter()
        .map(|t| t.coeff * model.parity(t, x))
        .sum::<f64>()
        * norm)
}

/// Marginal probability of the first `prefix.len()` bits (little-endian bit
/// order). Frequencies with support outside the prefix drop out because their
/// character sums over the free bits vanish.
pub fn sparse_marginal(model: &SparseModel, prefix: &[u32]) -> Result<f64> {
    let m = prefix.len();
    if m > model.bits {
        return Err(Error::DimensionMismatch { expected: model.bits, got: m });
    }
    if prefix.iter().any(|&b| b > 1) {
        return Err(Error::InvalidArgument("prefix must be binary".into()));
    }
    // 2^{n−m} / √2ⁿ = 2^{n/2 − m}
    let factor = ((model.bits as f64) * 0.5 - m as f64).exp2();
    let mut acc = 0.0;
    for t in &model.terms {
        if t.support.iter().any(|&bit| bit as usize >= m) {
            continue;
        }
        let ones = t.support.iter().filter(|&&bit| prefix[bit as usize] == 1).count();
        let sign = if ones % 2 == 0 { 1.0 } else { -1.0 };
        acc += t.coeff * sign;
    }
    Ok(acc * factor)
}

/// Sample bit-by-bit from the conditionals of the truncated series, in fixed
/// little-endian bit order. A genuinely negative conditional aborts with the
/// offending prefix.
pub fn autoregressive_sample(
    model: &SparseModel,
    seed: u64,
    count: usize,
) -> Result<Vec<GroupElement>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut prefix: Vec<u32> = Vec::with_capacity(model.bits);
        for _ in 0..model.bits {
            prefix.push(0);
            let p0 = sparse_marginal(model, &prefix)?;
            *prefix.last_mut().expect("nonempty") = 1;
            let p1 = sparse_marginal(model, &prefix)?;
            prefix.pop();

            let prefix_str = || -> String {
                prefix.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
            };
            if p0 < -tolerance::CONDITIONAL_SLACK || p1 < -tolerance::CONDITIONAL_SLACK {
                return Err(Error::NegativeConditional { prefix: prefix_str() });
            }
            let (p0, p1) = (p0.max(0.0), p1.max(0.0));
            let denom = p0 + p1;
            if denom <= 0.0 {
                return Err(Error::NegativeConditional { prefix: prefix_str() });
            }
            let bit = if rng.random::<f64>() < p1 / denom { 1 } else { 0 };
            prefix.push(bit);
        }
        out.push(GroupElement::from_coords(prefix));
    }
    Ok(out)
}
