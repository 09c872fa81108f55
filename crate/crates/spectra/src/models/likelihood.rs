//! Log-likelihood evaluation and 1-D filter fitting by held-out likelihood.

use super::dataset::Dataset;
use super::filter::FilterSpec;
use super::smooth::smooth;
use super::BitstringModel;
use crate::error::Error;
use crate::Result;

/// A log-likelihood together with the count of zero-probability points.
///
/// Zero-probability data keeps MLE semantics exact: the value is `−∞` and the
/// counter says how many points were responsible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogLikelihood {
    /// `Σ_x ln p(x)`; `−∞` when any point has zero probability.
    pub value: f64,
    /// Number of data points with nonpositive model probability.
    pub zero_points: usize,
}

/// `Σ_{x∈X} ln p(x)` under any bitstring model.
pub fn log_likelihood<M: BitstringModel>(model: &M, data: &Dataset) -> Result<LogLikelihood> {
    if model.bits() != data.bits() {
        return Err(Error::DimensionMismatch { expected: model.bits(), got: data.bits() });
    }
    let mut value = 0.0f64;
    let mut zero_points = 0usize;
    for x in data.samples() {
        let p = model.prob(x)?;
        if p <= 0.0 {
            zero_points += 1;
            value = f64::NEG_INFINITY;
        } else if value.is_finite() {
            value += p.ln();
        }
    }
    Ok(LogLikelihood { value, zero_points })
}

/// Log-likelihood with probabilities floored at `floor`, for fitting
/// stability when exact `−∞` values are unhelpful.
pub fn log_likelihood_floored<M: BitstringModel>(
    model: &M,
    data: &Dataset,
    floor: f64,
) -> Result<f64> {
    if model.bits() != data.bits() {
        return Err(Error::DimensionMismatch { expected: model.bits(), got: data.bits() });
    }
    if floor <= 0.0 {
        return Err(Error::InvalidArgument("floor must be positive".into()));
    }
    let mut value = 0.0f64;
    for x in data.samples() {
        value += model.prob(x)?.max(floor).ln();
    }
    Ok(value)
}

/// Result of fitting the order-decay width by held-out likelihood.
#[derive(Debug, Clone)]
pub struct ThetaFit {
    /// The maximiser found on `[0, 1/2]`.
    pub theta: f64,
    /// The grid evaluations `(θ, held-out log-likelihood)`.
    pub curve: Vec<(f64, f64)>,
}

fn held_out(train: &Dataset, valid: &Dataset, theta: f64) -> Result<f64> {
    let model = smooth(train, &FilterSpec::OrderDecay { theta })?;
    Ok(log_likelihood(&model, valid)?.value)
}

/// Fit the order-decay width `θ` on `[0, 1/2]`: evaluate a uniform grid of
/// `grid ≥ 3` points, then refine around the best grid point by
/// golden-section search. Deterministic throughout.
///
/// The search stops at `1/2` because beyond it the filter base `1 − 2θ` turns
/// negative and the filter stops being a decay.
pub fn fit_theta(train: &Dataset, valid: &Dataset, grid: usize) -> Result<ThetaFit> {
    if grid < 3 {
        return Err(Error::InvalidArgument(format!("grid must be at least 3, got {grid}")));
    }
    if train.bits() != valid.bits() {
        return Err(Error::DimensionMismatch { expected: train.bits(), got: valid.bits() });
    }

    let thetas: Vec<f64> = (0..grid).map(|i| 0.5 * i as f64 / (grid - 1) as f64).collect();
    let mut curve = Vec::with_capacity(grid);
    for &theta in &thetas {
        curve.push((theta, held_out(train, valid, theta)?));
    }
    let best = curve
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .1.partial_cmp(&b.1 .1).unwrap_or(std::cmp::Ordering::Equal))
        .map(|(i, _)| i)
        .unwrap_or(0);

    // Golden-section refinement inside the bracket around the best grid point.
    let mut lo = if best == 0 { thetas[0] } else { thetas[best - 1] };
    let mut hi = if best + 1 == grid { thetas[grid - 1] } else { thetas[best + 1] };
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - ratio * (hi - lo);
    let mut b = lo + ratio * (hi - lo);
    let mut fa = held_out(train, valid, a)?;
    let mut fb = held_out(train, valid, b)?;
    for _ in 0..60 {
        if hi - lo < 1e-7 {
            break;
        }
        if fa < fb {
            lo = a;
            a = b;
            fa = fb;
            b = lo + ratio * (hi - lo);
            fb = held_out(train, valid, b)?;
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - ratio * (hi - lo);
            fa = held_out(train, valid, a)?;
        }
    }
    let mut theta = 0.5 * (lo + hi);
    // Keep the grid winner if refinement did not actually improve on it.
    if curve[best].1 > held_out(train, valid, theta)? {
        theta = curve[best].0;
    }
    Ok(ThetaFit { theta, curve })
}
