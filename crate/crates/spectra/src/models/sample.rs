//! Seeded samplers: inverse-CDF over a dense table and the noise-kernel
//! sampler that needs no table at all.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::dataset::Dataset;
use super::smooth::SmoothedModel;
use crate::error::Error;
use crate::group::{DenseFunction, GroupElement, GroupSpec};
use crate::Result;

/// Draw `count` packed indices i.i.d. from a probability table by inverse CDF.
///
/// Deterministic for a fixed seed; the stream is a ChaCha8 cipher stream, so
/// it is stable across platforms.
pub fn sample_indices(probabilities: &[f64], seed: u64, count: usize) -> Vec<usize> {
    let mut cdf = Vec::with_capacity(probabilities.len());
    let mut acc = 0.0;
    for &p in probabilities {
        acc += p.max(0.0);
        cdf.push(acc);
    }
    let total = acc;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let u: f64 = rng.random::<f64>() * total;
            cdf.partition_point(|&c| c <= u).min(probabilities.len() - 1)
        })
        .collect()
}

/// Draw `count` bitstrings from a smoothed model's distribution.
pub fn exact_sample(model: &SmoothedModel, seed: u64, count: usize) -> Result<Vec<GroupElement>> {
    let group = GroupSpec::boolean(model.bits())?;
    sample_indices(model.distribution(), seed, count)
        .into_iter()
        .map(|idx| group.unpack(idx))
        .collect()
}

/// Noise-kernel sampler: draw a training point uniformly (with multiplicity)
/// and flip each bit independently with probability `theta`.
///
/// The law of each draw is exactly `smooth(X, OrderDecay(theta))`, but no
/// dense table is built, so this works at any width.
pub fn kde_sample(
    dataset: &Dataset,
    theta: f64,
    seed: u64,
    count: usize,
) -> Result<Vec<GroupElement>> {
    if !(0.0..=1.0).contains(&theta) || !theta.is_finite() {
        return Err(Error::InvalidArgument(format!("theta {theta} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = dataset.samples();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let base = &samples[rng.random_range(0..samples.len())];
        let coords = base
            .coords()
            .iter()
            .map(|&bit| {
                let flip = rng.random::<f64>() < theta;
                bit ^ u32::from(flip)
            })
            .collect();
        out.push(GroupElement::from_coords(coords));
    }
    Ok(out)
}

/// The noise kernel `κ(x, y) = θ^{d_H(x,y)} (1−θ)^{n−d_H(x,y)}`.
pub fn noise_kernel(x: &GroupElement, y: &GroupElement, theta: f64) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), got: y.len() });
    }
    if !(0.0..=1.0).contains(&theta) || !theta.is_finite() {
        return Err(Error::InvalidArgument(format!("theta {theta} outside [0, 1]")));
    }
    let distance = x
        .coords()
        .iter()
        .zip(y.coords())
        .filter(|(a, b)| a != b)
        .count();
    let n = x.len();
    Ok(theta.powi(distance as i32) * (1.0 - theta).powi((n - distance) as i32))
}

/// The kernel's one-argument stationary form `φ(z) = θ^{|z|}(1−θ)^{n−|z|}` as
/// a dense function, for convolution and MMD use.
pub fn noise_kernel_function(bits: usize, theta: f64) -> Result<DenseFunction> {
    if !(0.0..=1.0).contains(&theta) || !theta.is_finite() {
        return Err(Error::InvalidArgument(format!("theta {theta} outside [0, 1]")));
    }
    let group = GroupSpec::boolean(bits)?;
    let len = group.dense_len()?;
    let values: Vec<f64> = (0..len)
        .map(|idx| {
            let weight = (idx as u64).count_ones() as i32;
            theta.powi(weight) * (1.0 - theta).powi(bits as i32 - weight)
        })
        .collect();
    DenseFunction::from_real(group, &values)
}
