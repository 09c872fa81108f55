//! The empirical-smoothing generative model over bitstrings and its samplers.
//!
//! The pipeline: tabulate the empirical distribution of a dataset, move to
//! Fourier space, attenuate high-order coefficients with a [`FilterSpec`],
//! move back, validate and sample. The order-decay filter is exactly
//! convolution with the noise kernel, which is what lets [`kde_sample`] draw
//! from the same law at any width by per-bit flips, with no dense table.

mod dataset;
mod filter;
mod likelihood;
mod sample;
mod smooth;
mod sparse;

pub use dataset::Dataset;
pub use filter::{apply_filter, FilterSpec};
pub use likelihood::{fit_theta, log_likelihood, log_likelihood_floored, LogLikelihood, ThetaFit};
pub use sample::{exact_sample, kde_sample, noise_kernel, noise_kernel_function, sample_indices};
pub use smooth::{as_distribution, empirical_coefficient, empirical_distribution, smooth, SmoothedModel};
pub use sparse::{
    autoregressive_sample, sparse_marginal, sparse_model, sparse_model_with_budget, sparse_prob,
    SparseModel, DEFAULT_FREQUENCY_BUDGET,
};

use crate::group::GroupElement;
use crate::Result;

/// Anything that assigns probabilities to bitstrings; the shared face of the
/// dense and sparse models for likelihood evaluation.
pub trait BitstringModel {
    /// Number of bits per sample.
    fn bits(&self) -> usize;

    /// Model probability of a single bitstring.
    fn prob(&self, x: &GroupElement) -> Result<f64>;
}
