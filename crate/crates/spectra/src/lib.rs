//! Spectral design of probabilistic models over discrete groups.
//!
//! The crate has four pillars:
//!
//! - [`group`]: finite Abelian group arithmetic (`ℤ₂ⁿ` and `ℤ_d^N`), characters,
//!   forward/inverse Fourier transforms with fast paths, group convolution, and
//!   the statistical readings of Boolean Fourier coefficients (expected parities,
//!   spin moments, interaction effects, MMD).
//! - [`models`]: the empirical-smoothing generative model: transform the
//!   empirical distribution of a bitstring dataset, attenuate high-order
//!   coefficients with a filter, transform back, sample. Includes the
//!   noise-kernel sampler that realises the same law by per-bit flips, sparse
//!   bandlimited models with autoregressive sampling, and filter fitting by
//!   held-out likelihood.
//! - [`quantum`]: a statevector simulation of the same smoothing pipeline on
//!   amplitudes (superposition preparation, Hadamard-layer transform,
//!   ancilla-postselected decay filtering, Born distributions), plus the
//!   amplitude-to-probability autoconvolution identity and frequency-set
//!   analysis of encoding-based quantum models.
//! - [`sn`]: harmonic analysis over the symmetric group at desk scale:
//!   permutations, partitions with dominance order, Young's orthogonal
//!   representation, matrix-valued Fourier transforms, diffusion/conditioning
//!   Markov models, pattern marginals, and lifts from homogeneous spaces.
//!
//! The [`cli`] module backs the `spectra` binary; most capabilities are also
//! demonstrated by a runnable example under `examples/`.
//!
//! All transforms use the balanced `1/√|G|` normalisation on both directions,
//! so Parseval holds with unit constant and the Walsh transform is self-inverse.

#![forbid(unsafe_code)]

pub mod cli;
pub mod error;
pub mod group;
pub mod models;
pub mod quantum;
pub mod sn;
pub mod tolerance;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
