//! Numeric tolerances, centralised so every module and test pins the same
//! constants.

/// Per-entry agreement of a transform round-trip (and Parseval residual).
pub const TRANSFORM_ROUNDTRIP: f64 = 1e-12;

/// Agreement between a fast transform path and the naive character sum.
pub const FAST_PATH_MATCH: f64 = 1e-12;

/// Agreement between spectral and brute-force convolution (and MMD routes).
pub const CONVOLUTION_MATCH: f64 = 1e-10;

/// Total-mass slack accepted for a probability vector.
pub const PROBABILITY_SUM: f64 = 1e-9;

/// Total negative mass a filter output may carry before it is rejected.
pub const NEGATIVE_CLIP_BUDGET: f64 = 1e-9;

/// Norm slack accepted for a state vector.
pub const STATE_NORM: f64 = 1e-10;

/// Postselection success probability below this is treated as failure.
pub const MIN_SUCCESS_PROBABILITY: f64 = 1e-12;

/// Posterior mass below this fails a conditioning step.
pub const MIN_POSTERIOR_MASS: f64 = 1e-12;

/// Residual accepted for unitarity/Hermiticity checks on small matrices.
pub const MATRIX_RESIDUAL: f64 = 1e-10;

/// Residual accepted for irrep orthogonality and homomorphism checks.
pub const IRREP_RESIDUAL: f64 = 1e-10;

/// Off-diagonal/spread residual for class-function Fourier coefficients.
pub const CLASS_DIAGONALITY: f64 = 1e-9;

/// Magnitude below which an extracted Fourier coefficient counts as absent.
pub const OUT_OF_BAND: f64 = 1e-9;

/// Slack when validating that a conditional probability is nonnegative.
pub const CONDITIONAL_SLACK: f64 = 1e-12;

/// Imaginary part accepted when a complex value must be real.
pub const REALNESS: f64 = 1e-9;
