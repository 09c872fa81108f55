//! Crate-wide error type.

use num_bigint::BigUint;

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two operands live on a different number of coordinates.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Two operands belong to different groups.
    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    /// Invalid construction parameters for a group, element or frequency.
    #[error("invalid group data: {0}")]
    InvalidGroup(String),

    /// A dense table would exceed the addressable guard.
    #[error("dense operations are limited to {max} entries, {group} has {order}")]
    DenseGuard {
        group: String,
        order: BigUint,
        max: usize,
    },

    /// Function values contain NaN or infinities.
    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },

    /// A vector that must be a probability distribution is not one.
    #[error("not a probability distribution: {0}")]
    NotAProbability(String),

    /// A real-valued function was required.
    #[error("function must be real-valued: {0}")]
    NotReal(String),

    /// A dataset with no samples.
    #[error("dataset is empty")]
    EmptyDataset,

    /// A filter is malformed or incompatible with the spectrum it is applied to.
    #[error("invalid filter: {0}")]
    InvalidFilter(String),

    /// Clipping the negative mass of a smoothed model would exceed the budget.
    #[error("filter produced {total:.3e} of negative probability mass")]
    NegativeMass { total: f64 },

    /// The autoregressive sampler met a negative conditional probability.
    #[error("negative conditional probability after prefix '{prefix}'")]
    NegativeConditional { prefix: String },

    /// A bandlimited frequency set is larger than the configured budget.
    #[error("frequency budget exceeded: band requires {count} coefficients, budget is {budget}")]
    BudgetExceeded { count: BigUint, budget: usize },

    /// Postselection succeeded with probability below the cutoff.
    #[error("postselection success probability {prob:.3e} is below {min:.3e}")]
    ZeroSuccessProbability { prob: f64, min: f64 },

    /// Conditioning removed all posterior mass.
    #[error("conditioning produced zero posterior mass")]
    ZeroPosteriorMass,

    /// A state vector operation was asked of an unsuitable state.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// A matrix that must be Hermitian is not.
    #[error("matrix is not Hermitian: residual {residual:.3e}")]
    NotHermitian { residual: f64 },

    /// A matrix that must be unitary is not.
    #[error("matrix is not unitary: residual {residual:.3e}")]
    NotUnitary { residual: f64 },

    /// Model construction parameters are inconsistent.
    #[error("invalid model: {0}")]
    InvalidModel(String),

    /// Not a valid integer partition.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Not a valid permutation.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// A symmetric-group operation exceeded its scale guard.
    #[error("symmetric group guard: n = {n} exceeds the limit {max}")]
    SnGuard { n: usize, max: usize },

    /// A statevector operation exceeded its qubit guard.
    #[error("{n} qubits exceed the {max}-qubit statevector guard")]
    QubitGuard { n: usize, max: usize },

    /// A permutation pattern is malformed.
    #[error("malformed pattern: {0}")]
    MalformedPattern(String),

    /// Text input could not be parsed.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An invalid argument outside the categories above.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
