//! Statevector simulation of the amplitude-space smoothing pipeline and
//! spectral analysis of encoding-based quantum models.
//!
//! States are dense amplitude vectors over the computational basis. Data
//! qubits occupy the low bits of the index; ancillas, when present, the high
//! bits. Transforms are applied as dense linear maps; this is a simulator,
//! not a circuit compiler.

mod pipeline;
mod qnn;

pub use pipeline::{
    ancilla_decay_filter, autoconvolution_spectrum, born_distribution, cyclic_qft,
    cyclic_qft_inverse, decay_filter_diagonal, prepare_superposition, quantum_smooth, walsh_qft,
};
pub use qnn::{
    qnn_evaluate, qnn_extract_spectrum, qnn_frequency_set, random_unitary, FrequencySet,
    QnnEncodingSpec, QnnModel, QNN_QUBIT_GUARD,
};

use num_complex::Complex64;

use crate::error::Error;
use crate::tolerance;
use crate::Result;

/// Dense statevector simulation refuses more data qubits than this.
pub const QUBIT_GUARD: usize = 20;

/// A normalised complex amplitude vector over computational basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_data: usize,
    n_anc: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Wrap an amplitude vector; the length must be `2^{n_data + n_anc}` and
    /// the norm must be 1 within tolerance.
    pub fn new(n_data: usize, n_anc: usize, amps: Vec<Complex64>) -> Result<Self> {
        if n_data == 0 {
            return Err(Error::InvalidState("need at least one data qubit".into()));
        }
        if n_data > QUBIT_GUARD {
            return Err(Error::QubitGuard { n: n_data, max: QUBIT_GUARD });
        }
        let expected = 1usize << (n_data + n_anc);
        if amps.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: amps.len() });
        }
        if let Some(index) = amps.iter().position(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        let state = Self { n_data, n_anc, amps };
        let norm = state.norm();
        if (norm - 1.0).abs() > tolerance::STATE_NORM {
            return Err(Error::InvalidState(format!("state norm {norm} is not 1")));
        }
        Ok(state)
    }

    /// The computational basis state `|index⟩` on `n_data` qubits.
    pub fn basis(n_data: usize, index: usize) -> Result<Self> {
        if n_data == 0 {
            return Err(Error::InvalidState("need at least one data qubit".into()));
        }
        if n_data > QUBIT_GUARD {
            return Err(Error::QubitGuard { n: n_data, max: QUBIT_GUARD });
        }
        let len = 1usize << n_data;
        if index >= len {
            return Err(Error::InvalidState(format!("basis index {index} out of range")));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); len];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n_data, n_anc: 0, amps })
    }

    /// Number of data qubits.
    pub fn n_data(&self) -> usize {
        self.n_data
    }

    /// Number of ancilla qubits currently attached.
    pub fn n_anc(&self) -> usize {
        self.n_anc
    }

    /// Amplitudes in index order (data qubits are the low bits).
    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    /// `‖ψ‖₂`.
    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Serialise amplitudes as `[re, im]` pairs in index order (debug dumps).
    pub fn to_json(&self) -> String {
        let pairs: Vec<[f64; 2]> = self.amps.iter().map(|a| [a.re, a.im]).collect();
        serde_json::to_string(&pairs).expect("float pairs serialise")
    }

    /// Consume the state, yielding its amplitude vector.
    pub fn into_amps(self) -> Vec<Complex64> {
        self.amps
    }
}

/// Outcome of postselecting the ancillas of a filtered state.
#[derive(Debug, Clone)]
pub struct PostselectReport {
    /// Probability of the retained branch before renormalisation.
    pub success_prob: f64,
    /// The renormalised state with ancillas removed.
    pub state_after: StateVector,
}
