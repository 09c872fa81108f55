//! The amplitude-space smoothing pipeline: superposition preparation,
//! Hadamard-layer transform, ancilla-postselected decay filtering, Born
//! distributions, and the amplitude↔probability autoconvolution identity.

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::{PostselectReport, StateVector, QUBIT_GUARD};
use crate::error::Error;
use crate::group::{walsh_in_place, DenseFunction, GroupKind, GroupSpec, Spectrum};
use crate::models::Dataset;
use crate::tolerance;
use crate::Result;

/// Equal superposition `(1/√|X_u|) Σ_{x∈X_u} |x⟩` over the unique samples.
///
/// The state weights each distinct sample equally; duplicates collapse and
/// log a warning rather than reweighting.
pub fn prepare_superposition(dataset: &Dataset) -> Result<StateVector> {
    let n = dataset.bits();
    if n > QUBIT_GUARD {
        return Err(Error::QubitGuard { n, max: QUBIT_GUARD });
    }
    let unique = dataset.unique();
    if unique.len() < dataset.len() {
        log::warn!(
            "superposition collapsed {} duplicate samples; the state weights unique samples equally",
            dataset.len() - unique.len()
        );
    }
    let group = GroupSpec::boolean(n)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); 1usize << n];
    let weight = Complex64::new(1.0 / (unique.len() as f64).sqrt(), 0.0);
    for x in &unique {
        amps[group.pack(x)?] = weight;
    }
    StateVector::new(n, 0, amps)
}

/// One Hadamard on every data qubit: the Walsh transform of the amplitudes
/// with the balanced `1/√2ⁿ` prefactor. Self-inverse. Ancilla qubits, if
/// attached, are untouched.
pub fn walsh_qft(state: &StateVector) -> StateVector {
    let mut amps = state.amps().to_vec();
    let data_len = 1usize << state.n_data();
    for chunk in amps.chunks_mut(data_len) {
        walsh_in_place(chunk);
    }
    let factor = 1.0 / (data_len as f64).sqrt();
    for a in amps.iter_mut() {
        *a *= factor;
    }
    StateVector::new(state.n_data(), state.n_anc(), amps).expect("unitary preserves the norm")
}

const CYCLIC_QFT_GUARD: usize = 12;

fn cyclic_transform(state: &StateVector, forward_qft: bool) -> Result<StateVector> {
    if state.n_anc() != 0 {
        return Err(Error::InvalidState("cyclic transform expects no ancillas".into()));
    }
    if state.n_data() > CYCLIC_QFT_GUARD {
        return Err(Error::QubitGuard { n: state.n_data(), max: CYCLIC_QFT_GUARD });
    }
    let mut amps = state.amps().to_vec();
    let mut planner = FftPlanner::<f64>::new();
    // The QFT convention uses e^{+2πi xk/N}, which is rustfft's inverse kernel.
    let fft = if forward_qft {
        planner.plan_fft_inverse(amps.len())
    } else {
        planner.plan_fft_forward(amps.len())
    };
    fft.process(&mut amps);
    let factor = 1.0 / (amps.len() as f64).sqrt();
    for a in amps.iter_mut() {
        *a *= factor;
    }
    StateVector::new(state.n_data(), 0, amps)
}

/// The Fourier transform over `ℤ_{2ⁿ}` on the amplitudes:
/// `|x⟩ → (1/√N) Σ_k e^{2πi xk/N} |k⟩`, applied as a dense linear map.
pub fn cyclic_qft(state: &StateVector) -> Result<StateVector> {
    cyclic_transform(state, true)
}

/// Inverse of [`cyclic_qft`].
pub fn cyclic_qft_inverse(state: &StateVector) -> Result<StateVector> {
    cyclic_transform(state, false)
}

/// Ancilla-postselected decay filter: scales the amplitude of every basis
/// state `|k⟩` by `(1 − 2θ)^{|k|}` and renormalises.
///
/// One ancilla per data qubit receives a rotation controlled by its qubit
/// with angle `2·arccos(1 − 2θ)`, and all ancillas are projected onto `|0⟩`.
/// Each ancilla only ever interacts with its own qubit, so the simulation
/// attaches, rotates and projects them one at a time; the reported success
/// probability is the product of the per-ancilla branch weights, which equals
/// the all-`|0⟩` branch weight of the joint construction:
/// `Σ_k |ψ(k)|² (1 − 2θ)^{2|k|}`.
pub fn ancilla_decay_filter(state: &StateVector, theta: f64) -> Result<PostselectReport> {
    if state.n_anc() != 0 {
        return Err(Error::InvalidState("filter expects a state without ancillas".into()));
    }
    if !(0.0..=0.5).contains(&theta) || !theta.is_finite() {
        return Err(Error::InvalidArgument(format!("theta {theta} outside [0, 1/2]")));
    }
    let n = state.n_data();
    let len = 1usize << n;
    let cos_half = 1.0 - 2.0 * theta; // cos of half the rotation angle
    let sin_half = (1.0 - cos_half * cos_half).max(0.0).sqrt();

    let mut amps = state.amps().to_vec();
    let mut success_prob = 1.0f64;
    let mut joint = vec![Complex64::new(0.0, 0.0); len * 2];
    for qubit in 0..n {
        // Attach one ancilla in |0⟩ as the high bit.
        joint[..len].copy_from_slice(&amps);
        for slot in joint[len..].iter_mut() {
            *slot = Complex64::new(0.0, 0.0);
        }
        // Controlled rotation: where the data qubit is 1, the ancilla turns
        // by 2·arccos(1−2θ) out of |0⟩.
        for k in 0..len {
            if (k >> qubit) & 1 == 1 {
                let a = joint[k];
                joint[k] = a * cos_half;
                joint[len + k] = a * sin_half;
            }
        }
        // Project the ancilla onto |0⟩.
        let branch_norm_sqr: f64 = joint[..len].iter().map(|a| a.norm_sqr()).sum();
        success_prob *= branch_norm_sqr;
        if branch_norm_sqr < tolerance::MIN_SUCCESS_PROBABILITY {
            return Err(Error::ZeroSuccessProbability {
                prob: success_prob,
                min: tolerance::MIN_SUCCESS_PROBABILITY,
            });
        }
        let renorm = 1.0 / branch_norm_sqr.sqrt();
        for (slot, value) in amps.iter_mut().zip(&joint[..len]) {
            *slot = value * renorm;
        }
    }
    if success_prob < tolerance::MIN_SUCCESS_PROBABILITY {
        return Err(Error::ZeroSuccessProbability {
            prob: success_prob,
            min: tolerance::MIN_SUCCESS_PROBABILITY,
        });
    }
    Ok(PostselectReport {
        success_prob,
        state_after: StateVector::new(n, 0, amps)?,
    })
}

/// Reference route for the decay filter: scale each amplitude directly by
/// `(1 − 2θ)^{|k|}` and renormalise. Returns the closed-form success
/// probability `Σ_k |ψ(k)|² (1 − 2θ)^{2|k|}`.
pub fn decay_filter_diagonal(state: &StateVector, theta: f64) -> Result<PostselectReport> {
    if state.n_anc() != 0 {
        return Err(Error::InvalidState("filter expects a state without ancillas".into()));
    }
    if !(0.0..=0.5).contains(&theta) || !theta.is_finite() {
        return Err(Error::InvalidArgument(format!("theta {theta} outside [0, 1/2]")));
    }
    let base = 1.0 - 2.0 * theta;
    let mut amps = state.amps().to_vec();
    let mut success_prob = 0.0;
    for (k, a) in amps.iter_mut().enumerate() {
        let scale = base.powi((k as u32).count_ones() as i32);
        *a *= scale;
        success_prob += a.norm_sqr();
    }
    if success_prob < tolerance::MIN_SUCCESS_PROBABILITY {
        return Err(Error::ZeroSuccessProbability {
            prob: success_prob,
            min: tolerance::MIN_SUCCESS_PROBABILITY,
        });
    }
    let renorm = 1.0 / success_prob.sqrt();
    for a in amps.iter_mut() {
        *a *= renorm;
    }
    Ok(PostselectReport {
        success_prob,
        state_after: StateVector::new(state.n_data(), 0, amps)?,
    })
}

/// Born distribution `p(x) = |ψ(x)|²` of an ancilla-free state.
pub fn born_distribution(state: &StateVector) -> Result<DenseFunction> {
    if state.n_anc() != 0 {
        return Err(Error::InvalidState("measure after removing ancillas".into()));
    }
    let group = GroupSpec::boolean(state.n_data())?;
    let probs: Vec<f64> = state.amps().iter().map(|a| a.norm_sqr()).collect();
    DenseFunction::from_real(group, &probs)
}

/// The full amplitude-smoothing pipeline: superposition over the data, Walsh
/// transform, ancilla decay filter, Walsh transform back, measurement
/// distribution. Returns the distribution and the postselection success
/// probability.
pub fn quantum_smooth(dataset: &Dataset, theta: f64) -> Result<(DenseFunction, f64)> {
    let prepared = prepare_superposition(dataset)?;
    let in_fourier = walsh_qft(&prepared);
    let filtered = ancilla_decay_filter(&in_fourier, theta)?;
    let back = walsh_qft(&filtered.state_after);
    let distribution = born_distribution(&back)?;
    Ok((distribution, filtered.success_prob))
}

/// Amplitude→probability spectrum map on `ℤ₂ⁿ`:
/// `p̂(k) = (1/√2ⁿ) Σ_s ψ̂(s) ψ̂*(s + k)`.
///
/// Equals `fourier(|ψ|²)` computed from the state the spectrum came from.
pub fn autoconvolution_spectrum(psi_hat: &Spectrum) -> Result<Spectrum> {
    let group = psi_hat.group().clone();
    if !matches!(group.kind(), GroupKind::Boolean { .. }) {
        return Err(Error::GroupMismatch(
            "autoconvolution is stated for Boolean groups".into(),
        ));
    }
    let len = psi_hat.values().len();
    let norm = 1.0 / (len as f64).sqrt();
    let values: Vec<Complex64> = (0..len)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for s in 0..len {
                acc += psi_hat.values()[s] * psi_hat.values()[s ^ k].conj();
            }
            acc * norm
        })
        .collect();
    Spectrum::new(group, values)
}
