//! Frequency-set analysis of encoding-based quantum models.
//!
//! A model encodes a scalar `x` through gates `e^{ixH}` and reads out an
//! observable expectation. The eigenvalue sums of the encoding generators
//! bandlimit the model: its Fourier series is supported on the differences of
//! those sums.

use std::collections::BTreeMap;

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use rand::Rng;

use crate::error::Error;
use crate::tolerance;
use crate::Result;

/// Eigenvalue multisets of the encoding gates, one list per gate.
#[derive(Debug, Clone, PartialEq)]
pub struct QnnEncodingSpec {
    gates: Vec<Vec<f64>>,
}

impl QnnEncodingSpec {
    /// Wrap per-gate eigenvalue lists. An empty gate list is allowed and
    /// yields the trivial frequency set `{0}` (empty-sum convention); an
    /// empty eigenvalue list inside a gate is not.
    pub fn new(gates: Vec<Vec<f64>>) -> Result<Self> {
        for (i, gate) in gates.iter().enumerate() {
            if gate.is_empty() {
                return Err(Error::InvalidArgument(format!("gate {i} has no eigenvalues")));
            }
            if gate.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidArgument(format!("gate {i} has non-finite eigenvalues")));
            }
        }
        Ok(Self { gates })
    }

    /// The per-gate eigenvalue lists.
    pub fn gates(&self) -> &[Vec<f64>] {
        &self.gates
    }
}

/// The accessible frequencies of an encoding, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencySet {
    /// Sorted distinct frequencies.
    pub values: Vec<f64>,
    /// Whether every frequency is an integer (within float tolerance).
    pub integer: bool,
}

impl FrequencySet {
    /// The frequencies rounded to integers; only meaningful when `integer`.
    pub fn integer_values(&self) -> Vec<i64> {
        self.values.iter().map(|v| v.round() as i64).collect()
    }

    /// True if `k` lies within tolerance of some accessible frequency.
    pub fn contains(&self, k: f64) -> bool {
        self.values.iter().any(|&v| (v - k).abs() < 1e-9)
    }
}

/// All differences `Λ_i − Λ_j` of eigenvalue sums picking one eigenvalue per
/// gate: the support of the model's Fourier series.
pub fn qnn_frequency_set(spec: &QnnEncodingSpec) -> FrequencySet {
    // All sums of one eigenvalue per gate, deduplicated as we go.
    let mut sums: Vec<f64> = vec![0.0];
    for gate in &spec.gates {
        let mut next: Vec<f64> = Vec::with_capacity(sums.len() * gate.len());
        for s in &sums {
            for sigma in gate {
                next.push(s + sigma);
            }
        }
        next.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        next.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        sums = next;
    }
    let mut diffs: Vec<f64> = sums
        .iter()
        .flat_map(|a| sums.iter().map(move |b| a - b))
        .collect();
    diffs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    diffs.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    let integer = diffs.iter().all(|v| (v - v.round()).abs() < 1e-9);
    FrequencySet { values: diffs, integer }
}

fn hermiticity_residual(m: &Array2<Complex64>) -> f64 {
    let mut residual = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            residual = residual.max((m[[i, j]] - m[[j, i]].conj()).norm());
        }
    }
    residual
}

fn unitarity_residual(m: &Array2<Complex64>) -> f64 {
    let dim = m.nrows();
    let mut residual = 0.0f64;
    for i in 0..dim {
        for j in 0..dim {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..dim {
                acc += m[[k, i]].conj() * m[[k, j]];
            }
            let want = if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
            residual = residual.max((acc - want).norm());
        }
    }
    residual
}

/// Precomputed eigendecomposition of a 2×2 Hermitian generator.
#[derive(Debug, Clone)]
struct Generator {
    target: usize,
    eigenvalues: [f64; 2],
    /// Columns are the orthonormal eigenvectors.
    vectors: [[Complex64; 2]; 2],
}

impl Generator {
    fn new(target: usize, h: &Array2<Complex64>) -> Result<Self> {
        if h.nrows() != 2 || h.ncols() != 2 {
            return Err(Error::InvalidModel("encoding generators act on a single qubit".into()));
        }
        let residual = hermiticity_residual(h);
        if residual > tolerance::MATRIX_RESIDUAL {
            return Err(Error::NotHermitian { residual });
        }
        let a = h[[0, 0]].re;
        let c = h[[1, 1]].re;
        let b = h[[0, 1]];
        let mid = 0.5 * (a + c);
        let delta = (0.25 * (a - c) * (a - c) + b.norm_sqr()).sqrt();
        let (lambda_plus, lambda_minus) = (mid + delta, mid - delta);
        let vectors = if b.norm() < 1e-14 {
            // Already diagonal; eigenvalue order must match the basis order.
            if a >= c {
                [[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
                 [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]]
            } else {
                [[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
                 [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]]
            }
        } else {
            // (H − λ)v = 0 gives v = (b, λ − a) up to normalisation.
            let mut cols = [[Complex64::new(0.0, 0.0); 2]; 2];
            for (slot, lambda) in [(0usize, lambda_plus), (1usize, lambda_minus)] {
                let v0 = b;
                let v1 = Complex64::new(lambda - a, 0.0);
                let norm = (v0.norm_sqr() + v1.norm_sqr()).sqrt();
                cols[slot] = [v0 / norm, v1 / norm];
            }
            cols
        };
        Ok(Self { target, eigenvalues: [lambda_plus, lambda_minus], vectors })
    }

    /// `e^{ixH} = V diag(e^{ixλ}) V†` as a dense 2×2 matrix.
    fn gate(&self, x: f64) -> [[Complex64; 2]; 2] {
        let phases = [
            Complex64::from_polar(1.0, x * self.eigenvalues[0]),
            Complex64::from_polar(1.0, x * self.eigenvalues[1]),
        ];
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (slot, phase) in phases.iter().enumerate() {
            let v = self.vectors[slot];
            for r in 0..2 {
                for c in 0..2 {
                    out[r][c] += phase * v[r] * v[c].conj();
                }
            }
        }
        out
    }
}

/// A quantum model `f(x) = ⟨ψ_x| O |ψ_x⟩`: trainable unitaries interleaved
/// with single-qubit encoding gates `e^{ixH}`, measured by a Hermitian
/// observable.
#[derive(Debug, Clone)]
pub struct QnnModel {
    n_qubits: usize,
    trainables: Vec<Array2<Complex64>>,
    generators: Vec<Generator>,
    observable: Array2<Complex64>,
}

/// Dense model evaluation refuses more qubits than this (2¹⁰ amplitudes).
pub const QNN_QUBIT_GUARD: usize = 10;

impl QnnModel {
    /// Assemble and validate a model. There must be one more trainable block
    /// than encoding gates (the circuit starts and ends with a trainable).
    pub fn new(
        n_qubits: usize,
        trainables: Vec<Array2<Complex64>>,
        encodings: Vec<(usize, Array2<Complex64>)>,
        observable: Array2<Complex64>,
    ) -> Result<Self> {
        if n_qubits == 0 || n_qubits > QNN_QUBIT_GUARD {
            return Err(Error::InvalidModel(format!(
                "qubit count {n_qubits} outside 1..={QNN_QUBIT_GUARD}"
            )));
        }
        let dim = 1usize << n_qubits;
        if trainables.len() != encodings.len() + 1 {
            return Err(Error::InvalidModel(format!(
                "{} trainable blocks cannot interleave {} encodings",
                trainables.len(),
                encodings.len()
            )));
        }
        for block in &trainables {
            if block.nrows() != dim || block.ncols() != dim {
                return Err(Error::InvalidModel("trainable block has the wrong dimensions".into()));
            }
            let residual = unitarity_residual(block);
            if residual > tolerance::MATRIX_RESIDUAL {
                return Err(Error::NotUnitary { residual });
            }
        }
        if observable.nrows() != dim || observable.ncols() != dim {
            return Err(Error::InvalidModel("observable has the wrong dimensions".into()));
        }
        let residual = hermiticity_residual(&observable);
        if residual > tolerance::MATRIX_RESIDUAL {
            return Err(Error::NotHermitian { residual });
        }
        let mut generators = Vec::with_capacity(encodings.len());
        for (target, h) in &encodings {
            if *target >= n_qubits {
                return Err(Error::InvalidModel(format!("encoding target {target} out of range")));
            }
            generators.push(Generator::new(*target, h)?);
        }
        Ok(Self { n_qubits, trainables, generators, observable })
    }

    /// Number of qubits.
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// The eigenvalue lists of the encoding gates, for frequency-set analysis.
    pub fn encoding_spec(&self) -> QnnEncodingSpec {
        QnnEncodingSpec {
            gates: self.generators.iter().map(|g| g.eigenvalues.to_vec()).collect(),
        }
    }
}

fn apply_dense(matrix: &Array2<Complex64>, state: &Array1<Complex64>) -> Array1<Complex64> {
    matrix.dot(state)
}

fn apply_single_qubit(gate: &[[Complex64; 2]; 2], target: usize, state: &mut Array1<Complex64>) {
    let mask = 1usize << target;
    for idx in 0..state.len() {
        if idx & mask == 0 {
            let partner = idx | mask;
            let a = state[idx];
            let b = state[partner];
            state[idx] = gate[0][0] * a + gate[0][1] * b;
            state[partner] = gate[1][0] * a + gate[1][1] * b;
        }
    }
}

/// Evaluate `f(x) = ⟨ψ_x| O |ψ_x⟩` for a scalar input.
pub fn qnn_evaluate(model: &QnnModel, x: f64) -> Result<f64> {
    let dim = 1usize << model.n_qubits;
    let mut state = Array1::from_elem(dim, Complex64::new(0.0, 0.0));
    state[0] = Complex64::new(1.0, 0.0);
    state = apply_dense(&model.trainables[0], &state);
    for (generator, block) in model.generators.iter().zip(&model.trainables[1..]) {
        apply_single_qubit(&generator.gate(x), generator.target, &mut state);
        state = apply_dense(block, &state);
    }
    let transformed = apply_dense(&model.observable, &state);
    let expectation: Complex64 = state
        .iter()
        .zip(transformed.iter())
        .map(|(a, b)| a.conj() * b)
        .sum();
    Ok(expectation.re)
}

/// Extract Fourier-series coefficients `|k| ≤ k_max` by sampling `f` on an
/// oversampled uniform grid over `[0, 2π)` and projecting onto `e^{ikx}`.
///
/// The grid has `4·k_max + 1` points so aliasing from a model that is not
/// actually bandlimited to `k_max` shows up instead of hiding; `k_max ≥ 1`.
pub fn qnn_extract_spectrum(
    model: &QnnModel,
    k_max: usize,
) -> Result<BTreeMap<i64, Complex64>> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    let grid = 4 * k_max + 1;
    let mut samples = Vec::with_capacity(grid);
    for j in 0..grid {
        let x = 2.0 * std::f64::consts::PI * j as f64 / grid as f64;
        samples.push(qnn_evaluate(model, x)?);
    }
    let mut coeffs = BTreeMap::new();
    for k in -(k_max as i64)..=(k_max as i64) {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &f) in samples.iter().enumerate() {
            let angle = -2.0 * std::f64::consts::PI * k as f64 * j as f64 / grid as f64;
            acc += Complex64::from_polar(f, angle);
        }
        coeffs.insert(k, acc / grid as f64);
    }
    Ok(coeffs)
}

/// Haar-ish random unitary by Gram-Schmidt on a complex Gaussian matrix.
pub fn random_unitary<R: Rng>(dim: usize, rng: &mut R) -> Array2<Complex64> {
    // Box-Muller pairs for Gaussian entries.
    let mut gaussian = || {
        let u1: f64 = rng.random::<f64>().max(1e-12);
        let u2: f64 = rng.random();
        let r = (-2.0 * u1.ln()).sqrt();
        let phi = 2.0 * std::f64::consts::PI * u2;
        Complex64::new(r * phi.cos(), r * phi.sin())
    };
    let mut columns: Vec<Vec<Complex64>> = (0..dim)
        .map(|_| (0..dim).map(|_| gaussian()).collect())
        .collect();
    for i in 0..dim {
        for j in 0..i {
            let proj: Complex64 = columns[j]
                .iter()
                .zip(&columns[i])
                .map(|(a, b)| a.conj() * b)
                .sum();
            let prev = columns[j].clone();
            for (slot, p) in columns[i].iter_mut().zip(prev) {
                *slot -= proj * p;
            }
        }
        let norm: f64 = columns[i].iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        for v in columns[i].iter_mut() {
            *v /= norm;
        }
    }
    Array2::from_shape_fn((dim, dim), |(r, c)| columns[c][r])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn pauli_z_half() -> Array2<Complex64> {
        Array2::from_shape_vec(
            (2, 2),
            vec![
                Complex64::new(0.5, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(-0.5, 0.0),
            ],
        )
        .unwrap()
    }

    fn pauli_x_half() -> Array2<Complex64> {
        Array2::from_shape_vec(
            (2, 2),
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.5, 0.0),
                Complex64::new(0.5, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap()
    }

    fn pauli_z() -> Array2<Complex64> {
        Array2::from_shape_vec(
            (2, 2),
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(-1.0, 0.0),
            ],
        )
        .unwrap()
    }

    fn identity(dim: usize) -> Array2<Complex64> {
        Array2::from_shape_fn((dim, dim), |(r, c)| {
            if r == c {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    #[test]
    fn frequency_set_single_gate() {
        let spec = QnnEncodingSpec::new(vec![vec![0.0, 1.0]]).unwrap();
        let omega = qnn_frequency_set(&spec);
        assert!(omega.integer);
        assert_eq!(omega.integer_values(), vec![-1, 0, 1]);
    }

    #[test]
    fn frequency_set_parallel_pauli_gates() {
        for r in 1..=4usize {
            let spec = QnnEncodingSpec::new(vec![vec![-0.5, 0.5]; r]).unwrap();
            let omega = qnn_frequency_set(&spec);
            assert!(omega.integer);
            let want: Vec<i64> = (-(r as i64)..=(r as i64)).collect();
            assert_eq!(omega.integer_values(), want);
        }
    }

    #[test]
    fn frequency_set_empty_product_convention() {
        let spec = QnnEncodingSpec::new(vec![]).unwrap();
        let omega = qnn_frequency_set(&spec);
        assert_eq!(omega.values, vec![0.0]);
    }

    #[test]
    fn frequency_set_non_integer_flag() {
        let spec = QnnEncodingSpec::new(vec![vec![0.0, 0.5]]).unwrap();
        let omega = qnn_frequency_set(&spec);
        assert!(!omega.integer);
        assert_eq!(omega.values.len(), 3);
    }

    #[test]
    fn identity_observable_is_constant_one() {
        let model = QnnModel::new(
            1,
            vec![identity(2), identity(2)],
            vec![(0, pauli_x_half())],
            identity(2),
        )
        .unwrap();
        for x in [0.0, 0.5, 1.0, 2.0, 3.3] {
            assert!((qnn_evaluate(&model, x).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rotation_encoding_gives_cosine() {
        // e^{ixX/2} on |0⟩ measured in Z: f(x) = cos(x), so f(0) = 1.
        let model = QnnModel::new(
            1,
            vec![identity(2), identity(2)],
            vec![(0, pauli_x_half())],
            pauli_z(),
        )
        .unwrap();
        for x in [0.0, 0.3, 1.0, 2.2] {
            assert!((qnn_evaluate(&model, x).unwrap() - x.cos()).abs() < 1e-10);
        }
    }

    #[test]
    fn integer_eigenvalues_give_periodic_models() {
        let mut rng = StdRng::seed_from_u64(31);
        let model = QnnModel::new(
            2,
            vec![
                random_unitary(4, &mut rng),
                random_unitary(4, &mut rng),
                random_unitary(4, &mut rng),
            ],
            vec![(0, pauli_z_half()), (1, pauli_z_half())],
            {
                let u = random_unitary(4, &mut rng);
                // U D U† with real diagonal is Hermitian.
                let mut d = Array2::from_elem((4, 4), Complex64::new(0.0, 0.0));
                for i in 0..4 {
                    d[[i, i]] = Complex64::new(i as f64 - 1.5, 0.0);
                }
                let ud = u.dot(&d);
                let mut h = Array2::from_elem((4, 4), Complex64::new(0.0, 0.0));
                for r in 0..4 {
                    for c in 0..4 {
                        let mut acc = Complex64::new(0.0, 0.0);
                        for k in 0..4 {
                            acc += ud[[r, k]] * u[[c, k]].conj();
                        }
                        h[[r, c]] = acc;
                    }
                }
                h
            },
        )
        .unwrap();
        // ±1/2 eigenvalues per gate: differences are integers, so f is 2π-periodic.
        for i in 0..10 {
            let x = 0.61 * i as f64;
            let a = qnn_evaluate(&model, x).unwrap();
            let b = qnn_evaluate(&model, x + 2.0 * std::f64::consts::PI).unwrap();
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn extracted_spectrum_respects_the_band() {
        let mut rng = StdRng::seed_from_u64(32);
        // Single-qubit model with eigenvalues {0, 1}: support within {−1, 0, 1}.
        let h = Array2::from_shape_vec(
            (2, 2),
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
            ],
        )
        .unwrap();
        let model = QnnModel::new(
            1,
            vec![random_unitary(2, &mut rng), random_unitary(2, &mut rng)],
            vec![(0, h)],
            pauli_z(),
        )
        .unwrap();
        let spec = model.encoding_spec();
        let omega = qnn_frequency_set(&spec);
        let coeffs = qnn_extract_spectrum(&model, 3).unwrap();
        for (k, c) in &coeffs {
            if !omega.contains(*k as f64) {
                assert!(c.norm() < tolerance::OUT_OF_BAND, "k={k} has |c|={}", c.norm());
            }
        }
        // The model is genuinely degree 1: some in-band coefficient is visible.
        assert!(coeffs.values().any(|c| c.norm() > 1e-3));
    }

    #[test]
    fn non_unitary_trainable_is_rejected() {
        let mut bad = identity(2);
        bad[[0, 0]] = Complex64::new(2.0, 0.0);
        let err = QnnModel::new(1, vec![bad, identity(2)], vec![(0, pauli_x_half())], pauli_z());
        assert!(matches!(err, Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn non_hermitian_observable_is_rejected() {
        let mut bad = identity(2);
        bad[[0, 1]] = Complex64::new(0.0, 1.0);
        bad[[1, 0]] = Complex64::new(0.0, 1.0);
        let err = QnnModel::new(1, vec![identity(2), identity(2)], vec![(0, pauli_x_half())], bad);
        assert!(matches!(err, Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn random_unitaries_are_unitary() {
        let mut rng = StdRng::seed_from_u64(33);
        for dim in [2usize, 4, 8] {
            let u = random_unitary(dim, &mut rng);
            assert!(unitarity_residual(&u) < 1e-10);
        }
    }
}
