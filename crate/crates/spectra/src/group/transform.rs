//! Forward and inverse Fourier transforms with fast paths.
//!
//! Boolean groups use the in-place Walsh–Hadamard butterfly in `O(n·2ⁿ)`;
//! cyclic products run one FFT pass per axis in `O(|G|·N·log d)`. Both
//! directions carry the balanced `1/√|G|` prefactor, so the Boolean transform
//! is self-inverse and Parseval holds with unit constant.

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::function::{DenseFunction, Spectrum};
use super::GroupKind;

/// In-place unnormalised Walsh–Hadamard butterflies over a power-of-two slice.
pub(crate) fn walsh_in_place(values: &mut [Complex64]) {
    let len = values.len();
    debug_assert!(len.is_power_of_two());
    let mut half = 1;
    while half < len {
        let mut block = 0;
        while block < len {
            for i in block..block + half {
                let a = values[i];
                let b = values[i + half];
                values[i] = a + b;
                values[i + half] = a - b;
            }
            block += half * 2;
        }
        half *= 2;
    }
}

/// One FFT pass along every axis of a `ℤ_d^N` table. `forward` selects the
/// `e^{−2πi/d}` kernel (the conjugated characters of the forward transform).
fn cyclic_axes_in_place(values: &mut [Complex64], modulus: usize, dims: usize, forward: bool) {
    let mut planner = FftPlanner::<f64>::new();
    let fft = if forward {
        planner.plan_fft_forward(modulus)
    } else {
        planner.plan_fft_inverse(modulus)
    };
    let total = values.len();
    let mut line = vec![Complex64::new(0.0, 0.0); modulus];
    let mut stride = 1usize;
    for _ in 0..dims {
        let span = stride * modulus;
        for base in (0..total).step_by(span) {
            for inner in 0..stride {
                let start = base + inner;
                for (t, slot) in line.iter_mut().enumerate() {
                    *slot = values[start + t * stride];
                }
                fft.process(&mut line);
                for (t, slot) in line.iter().enumerate() {
                    values[start + t * stride] = *slot;
                }
            }
        }
        stride = span;
    }
}

fn scaled(mut values: Vec<Complex64>, factor: f64) -> Vec<Complex64> {
    for v in values.iter_mut() {
        *v *= factor;
    }
    values
}

/// Forward transform: `f̂(k) = (1/√|G|) Σ_g f(g) χ*_k(g)`.
pub fn fourier(f: &DenseFunction) -> Spectrum {
    let group = f.group().clone();
    let mut values = f.values().to_vec();
    match *group.kind() {
        GroupKind::Boolean { .. } => walsh_in_place(&mut values),
        GroupKind::Cyclic { modulus, dims } => {
            cyclic_axes_in_place(&mut values, modulus as usize, dims, true)
        }
    }
    let factor = 1.0 / (values.len() as f64).sqrt();
    Spectrum::new(group, scaled(values, factor)).expect("transform preserves shape")
}

/// Inverse transform: `f(g) = (1/√|G|) Σ_k χ_k(g) f̂(k)`.
pub fn inverse_fourier(s: &Spectrum) -> DenseFunction {
    let group = s.group().clone();
    let mut values = s.values().to_vec();
    match *group.kind() {
        GroupKind::Boolean { .. } => walsh_in_place(&mut values),
        GroupKind::Cyclic { modulus, dims } => {
            cyclic_axes_in_place(&mut values, modulus as usize, dims, false)
        }
    }
    let factor = 1.0 / (values.len() as f64).sqrt();
    DenseFunction::new(group, scaled(values, factor)).expect("transform preserves shape")
}
