//! Statistical readings of Boolean Fourier coefficients and spectral decay
//! inspection.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::function::DenseFunction;
use super::transform::fourier;
use super::{Frequency, GroupKind, GroupSpec};
use crate::error::Error;
use crate::tolerance;
use crate::Result;

fn require_boolean(group: &GroupSpec) -> Result<usize> {
    match *group.kind() {
        GroupKind::Boolean { bits } => Ok(bits),
        GroupKind::Cyclic { .. } => Err(Error::GroupMismatch(
            "operation is defined on Boolean groups only".into(),
        )),
    }
}

fn require_real(f: &DenseFunction) -> Result<()> {
    if let Some((i, v)) = f
        .values()
        .iter()
        .enumerate()
        .find(|(_, v)| v.im.abs() > tolerance::REALNESS)
    {
        return Err(Error::NotReal(format!("imaginary part {:.3e} at index {i}", v.im)));
    }
    Ok(())
}

/// Normalised expected parity `(1/√2ⁿ) Σ_x p(x)(−1)^{x·k}` of a distribution.
///
/// Equals the Fourier coefficient `p̂(k)` of the distribution.
pub fn expected_parity(p: &DenseFunction, k: &Frequency) -> Result<f64> {
    let bits = require_boolean(p.group())?;
    p.check_probability()?;
    let k_idx = p.group().pack_frequency(k)?;
    let norm = 1.0 / (1u64 << bits) as f64;
    let sum: f64 = p
        .values()
        .iter()
        .enumerate()
        .map(|(x, v)| {
            let sign = if (x & k_idx).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            v.re * sign
        })
        .sum();
    Ok(sum * norm.sqrt())
}

/// Interaction effect of a bit subset on a real response function, by the
/// recursive conditional-effect definition: `L(S ∪ {i}) = L(S | x_i = 1) −
/// L(S | x_i = 0)`, with single-bit effects summed over all settings of the
/// remaining bits.
///
/// The empty subset returns the plain sum `Σ_x f(x)` (the order-0 analogue).
/// Satisfies `L(S) = (−1)^{|S|} √(2ⁿ) f̂(k_S)`, pinned against a brute-force
/// oracle by test.
pub fn interaction_effect(f: &DenseFunction, subset: &Frequency) -> Result<f64> {
    let bits = require_boolean(f.group())?;
    require_real(f)?;
    if subset.len() != bits {
        return Err(Error::DimensionMismatch { expected: bits, got: subset.len() });
    }
    let subset_bits: Vec<usize> = subset
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| i)
        .collect();
    Ok(conditional_effect(f, bits, &subset_bits, 0, 0))
}

/// `L(remaining bits | fixed assignment)`, recursing on the first remaining bit.
fn conditional_effect(
    f: &DenseFunction,
    bits: usize,
    remaining: &[usize],
    fixed_mask: usize,
    fixed_value: usize,
) -> f64 {
    match remaining.split_first() {
        Some((&bit, rest)) => {
            let mask = fixed_mask | (1 << bit);
            let high = conditional_effect(f, bits, rest, mask, fixed_value | (1 << bit));
            let low = conditional_effect(f, bits, rest, mask, fixed_value);
            high - low
        }
        None => (0..(1usize << bits))
            .filter(|x| x & fixed_mask == fixed_value)
            .map(|x| f.values()[x].re)
            .sum(),
    }
}

/// Spin moments of a Boolean distribution: for every `k` the expectation
/// `E[Π_{i: k_i=1} x̄_i]` with `x̄_i = (−1)^{x_i}`, i.e. `√(2ⁿ)·p̂(k)`.
pub fn to_spin_moments(p: &DenseFunction) -> Result<BTreeMap<Frequency, f64>> {
    let bits = require_boolean(p.group())?;
    p.check_probability()?;
    let spectrum = fourier(p);
    let scale = ((1u64 << bits) as f64).sqrt();
    let mut moments = BTreeMap::new();
    for (idx, v) in spectrum.values().iter().enumerate() {
        let k = p.group().unpack_frequency(idx)?;
        moments.insert(k, v.re * scale);
    }
    Ok(moments)
}

/// Shell index of a frequency for decay profiles: Hamming weight on Boolean
/// groups, the largest aliased coordinate magnitude `max_j min(k_j, d−k_j)` on
/// cyclic ones.
fn shell_index(group: &GroupSpec, k_idx: usize) -> usize {
    match *group.kind() {
        GroupKind::Boolean { .. } => (k_idx as u64).count_ones() as usize,
        GroupKind::Cyclic { modulus, dims } => {
            let d = modulus as usize;
            let mut rest = k_idx;
            let mut shell = 0usize;
            for _ in 0..dims {
                let c = rest % d;
                shell = shell.max(c.min(d - c));
                rest /= d;
            }
            shell
        }
    }
}

/// Per-shell maximum coefficient magnitude `(order, max |f̂|)`, for empirical
/// decay inspection.
pub fn smoothness_decay_profile(f: &DenseFunction) -> Vec<(usize, f64)> {
    let group = f.group();
    let spectrum = fourier(f);
    let mut shells: BTreeMap<usize, f64> = BTreeMap::new();
    for (idx, v) in spectrum.values().iter().enumerate() {
        let shell = shell_index(group, idx);
        let entry = shells.entry(shell).or_insert(0.0);
        *entry = entry.max(v.norm());
    }
    shells.into_iter().collect()
}

/// Exact count `Σ_{m ≤ b} C(n, m)` of Boolean frequencies with Hamming weight
/// at most `b`.
pub fn count_bandlimited_frequencies(n: u64, b: u64) -> Result<BigUint> {
    if b > n {
        return Err(Error::InvalidArgument(format!("band {b} exceeds bit count {n}")));
    }
    let mut total = BigUint::from(1u8);
    let mut binom = BigUint::from(1u8);
    for m in 1..=b {
        binom = binom * BigUint::from(n - m + 1) / BigUint::from(m);
        total += &binom;
    }
    Ok(total)
}
