//! Finite Abelian groups, their elements, characters and transforms.
//!
//! Two group families are supported: the Boolean cube `ℤ₂ⁿ` (bitstrings under
//! XOR) and products of cyclic groups `ℤ_d^N`. Elements and frequencies carry
//! coordinate vectors; dense functions index them by a packed little-endian
//! mixed-radix integer (coordinate 0 is the least significant digit).

mod analysis;
mod convolve;
mod function;
mod transform;

pub use analysis::{
    count_bandlimited_frequencies, expected_parity, interaction_effect, smoothness_decay_profile,
    to_spin_moments,
};
pub use convolve::{convolve, convolve_direct, mmd_squared, mmd_squared_direct};
pub use function::{DenseFunction, Spectrum};
pub use transform::{fourier, inverse_fourier};

pub(crate) use transform::walsh_in_place;

use num_bigint::BigUint;
use num_complex::Complex64;

use crate::error::Error;
use crate::Result;

/// Dense tables refuse to allocate beyond this many entries.
pub const DENSE_GUARD: usize = 1 << 24;

/// Which finite Abelian group a function lives on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// The Boolean cube `ℤ₂ⁿ` of bitstrings of length `bits`.
    Boolean { bits: usize },
    /// The product `ℤ_d^N`: `dims` coordinates, each a residue mod `modulus`.
    Cyclic { modulus: u32, dims: usize },
}

/// A finite Abelian group together with its cardinality bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    kind: GroupKind,
}

impl GroupSpec {
    /// The Boolean cube on `bits ≥ 1` bits.
    pub fn boolean(bits: usize) -> Result<Self> {
        if bits == 0 {
            return Err(Error::InvalidGroup("Boolean group needs at least 1 bit".into()));
        }
        Ok(Self { kind: GroupKind::Boolean { bits } })
    }

    /// The product of `dims ≥ 1` cyclic groups of order `modulus ≥ 2`.
    pub fn cyclic(modulus: u32, dims: usize) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidGroup("cyclic modulus must be at least 2".into()));
        }
        if dims == 0 {
            return Err(Error::InvalidGroup("cyclic group needs at least 1 dimension".into()));
        }
        Ok(Self { kind: GroupKind::Cyclic { modulus, dims } })
    }

    /// The group family.
    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    /// Whether this is a Boolean cube.
    pub fn is_boolean(&self) -> bool {
        matches!(self.kind, GroupKind::Boolean { .. })
    }

    /// Number of coordinates of an element.
    pub fn arity(&self) -> usize {
        match self.kind {
            GroupKind::Boolean { bits } => bits,
            GroupKind::Cyclic { dims, .. } => dims,
        }
    }

    /// The per-coordinate radix (2 for Boolean groups, `d` for cyclic ones).
    pub fn radix(&self) -> u32 {
        match self.kind {
            GroupKind::Boolean { .. } => 2,
            GroupKind::Cyclic { modulus, .. } => modulus,
        }
    }

    /// Exact group order as a big integer.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.radix()).pow(self.arity() as u32)
    }

    /// Group order as a table length, rejecting anything past [`DENSE_GUARD`].
    pub fn dense_len(&self) -> Result<usize> {
        let order = self.order();
        let max = BigUint::from(DENSE_GUARD);
        if order > max {
            return Err(Error::DenseGuard {
                group: self.describe(),
                order,
                max: DENSE_GUARD,
            });
        }
        // Fits in usize because DENSE_GUARD does.
        let digits = order.to_u64_digits();
        Ok(digits.first().copied().unwrap_or(0) as usize)
    }

    fn describe(&self) -> String {
        match self.kind {
            GroupKind::Boolean { bits } => format!("Z2^{bits}"),
            GroupKind::Cyclic { modulus, dims } => format!("Z{modulus}^{dims}"),
        }
    }

    fn check_coords(&self, coords: &[u32]) -> Result<()> {
        if coords.len() != self.arity() {
            return Err(Error::DimensionMismatch {
                expected: self.arity(),
                got: coords.len(),
            });
        }
        if let Some(&bad) = coords.iter().find(|&&c| c >= self.radix()) {
            return Err(Error::InvalidGroup(format!(
                "coordinate {bad} out of range for {}",
                self.describe()
            )));
        }
        Ok(())
    }

    /// Build a group element from coordinates.
    pub fn element(&self, coords: Vec<u32>) -> Result<GroupElement> {
        self.check_coords(&coords)?;
        Ok(GroupElement { coords })
    }

    /// Build a dual-group frequency from coordinates.
    pub fn frequency(&self, coords: Vec<u32>) -> Result<Frequency> {
        self.check_coords(&coords)?;
        Ok(Frequency { coords })
    }

    /// The identity element (all-zero coordinates).
    pub fn identity(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.arity()] }
    }

    /// Packed little-endian mixed-radix index of an element.
    pub fn pack(&self, element: &GroupElement) -> Result<usize> {
        self.pack_coords(&element.coords)
    }

    /// Packed index of a frequency (the dual group shares the encoding).
    pub fn pack_frequency(&self, frequency: &Frequency) -> Result<usize> {
        self.pack_coords(&frequency.coords)
    }

    fn pack_coords(&self, coords: &[u32]) -> Result<usize> {
        self.check_coords(coords)?;
        self.dense_len()?;
        let radix = self.radix() as usize;
        let mut index = 0usize;
        for &c in coords.iter().rev() {
            index = index * radix + c as usize;
        }
        Ok(index)
    }

    /// Element whose packed index is `index`.
    pub fn unpack(&self, index: usize) -> Result<GroupElement> {
        Ok(GroupElement { coords: self.unpack_coords(index)? })
    }

    /// Frequency whose packed index is `index`.
    pub fn unpack_frequency(&self, index: usize) -> Result<Frequency> {
        Ok(Frequency { coords: self.unpack_coords(index)? })
    }

    fn unpack_coords(&self, index: usize) -> Result<Vec<u32>> {
        let len = self.dense_len()?;
        if index >= len {
            return Err(Error::InvalidGroup(format!(
                "index {index} out of range for {}",
                self.describe()
            )));
        }
        let radix = self.radix() as usize;
        let mut rest = index;
        let coords = (0..self.arity())
            .map(|_| {
                let c = (rest % radix) as u32;
                rest /= radix;
                c
            })
            .collect();
        Ok(coords)
    }

    /// Coordinate-wise sum `a + b`.
    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_coords(&a.coords)?;
        self.check_coords(&b.coords)?;
        let radix = self.radix();
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(&x, &y)| (x + y) % radix)
            .collect();
        Ok(GroupElement { coords })
    }

    /// Coordinate-wise difference `a − b` (XOR on Boolean groups).
    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_coords(&a.coords)?;
        self.check_coords(&b.coords)?;
        let radix = self.radix();
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(&x, &y)| (x + radix - y) % radix)
            .collect();
        Ok(GroupElement { coords })
    }

    /// Packed index of `a − b`, avoiding coordinate round-trips on hot paths.
    pub(crate) fn sub_packed(&self, a: usize, b: usize) -> usize {
        match self.kind {
            GroupKind::Boolean { .. } => a ^ b,
            GroupKind::Cyclic { modulus, dims } => {
                let radix = modulus as usize;
                let (mut a, mut b) = (a, b);
                let mut out = 0usize;
                let mut scale = 1usize;
                for _ in 0..dims {
                    let diff = (a % radix + radix - b % radix) % radix;
                    out += diff * scale;
                    scale *= radix;
                    a /= radix;
                    b /= radix;
                }
                out
            }
        }
    }

    /// Character value `χ_k(x)`: `(−1)^{x·k}` on Boolean groups,
    /// `exp(2πi Σ_j x_j k_j / d)` on cyclic ones. Always of unit modulus.
    pub fn character(&self, k: &Frequency, x: &GroupElement) -> Result<Complex64> {
        self.check_coords(&k.coords)?;
        self.check_coords(&x.coords)?;
        match self.kind {
            GroupKind::Boolean { .. } => {
                let parity = dot_mod2(x, k)?;
                Ok(Complex64::new(if parity == 0 { 1.0 } else { -1.0 }, 0.0))
            }
            GroupKind::Cyclic { modulus, .. } => {
                let d = modulus as u64;
                let phase: u64 = x
                    .coords
                    .iter()
                    .zip(&k.coords)
                    .map(|(&xj, &kj)| (xj as u64 * kj as u64) % d)
                    .sum::<u64>()
                    % d;
                let angle = 2.0 * std::f64::consts::PI * phase as f64 / d as f64;
                Ok(Complex64::from_polar(1.0, angle))
            }
        }
    }

    /// Character by packed indices, for dense loops and reference sums.
    pub fn character_packed(&self, k: usize, x: usize) -> Complex64 {
        match self.kind {
            GroupKind::Boolean { .. } => {
                if (k & x).count_ones().is_multiple_of(2) {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(-1.0, 0.0)
                }
            }
            GroupKind::Cyclic { modulus, dims } => {
                let d = modulus as u64;
                let radix = modulus as usize;
                let (mut k, mut x) = (k, x);
                let mut phase = 0u64;
                for _ in 0..dims {
                    phase = (phase + (k % radix) as u64 * (x % radix) as u64) % d;
                    k /= radix;
                    x /= radix;
                }
                let angle = 2.0 * std::f64::consts::PI * phase as f64 / d as f64;
                Complex64::from_polar(1.0, angle)
            }
        }
    }

    /// Render an element's coordinates ("0110" for Boolean, "0,3,1" otherwise).
    pub fn format_element(&self, e: &GroupElement) -> String {
        match self.kind {
            GroupKind::Boolean { .. } => e.bit_string(),
            GroupKind::Cyclic { .. } => e
                .coords
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

/// An element of a finite Abelian group, stored as its coordinate vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u32>,
}

impl GroupElement {
    /// Build from raw coordinates; callers must keep them within the radix.
    pub(crate) fn from_coords(coords: Vec<u32>) -> Self {
        Self { coords }
    }

    /// Coordinates (bits for Boolean groups, residues otherwise).
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Number of coordinates.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    /// True if the element has no coordinates (never for valid groups).
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Parse a Boolean element from a '0'/'1' string, coordinate 0 first.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        let coords = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidGroup(format!("invalid bit character '{other}'"))),
            })
            .collect::<Result<Vec<u32>>>()?;
        if coords.is_empty() {
            return Err(Error::InvalidGroup("empty bitstring".into()));
        }
        Ok(Self { coords })
    }

    /// Render as a '0'/'1' string, coordinate 0 first (nonzero renders as '1').
    pub fn bit_string(&self) -> String {
        self.coords
            .iter()
            .map(|&c| if c == 0 { '0' } else { '1' })
            .collect()
    }
}

/// An element of the dual group (a frequency).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frequency {
    coords: Vec<u32>,
}

impl Frequency {
    /// Coordinates of the frequency.
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Number of coordinates.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    /// True if the frequency has no coordinates.
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Number of nonzero coordinates; the Hamming weight `|k|` on Boolean groups.
    pub fn order_weight(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }

    /// Parse a Boolean frequency from a '0'/'1' string, coordinate 0 first.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        let element = GroupElement::from_bit_str(s)?;
        Ok(Self { coords: element.coords })
    }

    /// Render as a '0'/'1' string, coordinate 0 first.
    pub fn bit_string(&self) -> String {
        self.coords
            .iter()
            .map(|&c| if c == 0 { '0' } else { '1' })
            .collect()
    }

    /// Frequency with 1s at the given bit positions (Boolean groups).
    pub fn from_support(n: usize, support: &[usize]) -> Result<Self> {
        let mut coords = vec![0u32; n];
        for &bit in support {
            if bit >= n {
                return Err(Error::InvalidGroup(format!("support bit {bit} out of range for n = {n}")));
            }
            coords[bit] = 1;
        }
        Ok(Self { coords })
    }
}

/// Dot product modulo 2 of two bit vectors of equal length.
///
/// The 1-entries of `k` select bits of `x`; the result is the parity of the
/// selected bits.
pub fn dot_mod2(x: &GroupElement, k: &Frequency) -> Result<u8> {
    if x.len() != k.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), got: k.len() });
    }
    let sum: u32 = x.coords.iter().zip(&k.coords).map(|(&a, &b)| a * b).sum();
    Ok((sum % 2) as u8)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_mod2_worked_example() {
        // 101 · 111 = (1·1 + 0·1 + 1·1) mod 2 = 0
        let x = GroupElement::from_bit_str("101").unwrap();
        let k = Frequency::from_bit_str("111").unwrap();
        assert_eq!(dot_mod2(&x, &k).unwrap(), 0);
    }

    #[test]
    fn dot_mod2_zero_frequency() {
        let k = Frequency::from_bit_str("0000").unwrap();
        for idx in 0..16usize {
            let group = GroupSpec::boolean(4).unwrap();
            let x = group.unpack(idx).unwrap();
            assert_eq!(dot_mod2(&x, &k).unwrap(), 0);
        }
    }

    #[test]
    fn dot_mod2_mixed() {
        let x = GroupElement::from_bit_str("110").unwrap();
        let k = Frequency::from_bit_str("011").unwrap();
        assert_eq!(dot_mod2(&x, &k).unwrap(), 1);
    }

    #[test]
    fn dot_mod2_rejects_mismatched_lengths() {
        let x = GroupElement::from_bit_str("10").unwrap();
        let k = Frequency::from_bit_str("101").unwrap();
        assert!(dot_mod2(&x, &k).is_err());
    }

    #[test]
    fn character_trivial_frequency_is_one() {
        let group = GroupSpec::boolean(3).unwrap();
        let k = group.frequency(vec![0, 0, 0]).unwrap();
        for idx in 0..8 {
            let x = group.unpack(idx).unwrap();
            assert_eq!(group.character(&k, &x).unwrap(), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn character_boolean_via_dot() {
        let group = GroupSpec::boolean(3).unwrap();
        let k = Frequency::from_bit_str("111").unwrap();
        let x = GroupElement::from_bit_str("101").unwrap();
        assert_eq!(group.character(&k, &x).unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn character_cyclic_quarter_turn() {
        let group = GroupSpec::cyclic(4, 1).unwrap();
        let k = group.frequency(vec![1]).unwrap();
        let x = group.element(vec![1]).unwrap();
        let c = group.character(&k, &x).unwrap();
        assert!((c - Complex64::new(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn character_is_multiplicative() {
        let group = GroupSpec::cyclic(5, 2).unwrap();
        let k = group.frequency(vec![2, 3]).unwrap();
        for a_idx in 0..25 {
            for b_idx in 0..25 {
                let a = group.unpack(a_idx).unwrap();
                let b = group.unpack(b_idx).unwrap();
                let ab = group.add(&a, &b).unwrap();
                let lhs = group.character(&k, &ab).unwrap();
                let rhs = group.character(&k, &a).unwrap() * group.character(&k, &b).unwrap();
                assert!((lhs - rhs).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn characters_are_orthogonal() {
        // Σ_x χ_k(x) χ*_s(x) = |G| δ_{ks}.
        for group in [GroupSpec::boolean(4).unwrap(), GroupSpec::cyclic(5, 2).unwrap()] {
            let len = group.dense_len().unwrap();
            for k in 0..len {
                for s in 0..len {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for x in 0..len {
                        acc += group.character_packed(k, x) * group.character_packed(s, x).conj();
                    }
                    let want = if k == s { len as f64 } else { 0.0 };
                    assert!(
                        (acc - Complex64::new(want, 0.0)).norm() < 1e-10,
                        "orthogonality failed at k={k}, s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn pack_unpack_round_trip() {
        let group = GroupSpec::cyclic(3, 4).unwrap();
        for idx in 0..81 {
            let e = group.unpack(idx).unwrap();
            assert_eq!(group.pack(&e).unwrap(), idx);
        }
        let boolean = GroupSpec::boolean(5).unwrap();
        for idx in 0..32 {
            let e = boolean.unpack(idx).unwrap();
            assert_eq!(boolean.pack(&e).unwrap(), idx);
        }
    }

    #[test]
    fn packing_is_little_endian() {
        let group = GroupSpec::boolean(3).unwrap();
        let e = group.element(vec![1, 0, 0]).unwrap();
        assert_eq!(group.pack(&e).unwrap(), 1);
        let e = group.element(vec![0, 0, 1]).unwrap();
        assert_eq!(group.pack(&e).unwrap(), 4);
    }

    #[test]
    fn dense_guard_rejects_large_groups() {
        let group = GroupSpec::boolean(40).unwrap();
        assert!(matches!(group.dense_len(), Err(Error::DenseGuard { .. })));
        // Big groups may still be described and carry elements.
        assert_eq!(group.order(), BigUint::from(2u8).pow(40));
    }

    #[test]
    fn sub_packed_matches_coordinate_sub() {
        for group in [GroupSpec::boolean(4).unwrap(), GroupSpec::cyclic(3, 3).unwrap()] {
            let len = group.dense_len().unwrap();
            for a in 0..len {
                for b in 0..len {
                    let ea = group.unpack(a).unwrap();
                    let eb = group.unpack(b).unwrap();
                    let diff = group.sub(&ea, &eb).unwrap();
                    assert_eq!(group.pack(&diff).unwrap(), group.sub_packed(a, b));
                }
            }
        }
    }

    #[test]
    fn invalid_constructions_are_rejected() {
        assert!(GroupSpec::boolean(0).is_err());
        assert!(GroupSpec::cyclic(1, 2).is_err());
        assert!(GroupSpec::cyclic(3, 0).is_err());
        let group = GroupSpec::cyclic(3, 2).unwrap();
        assert!(group.element(vec![0, 3]).is_err());
        assert!(group.element(vec![0]).is_err());
    }

    #[test]
    fn order_weight_counts_nonzero_coordinates() {
        let k = Frequency::from_bit_str("0110").unwrap();
        assert_eq!(k.order_weight(), 2);
        let group = GroupSpec::cyclic(4, 3).unwrap();
        let k = group.frequency(vec![0, 3, 2]).unwrap();
        assert_eq!(k.order_weight(), 2);
    }
}
