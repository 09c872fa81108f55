//! Harmonic analysis over the symmetric group at desk scale.
//!
//! Permutations use one-line notation with 0-based indices internally
//! (`π.apply(i)` is the image of position `i`); the text format `"2,4,1,3"`
//! is 1-based. Functions over `𝕊ₙ` are dense vectors indexed by the
//! lexicographic rank of the one-line notation. Composition is
//! `(a ∘ b)(i) = a(b(i))` throughout.

mod markov;
mod pattern;
mod transform;
mod yor;

pub use markov::{
    class_diagonality_check, condition, diffuse_brute, diffuse_spectral, diffusion_kernel,
    is_class_function, markov_model, Step,
};
pub use pattern::{lift, marginal_pattern, pattern_indicator, PatternMap};
pub use transform::{sn_convolve, sn_fourier, sn_inverse_fourier, SnFunction, SnSpectrum};
pub use yor::{young_orthogonal_irrep, IrrepTable};

use crate::error::Error;
use crate::Result;

/// Hard ceiling on `n`: `8! = 40320` table entries.
pub const SN_HARD_GUARD: usize = 8;

/// Scale policy for full-transform paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SnScale {
    /// Transforms up to `n = 6` (720 elements).
    Standard,
    /// Transforms up to `n = 8`; costs grow with `(n!)²`, so expect seconds.
    Extended,
}

impl SnScale {
    /// Largest `n` this policy transforms.
    pub fn max_transform_n(self) -> usize {
        match self {
            SnScale::Standard => 6,
            SnScale::Extended => SN_HARD_GUARD,
        }
    }

    pub(crate) fn check(self, n: usize) -> Result<()> {
        if n > self.max_transform_n() {
            return Err(Error::SnGuard { n, max: self.max_transform_n() });
        }
        if self == SnScale::Extended && n > 6 {
            log::warn!(
                "running full 𝕊_{n} transforms: {} table entries and quadratic work",
                factorial(n)
            );
        }
        Ok(())
    }
}

/// `n!` as usize; callers keep `n ≤ 8` so this never overflows.
pub(crate) fn factorial(n: usize) -> usize {
    (2..=n).product::<usize>().max(1)
}

/// A permutation of `{0, …, n−1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `n` points.
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// From 0-based images; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    /// From 1-based one-line notation, e.g. `[2, 4, 1, 3]`.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        let images = one_based
            .iter()
            .map(|&v| {
                v.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation("one-line entries are 1-based".into()))
            })
            .collect::<Result<Vec<usize>>>()?;
        Self::from_images(images)
    }

    /// Parse the text format `"2,4,1,3"` (1-based, comma-separated).
    pub fn parse_one_line(text: &str) -> Result<Self> {
        let entries = text
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidPermutation(format!("bad one-line entry '{}'", tok.trim()))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        Self::from_one_line(&entries)
    }

    /// The transposition swapping `i` and `j` (0-based) on `n` points.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n || i == j {
            return Err(Error::InvalidPermutation(format!("bad transposition ({i} {j}) on {n}")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Ok(Self { images })
    }

    /// Number of points.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of position `i` (0-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// The 0-based image vector.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: other.n() });
        }
        Ok(Self { images: other.images.iter().map(|&i| self.images[i]).collect() })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Self { images }
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// Text rendering `"2,4,1,3"`.
    pub fn one_line_string(&self) -> String {
        self.one_line()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Rank in the lexicographic order of one-line notations (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        for i in 0..n {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&v| v < self.images[i])
                .count();
            rank = rank * (n - i) + smaller_later;
        }
        rank
    }

    /// The permutation of the given lexicographic rank.
    pub fn from_lex_rank(n: usize, mut rank: usize) -> Result<Self> {
        let total = factorial(n);
        if rank >= total {
            return Err(Error::InvalidPermutation(format!("rank {rank} out of range for n = {n}")));
        }
        let mut available: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let block = factorial(n - 1 - i);
            let pick = rank / block;
            rank %= block;
            images.push(available.remove(pick));
        }
        Ok(Self { images })
    }

    /// Sign of the permutation (+1 for even, −1 for odd).
    pub fn sign(&self) -> f64 {
        let mut inversions = 0usize;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    /// Cycle type as a partition of `n`.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths partition n")
    }

    /// Factor into adjacent transpositions `s_{j}` (0-based, swapping `j` and
    /// `j+1`) so that `self = s_{g₁} ∘ s_{g₂} ∘ … ∘ s_{g_m}` in output order.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut swaps = Vec::new();
        // Bubble sort to the identity, recording position swaps; each swap is
        // a right multiplication by s_j, so the factorization is the reverse.
        loop {
            let mut sorted = true;
            for j in 0..w.len().saturating_sub(1) {
                if w[j] > w[j + 1] {
                    w.swap(j, j + 1);
                    swaps.push(j);
                    sorted = false;
                }
            }
            if sorted {
                break;
            }
        }
        swaps.reverse();
        swaps
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.one_line_string())
    }
}

/// All permutations of `n` points in lexicographic one-line order.
pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 || n > SN_HARD_GUARD {
        return Err(Error::SnGuard { n, max: SN_HARD_GUARD });
    }
    let total = factorial(n);
    let mut out = Vec::with_capacity(total);
    for rank in 0..total {
        out.push(Permutation::from_lex_rank(n, rank)?);
    }
    Ok(out)
}

/// An integer partition `λ ⊢ n`, parts weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Wrap parts; they must be positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Irrep dimension by the hook length formula.
    pub fn dimension(&self) -> usize {
        let n = self.n();
        let rows = &self.parts;
        // Column lengths.
        let cols: Vec<usize> = (0..rows[0])
            .map(|c| rows.iter().filter(|&&r| r > c).count())
            .collect();
        let mut hooks_product = 1u128;
        for (r, &row_len) in rows.iter().enumerate() {
            for (c, &col_len) in cols.iter().enumerate().take(row_len) {
                let hook = (row_len - c) + (col_len - r) - 1;
                hooks_product *= hook as u128;
            }
        }
        let mut numerator = 1u128;
        for k in 2..=n {
            numerator *= k as u128;
        }
        (numerator / hooks_product) as usize
    }

    /// Render as `"3,1,1"`.
    pub fn label(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// All partitions of `n` in descending lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::InvalidPartition("n must be positive".into()));
    }
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Outcome of comparing two partitions in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    /// Every partial sum of the left is ≥ the right's.
    Dominates,
    /// Every partial sum of the left is ≤ the right's.
    DominatedBy,
    /// The same partition.
    Equal,
    /// Partial sums cross: the partitions are incomparable.
    Incomparable,
}

/// Compare partitions of the same `n` by their partial sums.
pub fn dominance(a: &Partition, b: &Partition) -> Result<Dominance> {
    if a.n() != b.n() {
        return Err(Error::InvalidPartition(format!(
            "cannot compare partitions of {} and {}",
            a.n(),
            b.n()
        )));
    }
    if a == b {
        return Ok(Dominance::Equal);
    }
    let len = a.parts.len().max(b.parts.len());
    let mut ge = true;
    let mut le = true;
    let (mut sum_a, mut sum_b) = (0usize, 0usize);
    for i in 0..len {
        sum_a += a.parts.get(i).copied().unwrap_or(0);
        sum_b += b.parts.get(i).copied().unwrap_or(0);
        if sum_a < sum_b {
            ge = false;
        }
        if sum_a > sum_b {
            le = false;
        }
    }
    Ok(match (ge, le) {
        (true, false) => Dominance::Dominates,
        (false, true) => Dominance::DominatedBy,
        (false, false) => Dominance::Incomparable,
        (true, true) => Dominance::Equal,
    })
}

/// Plain-changes (Johnson–Trotter) walk over all permutations: each step
/// swaps two adjacent positions, i.e. multiplies the current permutation on
/// the right by an adjacent transposition. `visit` receives the permutation
/// and, for steps after the first, the generator index that was applied.
pub(crate) fn plain_changes_walk(n: usize, mut visit: impl FnMut(&[usize], Option<usize>)) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    let mut dir: Vec<isize> = vec![-1; n];
    visit(&perm, None);
    loop {
        // Largest mobile value.
        let mut mobile = None;
        for v in (0..n).rev() {
            let p = pos[v] as isize + dir[v];
            if p >= 0 && (p as usize) < n && perm[p as usize] < v {
                mobile = Some(v);
                break;
            }
        }
        let Some(v) = mobile else { break };
        let p = pos[v];
        let q = (p as isize + dir[v]) as usize;
        perm.swap(p, q);
        pos[v] = q;
        pos[perm[p]] = p;
        for d in dir.iter_mut().skip(v + 1) {
            *d = -*d;
        }
        visit(&perm, Some(p.min(q)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_identity_and_example() {
        let a = Permutation::from_one_line(&[2, 4, 1, 3]).unwrap();
        let id = Permutation::identity(4);
        assert_eq!(a.compose(&id).unwrap(), a);
        assert_eq!(id.compose(&a).unwrap(), a);

        // (2,1,3) ∘ (1,3,2) = (2,3,1)
        let x = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        let y = Permutation::from_one_line(&[1, 3, 2]).unwrap();
        assert_eq!(x.compose(&y).unwrap().one_line(), vec![2, 3, 1]);
    }

    #[test]
    fn inverse_round_trip() {
        let a = Permutation::from_one_line(&[2, 4, 1, 3]).unwrap();
        assert_eq!(a.compose(&a.inverse()).unwrap(), Permutation::identity(4));
        assert_eq!(a.inverse().compose(&a).unwrap(), Permutation::identity(4));
    }

    #[test]
    fn rejects_non_bijections_and_bad_text() {
        assert!(Permutation::from_one_line(&[1, 1, 3]).is_err());
        assert!(Permutation::from_one_line(&[0, 1, 2]).is_err());
        assert!(Permutation::parse_one_line("2,x,1").is_err());
        assert!(Permutation::parse_one_line("2,4,1,3").is_ok());
    }

    #[test]
    fn lex_rank_round_trip_and_order() {
        let perms = enumerate(4).unwrap();
        assert_eq!(perms.len(), 24);
        assert_eq!(perms[0], Permutation::identity(4));
        for (rank, p) in perms.iter().enumerate() {
            assert_eq!(p.lex_rank(), rank);
            assert_eq!(&Permutation::from_lex_rank(4, rank).unwrap(), p);
        }
        // Lexicographic adjacency.
        for pair in perms.windows(2) {
            assert!(pair[0].one_line() < pair[1].one_line());
        }
    }

    #[test]
    fn factorization_reassembles() {
        for p in enumerate(5).unwrap() {
            let mut acc = Permutation::identity(5);
            for g in p.adjacent_factorization() {
                let s = Permutation::transposition(5, g, g + 1).unwrap();
                acc = acc.compose(&s).unwrap();
            }
            assert_eq!(acc, p, "factorization failed for {p}");
        }
    }

    #[test]
    fn cycle_type_and_sign() {
        let id = Permutation::identity(4);
        assert_eq!(id.cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(id.sign(), 1.0);
        let t = Permutation::transposition(4, 0, 2).unwrap();
        assert_eq!(t.cycle_type().parts(), &[2, 1, 1]);
        assert_eq!(t.sign(), -1.0);
        let cycle = Permutation::from_one_line(&[2, 3, 4, 1]).unwrap();
        assert_eq!(cycle.cycle_type().parts(), &[4]);
        assert_eq!(cycle.sign(), -1.0);
    }

    #[test]
    fn partitions_count_and_order() {
        assert_eq!(partitions(4).unwrap().len(), 5);
        assert_eq!(partitions(6).unwrap().len(), 11);
        assert_eq!(partitions(8).unwrap().len(), 22);
        let list = partitions(4).unwrap();
        assert_eq!(list[0].parts(), &[4]);
        assert_eq!(list.last().unwrap().parts(), &[1, 1, 1, 1]);
    }

    #[test]
    fn dimensions_square_sum_to_group_order() {
        for n in 1..=SN_HARD_GUARD {
            let total: usize = partitions(n)
                .unwrap()
                .iter()
                .map(|p| p.dimension() * p.dimension())
                .sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn dominance_examples() {
        let top = Partition::new(vec![4]).unwrap();
        for other in partitions(4).unwrap() {
            if other != top {
                assert_eq!(dominance(&top, &other).unwrap(), Dominance::Dominates);
                assert_eq!(dominance(&other, &top).unwrap(), Dominance::DominatedBy);
            }
        }
        let a = Partition::new(vec![3, 1]).unwrap();
        let b = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(dominance(&a, &b).unwrap(), Dominance::Dominates);

        let a = Partition::new(vec![3, 3]).unwrap();
        let b = Partition::new(vec![4, 1, 1]).unwrap();
        assert_eq!(dominance(&a, &b).unwrap(), Dominance::Incomparable);
        assert_eq!(dominance(&a, &a).unwrap(), Dominance::Equal);
        assert!(dominance(&a, &Partition::new(vec![3, 1]).unwrap()).is_err());
    }

    #[test]
    fn plain_changes_visits_everything_once() {
        let mut seen = std::collections::HashSet::new();
        let mut count = 0usize;
        plain_changes_walk(5, |perm, swap| {
            if count > 0 {
                assert!(swap.is_some());
            }
            seen.insert(perm.to_vec());
            count += 1;
        });
        assert_eq!(count, 120);
        assert_eq!(seen.len(), 120);
    }

    #[test]
    fn plain_changes_swaps_compose_correctly() {
        // Applying s_j on the right of the previous permutation reproduces
        // the walk's own sequence.
        let mut prev: Option<Permutation> = None;
        plain_changes_walk(4, |perm, swap| {
            let current = Permutation::from_images(perm.to_vec()).unwrap();
            if let (Some(p), Some(j)) = (prev.clone(), swap) {
                let s = Permutation::transposition(4, j, j + 1).unwrap();
                assert_eq!(p.compose(&s).unwrap(), current);
            }
            prev = Some(current);
        });
    }
}
