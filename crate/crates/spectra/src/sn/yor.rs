//! Young's orthogonal representation: real orthogonal irrep matrices built
//! from axial distances on standard Young tableaux.
//!
//! The basis for the irrep `λ` is the set of standard tableaux of shape `λ`
//! in a fixed enumeration order. Adjacent transpositions act by a signed
//! diagonal plus, where the swap keeps the tableau standard, a rotation into
//! the swapped tableau; general permutations are products of the generators
//! along an adjacent-transposition factorization.

use std::collections::HashMap;

use ndarray::Array2;

use super::{factorial, partitions, Partition, Permutation, SN_HARD_GUARD};
use crate::error::Error;
use crate::Result;

/// Positions of values `0..n−1` in a standard tableau: `pos[v] = (row, col)`.
type TableauPositions = Vec<(usize, usize)>;

/// Enumerate the standard Young tableaux of a shape, in the DFS order that
/// places each value in the lowest admissible row first.
fn enumerate_tableaux(shape: &[usize]) -> Vec<TableauPositions> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut fill = vec![0usize; shape.len()];
    let mut positions: TableauPositions = Vec::with_capacity(n);
    fn rec(
        v: usize,
        n: usize,
        shape: &[usize],
        fill: &mut Vec<usize>,
        positions: &mut TableauPositions,
        out: &mut Vec<TableauPositions>,
    ) {
        if v == n {
            out.push(positions.clone());
            return;
        }
        for row in 0..shape.len() {
            let admissible = fill[row] < shape[row] && (row == 0 || fill[row - 1] > fill[row]);
            if admissible {
                positions.push((row, fill[row]));
                fill[row] += 1;
                rec(v + 1, n, shape, fill, positions, out);
                fill[row] -= 1;
                positions.pop();
            }
        }
    }
    rec(0, n, shape, &mut fill, &mut positions, &mut out);
    out
}

/// The action of one adjacent transposition on the tableau basis, stored
/// column-sparse: column `t` has `diag[t]` at row `t` and, when
/// `partner[t] ≠ t`, `off[t]` at row `partner[t]`.
#[derive(Debug, Clone)]
pub(crate) struct CompactGenerator {
    diag: Vec<f64>,
    partner: Vec<usize>,
    off: Vec<f64>,
}

impl CompactGenerator {
    fn build(tableaux: &[TableauPositions], value: usize) -> Self {
        let dim = tableaux.len();
        let index: HashMap<&TableauPositions, usize> =
            tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut diag = vec![0.0; dim];
        let mut partner = (0..dim).collect::<Vec<_>>();
        let mut off = vec![0.0; dim];
        for (t, pos) in tableaux.iter().enumerate() {
            let (r1, c1) = pos[value];
            let (r2, c2) = pos[value + 1];
            if r1 == r2 {
                diag[t] = 1.0;
            } else if c1 == c2 {
                diag[t] = -1.0;
            } else {
                let rho = (c2 as f64 - r2 as f64) - (c1 as f64 - r1 as f64);
                let d = 1.0 / rho;
                let mut swapped = pos.clone();
                swapped.swap(value, value + 1);
                let other = *index.get(&swapped).expect("swapped tableau is standard");
                diag[t] = d;
                partner[t] = other;
                off[t] = (1.0 - d * d).sqrt();
            }
        }
        Self { diag, partner, off }
    }

    /// Dense matrix form of the generator.
    fn to_dense(&self) -> Array2<f64> {
        let dim = self.diag.len();
        let mut m = Array2::zeros((dim, dim));
        for t in 0..dim {
            m[[t, t]] = self.diag[t];
            if self.partner[t] != t {
                m[[self.partner[t], t]] = self.off[t];
            }
        }
        m
    }

    /// In-place right multiplication `M ← M · G`, exploiting the pair
    /// structure of the generator's columns.
    pub(crate) fn right_multiply(&self, m: &mut Array2<f64>) {
        let dim = self.diag.len();
        let rows = m.nrows();
        for t in 0..dim {
            let p = self.partner[t];
            if p == t {
                let d = self.diag[t];
                for r in 0..rows {
                    m[[r, t]] *= d;
                }
            } else if p > t {
                let (dt, dp, o) = (self.diag[t], self.diag[p], self.off[t]);
                for r in 0..rows {
                    let a = m[[r, t]];
                    let b = m[[r, p]];
                    m[[r, t]] = dt * a + o * b;
                    m[[r, p]] = o * a + dp * b;
                }
            }
        }
    }
}

/// All irreps of `𝕊ₙ` in Young's orthogonal basis, generators precomputed
/// once. Read-only after construction, so a shared reference is safe across
/// threads.
#[derive(Debug, Clone)]
pub struct IrrepTable {
    n: usize,
    partitions: Vec<Partition>,
    dims: Vec<usize>,
    generators: Vec<Vec<CompactGenerator>>,
}

impl IrrepTable {
    /// Build the table for `𝕊ₙ`, `1 ≤ n ≤ 8`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > SN_HARD_GUARD {
            return Err(Error::SnGuard { n, max: SN_HARD_GUARD });
        }
        let partitions = partitions(n)?;
        let mut dims = Vec::with_capacity(partitions.len());
        let mut generators = Vec::with_capacity(partitions.len());
        for partition in &partitions {
            let tableaux = enumerate_tableaux(partition.parts());
            dims.push(tableaux.len());
            let gens = (0..n.saturating_sub(1))
                .map(|value| CompactGenerator::build(&tableaux, value))
                .collect();
            generators.push(gens);
        }
        debug_assert_eq!(
            dims.iter().map(|d| d * d).sum::<usize>(),
            factorial(n),
            "irrep dimensions must square-sum to n!"
        );
        Ok(Self { n, partitions, dims, generators })
    }

    /// The group size parameter `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The partitions of `n` indexing the irreps, `(n)` first.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Irrep dimensions in partition order.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Index of a partition in this table.
    pub fn index_of(&self, partition: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == partition)
    }

    /// The dense generator matrix `σ_λ(s_{value})`.
    pub fn generator(&self, partition_index: usize, value: usize) -> Array2<f64> {
        self.generators[partition_index][value].to_dense()
    }

    pub(crate) fn apply_generator(&self, partition_index: usize, value: usize, m: &mut Array2<f64>) {
        self.generators[partition_index][value].right_multiply(m);
    }

    /// The irrep matrix `σ_λ(π)` as a product of generators along an
    /// adjacent-transposition factorization.
    pub fn irrep(&self, partition_index: usize, permutation: &Permutation) -> Result<Array2<f64>> {
        if permutation.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: permutation.n() });
        }
        let dim = self.dims[partition_index];
        let mut m = Array2::eye(dim);
        for g in permutation.adjacent_factorization() {
            self.generators[partition_index][g].right_multiply(&mut m);
        }
        Ok(m)
    }
}

/// Standalone Young-orthogonal irrep matrix `σ_λ(π)`.
pub fn young_orthogonal_irrep(partition: &Partition, permutation: &Permutation) -> Result<Array2<f64>> {
    if partition.n() != permutation.n() {
        return Err(Error::DimensionMismatch {
            expected: partition.n(),
            got: permutation.n(),
        });
    }
    let tableaux = enumerate_tableaux(partition.parts());
    let generators: Vec<CompactGenerator> = (0..partition.n().saturating_sub(1))
        .map(|value| CompactGenerator::build(&tableaux, value))
        .collect();
    let mut m = Array2::eye(tableaux.len());
    for g in permutation.adjacent_factorization() {
        generators[g].right_multiply(&mut m);
    }
    Ok(m)
}
