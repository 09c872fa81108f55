//! Permutation-pattern marginals and lifting from homogeneous spaces.

use std::collections::BTreeSet;

use super::transform::SnFunction;
use super::{enumerate, Permutation};
use crate::error::Error;
use crate::Result;

/// A pattern: disjoint object sets mapped onto position sets of equal sizes,
/// e.g. "objects {1} land on {3} while objects {0, 2} land on {0, 1}"
/// (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMap {
    maps: Vec<(BTreeSet<usize>, BTreeSet<usize>)>,
}

impl PatternMap {
    /// Validate and wrap `(objects, positions)` pairs.
    pub fn new(maps: Vec<(Vec<usize>, Vec<usize>)>) -> Result<Self> {
        let mut seen_objects = BTreeSet::new();
        let mut seen_positions = BTreeSet::new();
        let mut out = Vec::with_capacity(maps.len());
        for (objects, positions) in maps {
            let object_set: BTreeSet<usize> = objects.iter().copied().collect();
            let position_set: BTreeSet<usize> = positions.iter().copied().collect();
            if object_set.len() != objects.len() || position_set.len() != positions.len() {
                return Err(Error::MalformedPattern("repeated entry inside a set".into()));
            }
            if object_set.len() != position_set.len() {
                return Err(Error::MalformedPattern(format!(
                    "{} objects cannot map onto {} positions",
                    object_set.len(),
                    position_set.len()
                )));
            }
            if object_set.intersection(&seen_objects).next().is_some() {
                return Err(Error::MalformedPattern("object sets overlap".into()));
            }
            if position_set.intersection(&seen_positions).next().is_some() {
                return Err(Error::MalformedPattern("position sets overlap".into()));
            }
            seen_objects.extend(object_set.iter().copied());
            seen_positions.extend(position_set.iter().copied());
            out.push((object_set, position_set));
        }
        Ok(Self { maps: out })
    }

    /// The validated `(objects, positions)` pairs.
    pub fn maps(&self) -> &[(BTreeSet<usize>, BTreeSet<usize>)] {
        &self.maps
    }

    /// Largest index referenced.
    fn max_index(&self) -> Option<usize> {
        self.maps
            .iter()
            .flat_map(|(o, p)| o.iter().chain(p.iter()))
            .max()
            .copied()
    }

    /// Whether a permutation maps every object set onto its position set.
    pub fn matches(&self, permutation: &Permutation) -> bool {
        self.maps.iter().all(|(objects, positions)| {
            let image: BTreeSet<usize> = objects.iter().map(|&o| permutation.apply(o)).collect();
            image == *positions
        })
    }

    fn check_range(&self, n: usize) -> Result<()> {
        if let Some(max) = self.max_index() {
            if max >= n {
                return Err(Error::MalformedPattern(format!("index {max} out of range for n = {n}")));
            }
        }
        Ok(())
    }
}

/// Probability mass of all permutations matching the pattern:
/// `Σ_π p(π)·𝕀[π maps each object set onto its position set]`.
pub fn marginal_pattern(p: &SnFunction, pattern: &PatternMap) -> Result<f64> {
    pattern.check_range(p.n())?;
    let mut total = 0.0;
    for (rank, perm) in enumerate(p.n())?.iter().enumerate() {
        if pattern.matches(perm) {
            total += p.values()[rank];
        }
    }
    Ok(total)
}

/// The indicator function of a pattern, useful as a conditioning likelihood.
pub fn pattern_indicator(n: usize, pattern: &PatternMap) -> Result<SnFunction> {
    pattern.check_range(n)?;
    let mut f = SnFunction::zeros(n)?;
    for (rank, perm) in enumerate(n)?.iter().enumerate() {
        if pattern.matches(perm) {
            f.values_mut()[rank] = 1.0;
        }
    }
    Ok(f)
}

/// Lift a function on positions `{0, …, n−1}` to `𝕊ₙ` through a base point:
/// `f↑(π) = f(π(base_point))`.
///
/// The lift is right-invariant under the stabiliser of the base point:
/// composing with any permutation fixing `base_point` does not change it.
pub fn lift(values: &[f64], base_point: usize) -> Result<SnFunction> {
    let n = values.len();
    if n < 2 {
        return Err(Error::InvalidArgument("lift needs at least 2 positions".into()));
    }
    if base_point >= n {
        return Err(Error::InvalidArgument(format!(
            "base point {base_point} out of range for n = {n}"
        )));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidArgument("non-finite value".into()));
    }
    let mut f = SnFunction::zeros(n)?;
    for (rank, perm) in enumerate(n)?.iter().enumerate() {
        f.values_mut()[rank] = values[perm.apply(base_point)];
    }
    Ok(f)
}
