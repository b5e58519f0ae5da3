//! Exact combinatorics of partitions and highest weights.

mod casimir;
mod decomposition;
mod dimension;
mod partitions;

pub use casimir::{casimir_su, casimir_su_f64, casimir_u, casimir_u_f64, total_content};
pub(crate) use decomposition::parity_caps;
pub use decomposition::{
    build_su_weight, build_weight, casimir_via_decomposition, decompose, shift_split,
    WeightDecomposition,
};
pub use dimension::{dimension_exact, dimension_f64, dimension_log, LogPositive};
pub use partitions::{
    bounded_partition_counts, enumerate_partitions, enumerate_partitions_of, min_content,
    partition_counts, PartitionIter,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

/// Which group a highest weight belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Unitary,
    SpecialUnitary,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Unitary => f.write_str("u"),
            Group::SpecialUnitary => f.write_str("su"),
        }
    }
}

/// An integer partition, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from non-increasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has an interior zero"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not non-increasing"
            )));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Caller guarantees the parts are positive and non-increasing.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |α|.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (1-based), 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition::from_parts_unchecked(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A highest weight of U(N) or SU(N).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HighestWeight {
    entries: Vec<i64>,
    group: Group,
}

impl HighestWeight {
    pub fn new(entries: Vec<i64>, group: Group) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidWeight("a weight needs N >= 1 entries".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(format!(
                "{entries:?} is not non-increasing"
            )));
        }
        if group == Group::SpecialUnitary && *entries.last().unwrap() != 0 {
            return Err(Error::InvalidWeight(format!(
                "{entries:?}: special unitary weights end in 0"
            )));
        }
        Ok(Self { entries, group })
    }

    pub fn unitary(entries: Vec<i64>) -> Result<Self> {
        Self::new(entries, Group::Unitary)
    }

    pub fn special_unitary(entries: Vec<i64>) -> Result<Self> {
        Self::new(entries, Group::SpecialUnitary)
    }

    /// The weight (0, ..., 0).
    pub fn zero(n: usize, group: Group) -> Self {
        assert!(n >= 1);
        Self {
            entries: vec![0; n],
            group,
        }
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<i64>, group: Group) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] >= w[1]));
        Self { entries, group }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn group(&self) -> Group {
        self.group
    }

    /// N.
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// |λ| = Σ λᵢ.
    pub fn size(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// `true` when all entries are equal.
    pub fn is_flat(&self) -> bool {
        self.entries.first() == self.entries.last()
    }

    /// Consecutive differences mᵢ = λᵢ − λᵢ₊₁, i = 1..N−1.
    pub fn differences(&self) -> Vec<u64> {
        self.entries
            .windows(2)
            .map(|w| (w[0] - w[1]) as u64)
            .collect()
    }

    /// λ + n, tagged unitary.
    pub fn shifted(&self, n: i64) -> HighestWeight {
        Self {
            entries: self.entries.iter().map(|&x| x + n).collect(),
            group: Group::Unitary,
        }
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_canonical_form() {
        let p = Partition::new(vec![3, 1, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[3, 1]);
        assert_eq!(p.size(), 4);
        assert_eq!(p.len(), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert!(Partition::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn conjugate_of_staircase() {
        let p = Partition::new(vec![3, 3, 2, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[4, 3, 2]);
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn weight_validation() {
        assert!(HighestWeight::special_unitary(vec![2, 1, 0]).is_ok());
        assert!(HighestWeight::special_unitary(vec![2, 1, 1]).is_err());
        assert!(HighestWeight::unitary(vec![0, 1]).is_err());
        assert!(HighestWeight::unitary(vec![]).is_err());
        let w = HighestWeight::unitary(vec![3, 2, -1]).unwrap();
        assert_eq!(w.size(), 4);
        assert_eq!(w.differences(), vec![1, 3]);
    }
}
