//! Real / complex / quaternionic type of irreducible U(N) and SU(N)
//! representations, read off the highest weight.

use crate::weights::{HighestWeight, Partition, WeightDecomposition};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepClass {
    Real,
    Complex,
    Quaternionic,
}

impl RepClass {
    /// Frobenius–Schur indicator: +1, 0, −1.
    pub fn indicator(self) -> i8 {
        match self {
            RepClass::Real => 1,
            RepClass::Complex => 0,
            RepClass::Quaternionic => -1,
        }
    }
}

/// Classifies the representation with highest weight λ.
///
/// With mᵢ = λᵢ − λᵢ₊₁: complex unless m is a palindrome. A self-dual
/// weight is quaternionic exactly when N ≡ 2 (mod 4) and the middle
/// difference m_{N/2} is odd; otherwise it is real. Only m enters, so the
/// answer is invariant under λ ↦ λ + n.
pub fn classify(weight: &HighestWeight) -> RepClass {
    let m = weight.differences();
    let len = m.len();
    if (0..len).any(|i| m[i] != m[len - 1 - i]) {
        return RepClass::Complex;
    }
    let n = weight.rank();
    if n % 4 == 2 && m[n / 2 - 1] % 2 == 1 {
        RepClass::Quaternionic
    } else {
        RepClass::Real
    }
}

pub fn fs_indicator(weight: &HighestWeight) -> i8 {
    classify(weight).indicator()
}

/// β̃ = (β₁ − β_M, …, β_{M−1} − β_M), β padded with zeros to length M.
pub fn beta_reduction(beta: &Partition, m: usize) -> Partition {
    assert!(beta.len() <= m, "beta has more than M = {m} parts");
    if m == 0 {
        return Partition::empty();
    }
    let last = beta.part(m);
    let parts = (1..m)
        .map(|i| beta.part(i) - last)
        .filter(|&x| x > 0)
        .collect();
    Partition::from_parts_unchecked(parts)
}

/// Whether a parity-normalised decomposition has a non-zero indicator:
/// α = β for odd N, α = β̃ for even N.
pub fn is_contributing(d: &WeightDecomposition) -> bool {
    let n = d.ambient_n();
    if n % 2 == 1 {
        d.alpha() == d.beta()
    } else {
        d.alpha() == &beta_reduction(d.beta(), n / 2)
    }
}
