//! Almost-flat weights λ_N(α, β, n) and the parity-normalised inverse map.

use super::{casimir::total_content, Group, HighestWeight, Partition, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;

/// (α, β, n, N) with λ = λ_N(α, β, n).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightDecomposition {
    alpha: Partition,
    beta: Partition,
    shift_n: i64,
    ambient_n: usize,
}

impl WeightDecomposition {
    /// Requires `len(α) + len(β) + 1 <= N`.
    pub fn new(alpha: Partition, beta: Partition, shift_n: i64, ambient_n: usize) -> Result<Self> {
        let required = alpha.len() + beta.len() + 1;
        if ambient_n < required {
            return Err(Error::AmbientTooSmall {
                n: ambient_n,
                required,
            });
        }
        Ok(Self {
            alpha,
            beta,
            shift_n,
            ambient_n,
        })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn shift_n(&self) -> i64 {
        self.shift_n
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    /// λ_N(α, β, n), tagged unitary.
    pub fn reconstruct(&self) -> HighestWeight {
        build_entries(
            &self.alpha,
            &self.beta,
            self.shift_n,
            self.ambient_n,
            Group::Unitary,
        )
    }

    /// λ_N(α, β), tagged special unitary (ignores `shift_n`).
    pub fn reconstruct_su(&self) -> HighestWeight {
        let n = self.beta.first() as i64;
        build_entries(
            &self.alpha,
            &self.beta,
            n,
            self.ambient_n,
            Group::SpecialUnitary,
        )
    }

    /// Casimir of the reconstructed weight through the content formula.
    pub fn casimir(&self, variant: Group) -> Rational {
        casimir_via_decomposition(
            &self.alpha,
            &self.beta,
            self.shift_n,
            self.ambient_n,
            variant,
        )
        .expect("a decomposition always satisfies N >= r + s")
    }
}

fn build_entries(
    alpha: &Partition,
    beta: &Partition,
    n: i64,
    ambient: usize,
    group: Group,
) -> HighestWeight {
    let r = alpha.len();
    let s = beta.len();
    let mut entries = Vec::with_capacity(ambient);
    entries.extend(alpha.parts().iter().map(|&a| a as i64 + n));
    entries.extend(std::iter::repeat_n(n, ambient - r - s));
    entries.extend(beta.parts().iter().rev().map(|&b| n - b as i64));
    HighestWeight::from_entries_unchecked(entries, group)
}

/// λ_N(α, β, n) = (α₁+n, …, α_r+n, n, …, n, n−β_s, …, n−β₁).
///
/// N = r + s is rejected: there the decomposition is not unique.
pub fn build_weight(
    alpha: &Partition,
    beta: &Partition,
    n: i64,
    ambient: usize,
) -> Result<HighestWeight> {
    let required = alpha.len() + beta.len() + 1;
    if ambient < required {
        return Err(Error::AmbientTooSmall {
            n: ambient,
            required,
        });
    }
    Ok(build_entries(alpha, beta, n, ambient, Group::Unitary))
}

/// λ_N(α, β) = λ_N(α, β, β₁), which ends in 0.
pub fn build_su_weight(
    alpha: &Partition,
    beta: &Partition,
    ambient: usize,
) -> Result<HighestWeight> {
    let required = alpha.len() + beta.len() + 1;
    if ambient < required {
        return Err(Error::AmbientTooSmall {
            n: ambient,
            required,
        });
    }
    let n = beta.first() as i64;
    Ok(build_entries(
        alpha,
        beta,
        n,
        ambient,
        Group::SpecialUnitary,
    ))
}

/// Splits λ ∈ Û(N) as (λ − λ_N, λ_N).
pub fn shift_split(weight: &HighestWeight) -> (HighestWeight, i64) {
    let last = *weight.entries().last().expect("weights are non-empty");
    let entries = weight.entries().iter().map(|&x| x - last).collect();
    (
        HighestWeight::from_entries_unchecked(entries, Group::SpecialUnitary),
        last,
    )
}

/// Row caps (M₁, M₂) of the parity rule: (M, M) for N = 2M+1, (M−1, M) for N = 2M.
pub(crate) fn parity_caps(ambient: usize) -> (usize, usize) {
    let m = ambient / 2;
    if ambient % 2 == 1 {
        (m, m)
    } else {
        (m - 1, m)
    }
}

/// Parity-normalised decomposition.
///
/// Unitary weights are first reduced by [`shift_split`]; the returned
/// `shift_n` then absorbs both β₁ and the split-off constant.
pub fn decompose(weight: &HighestWeight) -> WeightDecomposition {
    let (su, offset) = shift_split(weight);
    let e = su.entries();
    let ambient = e.len();
    let (m1, m2) = parity_caps(ambient);
    let pivot = e[m1];
    let alpha: Vec<u32> = e[..m1].iter().map(|&x| (x - pivot) as u32).collect();
    let beta: Vec<u32> = (1..=m2).map(|j| (pivot - e[ambient - j]) as u32).collect();
    let alpha = Partition::new(alpha).expect("differences of a non-increasing tuple");
    let beta = Partition::new(beta).expect("differences of a non-increasing tuple");
    WeightDecomposition {
        alpha,
        beta,
        shift_n: pivot + offset,
        ambient_n: ambient,
    }
}

/// Casimir of λ_N(α, β, n) through the content formula; valid for N ≥ r + s.
///
/// Unitary: |α|+|β|+n² + (2/N)(K(α)+K(β)+n(|α|−|β|)).
/// Special unitary: |α|+|β| + (2/N)(K(α)+K(β)) − (|α|−|β|)²/N², independent of n.
pub fn casimir_via_decomposition(
    alpha: &Partition,
    beta: &Partition,
    n: i64,
    ambient: usize,
    variant: Group,
) -> Result<Rational> {
    let required = (alpha.len() + beta.len()).max(1);
    if ambient < required {
        return Err(Error::AmbientTooSmall {
            n: ambient,
            required,
        });
    }
    let a = alpha.size() as i128;
    let b = beta.size() as i128;
    let k = (total_content(alpha) + total_content(beta)) as i128;
    let nn = ambient as i128;
    let n = n as i128;
    Ok(match variant {
        Group::Unitary => Rational::new(
            BigInt::from(nn * (a + b + n * n) + 2 * (k + n * (a - b))),
            BigInt::from(nn),
        ),
        Group::SpecialUnitary => Rational::new(
            BigInt::from(nn * nn * (a + b) + 2 * nn * k - (a - b) * (a - b)),
            BigInt::from(nn * nn),
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{casimir_su, casimir_u};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn figure_weight_has_two_constructions() {
        let w1 = build_weight(&p(&[2, 1, 1]), &p(&[2, 1, 1]), 2, 7).unwrap();
        let w2 = build_weight(&p(&[3, 2, 2, 1]), &p(&[1]), 1, 7).unwrap();
        assert_eq!(w1.entries(), &[4, 3, 3, 2, 1, 1, 0]);
        assert_eq!(w1, w2);
        let su = build_su_weight(&p(&[2, 1, 1]), &p(&[2, 1, 1]), 7).unwrap();
        assert_eq!(su.entries(), &[4, 3, 3, 2, 1, 1, 0]);
    }

    #[test]
    fn construction_edge_cases() {
        assert_eq!(
            build_weight(&p(&[]), &p(&[]), 5, 3).unwrap().entries(),
            &[5, 5, 5]
        );
        assert_eq!(
            build_su_weight(&p(&[1]), &p(&[]), 4).unwrap().entries(),
            &[1, 0, 0, 0]
        );
        assert_eq!(
            build_su_weight(&p(&[]), &p(&[1]), 3).unwrap().entries(),
            &[1, 1, 0]
        );
        assert_eq!(
            build_weight(&p(&[1]), &p(&[1]), 0, 2),
            Err(Error::AmbientTooSmall { n: 2, required: 3 })
        );
    }

    #[test]
    fn decomposition_examples() {
        let w = HighestWeight::special_unitary(vec![4, 3, 3, 2, 1, 1, 0]).unwrap();
        let d = decompose(&w);
        assert_eq!(d.alpha(), &p(&[2, 1, 1]));
        assert_eq!(d.beta(), &p(&[2, 1, 1]));
        assert_eq!(d.shift_n(), 2);

        let zero = HighestWeight::zero(6, Group::SpecialUnitary);
        let d = decompose(&zero);
        assert!(d.alpha().is_empty() && d.beta().is_empty());

        let w = HighestWeight::special_unitary(vec![1, 1, 0, 0]).unwrap();
        let d = decompose(&w);
        assert!(d.alpha().len() <= 1 && d.beta().len() <= 2);
        assert_eq!(d.reconstruct_su(), w);
    }

    #[test]
    fn shift_split_examples() {
        let (w, n) = shift_split(&HighestWeight::unitary(vec![5, 5, 5]).unwrap());
        assert_eq!((w.entries(), n), (&[0i64, 0, 0][..], 5));
        let (w, n) = shift_split(&HighestWeight::unitary(vec![4, 3, 0]).unwrap());
        assert_eq!((w.entries(), n), (&[4i64, 3, 0][..], 0));
        let (w, n) = shift_split(&HighestWeight::unitary(vec![3, 2, -1]).unwrap());
        assert_eq!((w.entries(), n), (&[4i64, 3, 0][..], -1));
    }

    #[test]
    fn unitary_decomposition_reconstructs() {
        let w = HighestWeight::unitary(vec![3, 2, 2, -1, -4]).unwrap();
        assert_eq!(decompose(&w).reconstruct(), w);
    }

    #[test]
    fn content_formula_examples() {
        let v = casimir_via_decomposition(&p(&[2]), &p(&[]), 0, 10, Group::Unitary).unwrap();
        assert_eq!(v, Rational::new(11.into(), 5.into()));
        let v = casimir_via_decomposition(&p(&[]), &p(&[]), 3, 4, Group::Unitary).unwrap();
        assert_eq!(v, Rational::from_integer(9.into()));
        let v = casimir_via_decomposition(&p(&[1]), &p(&[1]), 1, 4, Group::SpecialUnitary).unwrap();
        assert_eq!(v, Rational::from_integer(2.into()));
        let w = HighestWeight::special_unitary(vec![2, 1, 1, 0]).unwrap();
        assert_eq!(casimir_su(&w), v);
        let w = HighestWeight::unitary(vec![2, 0, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(casimir_u(&w), Rational::new(11.into(), 5.into()));
    }

    #[test]
    fn content_formula_allows_boundary_rank() {
        // N = r + s is fine for the Casimir identity even though the
        // constructor refuses it.
        assert!(casimir_via_decomposition(&p(&[1]), &p(&[1]), 0, 2, Group::Unitary).is_ok());
        assert!(casimir_via_decomposition(&p(&[1]), &p(&[1]), 0, 1, Group::Unitary).is_err());
    }
}
