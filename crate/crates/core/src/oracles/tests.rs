use super::quadrature::character_jacobi_trudi;
use super::*;
use crate::weights::{
    casimir_su, casimir_u, casimir_via_decomposition, decompose, dimension_f64, Partition,
};
use crate::zeta::{zeta_su, ZetaQuery};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn su(e: &[i64]) -> HighestWeight {
    HighestWeight::special_unitary(e.to_vec()).unwrap()
}

fn u(e: &[i64]) -> HighestWeight {
    HighestWeight::unitary(e.to_vec()).unwrap()
}

/// SU(n) weights with |λ| ≤ max_size.
fn su_weights(n: usize, max_size: i64) -> Vec<HighestWeight> {
    unitary_weights(n, max_size)
        .into_iter()
        .filter(|w| w.entries()[n - 1] == 0 && w.size() <= max_size)
        .map(|w| su(w.entries()))
        .collect()
}

#[test]
fn characters_of_small_representations() {
    let angles = [0.3, 1.1, -2.0];
    let one = character_at(&su(&[0, 0, 0]), &angles).unwrap();
    assert!((one - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    let (a, b) = (0.4, 2.5);
    let trace = character_at(&su(&[1, 0]), &[a, b]).unwrap();
    assert!(
        (trace - (Complex64::from_polar(1.0, a) + Complex64::from_polar(1.0, b))).norm() < 1e-12
    );
    let x: Vec<Complex64> = angles
        .iter()
        .map(|&t| Complex64::from_polar(1.0, t))
        .collect();
    // s_(2,1)(x₁,x₂,x₃) = Σ_{i≠j} xᵢ²xⱼ + 2x₁x₂x₃
    let mut expected = x[0] * x[1] * x[2] * 2.0;
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                expected += x[i] * x[i] * x[j];
            }
        }
    }
    let chi = character_at(&su(&[2, 1, 0]), &angles).unwrap();
    assert!((chi - expected).norm() < 1e-12);
}

#[test]
fn alternant_ratio_matches_jacobi_trudi() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=4 {
        for w in unitary_weights(n, 3) {
            let angles: Vec<f64> = (0..n).map(|_| rng.gen_range(-PI..PI)).collect();
            let x: Vec<Complex64> = angles
                .iter()
                .map(|&t| Complex64::from_polar(1.0, t))
                .collect();
            let a = character_at(&w, &angles).unwrap();
            let b = character_jacobi_trudi(w.entries(), &x);
            assert!((a - b).norm() < 1e-8 * b.norm().max(1.0), "{w:?}");
        }
    }
}

#[test]
fn coincident_angles_give_the_dimension() {
    for w in [su(&[2, 1, 0]), su(&[3, 1, 0, 0]), u(&[2, 0, -1])] {
        let chi = character_at(&w, &vec![0.0; w.rank()]).unwrap();
        assert!((chi.re - dimension_f64(&w)).abs() < 1e-6, "{w:?}: {chi}");
        assert!(chi.im.abs() < 1e-6);
    }
    let partial = character_at(&su(&[1, 0, 0]), &[0.7, 0.7, 2.0]).unwrap();
    let expected = Complex64::from_polar(2.0, 0.7) + Complex64::from_polar(1.0, 2.0);
    assert!((partial - expected).norm() < 1e-8);
}

#[test]
fn indicator_examples() {
    let q = |w: HighestWeight| fs_quadrature(&w, &TorusGrid::for_weight(&w)).unwrap();
    assert_eq!(q(su(&[1, 0])), -1);
    assert_eq!(q(su(&[2, 1, 0])), 1);
    assert_eq!(q(su(&[1, 0, 0])), 0);
    assert_eq!(q(su(&[0])), 1);
}

#[test]
fn quadrature_agrees_with_the_combinatorial_rule() {
    for n in [2usize, 3] {
        for w in su_weights(n, 6) {
            let q = fs_quadrature(&w, &TorusGrid::for_weight(&w)).unwrap();
            assert_eq!(q, fs_indicator(&w), "{w:?}");
        }
    }
}

#[test]
fn doubling_the_grid_changes_nothing() {
    for w in [su(&[3, 1, 0]), su(&[4, 2, 0]), su(&[5, 0]), u(&[1, 0, -2])] {
        let g = TorusGrid::for_weight(&w);
        let fine = TorusGrid {
            points_per_angle: 2 * g.points_per_angle,
            ..g
        };
        let a = fs_integral(&w, &g).unwrap();
        let b = fs_integral(&w, &fine).unwrap();
        assert!((a - b).abs() < 1e-10, "{w:?}: {a} vs {b}");
    }
}

#[test]
fn coarse_grid_is_rejected() {
    let w = su(&[3, 1, 0]);
    let grid = TorusGrid::new(3, 5, Group::SpecialUnitary).unwrap();
    assert!(matches!(
        fs_quadrature(&w, &grid),
        Err(Error::InvalidParameter(_))
    ));
}

#[test]
fn sequential_and_parallel_quadrature_agree() {
    let w = su(&[4, 2, 0]);
    let g = TorusGrid::for_weight(&w);
    let a = fs_integral_with(&w, &g, crate::Execution::Sequential).unwrap();
    let b = fs_integral_with(&w, &g, crate::Execution::Parallel).unwrap();
    assert_eq!(a.to_bits(), b.to_bits());
}

#[test]
fn unitary_defining_representation_is_flagged() {
    let report = unitary_fs_diagnostic(&[2], 1);
    assert!(report.unstable.is_empty());
    assert!(report.mismatches.contains(&FsMismatch {
        weight: vec![1, 0],
        quadrature: 0,
        paper_rule: -1
    }));
    // a flat weight det^n with n ≠ 0 is one-dimensional and complex
    assert!(report.mismatches.iter().any(|m| m.weight == vec![1, 1]));
    assert!(!report.mismatches.iter().any(|m| m.weight == vec![0, 0]));
}

#[test]
fn casimir_examples() {
    assert_eq!(
        casimir_bruteforce(&su(&[0, 0, 0]), Group::SpecialUnitary),
        Rational::from_integer(0.into())
    );
    assert_eq!(
        casimir_bruteforce(&u(&[1, 0]), Group::Unitary),
        Rational::from_integer(1.into())
    );
    let w = su(&[4, 3, 3, 2, 1, 1, 0]);
    let d = decompose(&w);
    let via = casimir_via_decomposition(d.alpha(), d.beta(), d.shift_n(), 7, Group::SpecialUnitary)
        .unwrap();
    assert_eq!(casimir_bruteforce(&w, Group::SpecialUnitary), via);
}

#[test]
fn casimir_matches_fast_paths_on_random_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=12);
        let mut e: Vec<i64> = (0..n).map(|_| rng.gen_range(-20..=20)).collect();
        e.sort_unstable_by(|a, b| b.cmp(a));
        let w = u(&e);
        assert_eq!(casimir_bruteforce(&w, Group::Unitary), casimir_u(&w));
        assert_eq!(
            casimir_bruteforce(&w, Group::SpecialUnitary),
            casimir_su(&w)
        );
    }
}

#[test]
fn small_rank_zeta_values() {
    assert!(zeta_small_n_closed(2, 2.0, 1000)
        .unwrap()
        .contains(PI * PI / 6.0));
    assert!(zeta_small_n_closed(2, 4.0, 1000)
        .unwrap()
        .contains(PI.powi(4) / 90.0));
    let flat = zeta_small_n_closed(3, 200.0, 10).unwrap();
    assert!(flat.contains(1.0) && flat.width() < 1e-12);
    let closed = zeta_small_n_closed(3, 2.0, 400).unwrap();
    let fast = zeta_su(&ZetaQuery::new(3, 2.0, 1 << 16).unwrap()).unwrap();
    assert!(closed.intersects(&fast));
    assert!(zeta_small_n_closed(4, 2.0, 10).is_err());
    assert!(zeta_small_n_closed(2, 1.0, 10).is_err());
}

proptest! {
    #[test]
    fn characters_are_conjugation_invariant(a in -PI..PI, b in -PI..PI, c in -PI..PI, l1 in 0i64..4, l2 in 0i64..4) {
        let w = su(&[l1 + l2, l2, 0]);
        let x = character_at(&w, &[a, b, c]);
        let y = character_at(&w, &[c, a, b]);
        if let (Ok(x), Ok(y)) = (x, y) {
            prop_assert!((x - y).norm() < 1e-6 * x.norm().max(1.0));
        }
    }

    #[test]
    fn character_modulus_bounded_by_dimension(a in -PI..PI, b in -PI..PI, l1 in 0i64..6) {
        let w = su(&[l1, 0]);
        let chi = character_at(&w, &[a, b]).unwrap();
        prop_assert!(chi.norm() <= dimension_f64(&w) * (1.0 + 1e-9));
    }
}

#[test]
fn partitions_helper_is_consistent() {
    assert_eq!(su_weights(2, 3).len(), 4);
    assert!(Partition::new(vec![1]).is_ok());
}
