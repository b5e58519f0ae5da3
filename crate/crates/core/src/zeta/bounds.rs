//! Explicit majorants for Witten zeta sums.

use crate::summation::{CompensatedSum, FLOAT_SLACK};

const RIEMANN_TERMS: u64 = 1 << 16;
const DOUBLE_TAIL_TERMS: u64 = 1 << 20;

/// Upper bound on the Riemann zeta value ζ(s), s > 1.
pub fn riemann_zeta_upper(s: f64) -> f64 {
    let partial: CompensatedSum = (1..=RIEMANN_TERMS).map(|n| (n as f64).powf(-s)).sum();
    let k = RIEMANN_TERMS as f64;
    (partial.value() + k.powf(1.0 - s) / (s - 1.0)) * (1.0 + FLOAT_SLACK)
}

/// Upper bound on Σ_{n ≥ k} C(n, k)^{−s}.
///
/// Past n = 4096·k the tail uses C(n, k) ≥ (n/k)^k.
fn binomial_row_sum(k: u64, s: f64) -> f64 {
    if k == 1 {
        return riemann_zeta_upper(s);
    }
    let end = 4096 * k;
    let mut acc = CompensatedSum::new();
    let mut log_binom = 0.0f64;
    for n in k..=end {
        if n > k {
            log_binom += (n as f64 / (n - k) as f64).ln();
        }
        acc.add((-s * log_binom).exp());
    }
    let ks = k as f64 * s;
    let tail = (ks * (k as f64).ln() + (1.0 - ks) * (end as f64).ln()).exp() / (ks - 1.0);
    (acc.value() + tail) * (1.0 + 1e-12)
}

/// ∏_{k=1}^{N−1} Σ_{n ≥ k} C(n, k)^{−s}, an upper bound on ζ_su(N)(s).
pub fn product_upper_bound(n: usize, s: f64) -> f64 {
    assert!(s > 1.0, "s must exceed 1");
    (1..n as u64).map(|k| binomial_row_sum(k, s)).product()
}

/// The majorant 2^{−s} + Σ_{n ≥ 3} (2/n^s + (n − 3)·2^s/(n^s (n − 1)^s)) of
/// Σ_{k ≥ 1} Σ_{n > k} C(n, k)^{−s}, with an integral bound on the tail.
pub fn binom_double_tail(s: f64) -> f64 {
    assert!(s > 1.0, "s must exceed 1");
    let two_s = 2f64.powf(s);
    let mut acc = CompensatedSum::new();
    acc.add(2f64.powf(-s));
    for n in 3..=DOUBLE_TAIL_TERMS {
        let x = n as f64;
        acc.add(2.0 * x.powf(-s) + (x - 3.0) * two_s * (x * (x - 1.0)).powf(-s));
    }
    let k = DOUBLE_TAIL_TERMS as f64;
    let tail = 2.0 * k.powf(1.0 - s) / (s - 1.0)
        + two_s * (k.powf(1.0 - 2.0 * s) + k.powf(2.0 - 2.0 * s) / (2.0 * s - 2.0));
    (acc.value() + tail) * (1.0 + FLOAT_SLACK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn riemann_bound_is_tight() {
        let z = riemann_zeta_upper(2.0);
        assert!(z >= PI * PI / 6.0);
        assert!(z - PI * PI / 6.0 < 1e-9);
    }

    #[test]
    fn product_bound_small_cases() {
        assert_eq!(product_upper_bound(1, 2.0), 1.0);
        assert!((product_upper_bound(2, 2.0) - PI * PI / 6.0).abs() < 1e-9);
        // Σ_{n≥2} (n(n−1)/2)^{−2} = 4(π²/3 − 3)
        let second = 4.0 * (PI * PI / 3.0 - 3.0);
        let expected = PI * PI / 6.0 * second;
        let got = product_upper_bound(3, 2.0);
        assert!(
            got >= expected && got - expected < 1e-8,
            "{got} vs {expected}"
        );
    }

    #[test]
    fn double_tail_dominates_brute_force() {
        let mut brute = 0.0;
        for n in 2..=200u64 {
            let mut c = 1.0f64;
            for k in 1..n {
                c = c * (n - k + 1) as f64 / k as f64;
                brute += c.powf(-2.0);
            }
        }
        let b2 = binom_double_tail(2.0);
        assert!(b2 >= brute);
        assert!(binom_double_tail(1.5) > b2);
        assert!(binom_double_tail(40.0) < 1e-11);
    }
}
