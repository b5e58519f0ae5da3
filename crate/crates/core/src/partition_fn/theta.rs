//! Theta values, shifted Gaussian sums and Euler-type products.

use crate::error::{Error, Result};
use crate::summation::{BoundedValue, CompensatedSum};

/// Target for automatically chosen truncations.
const EPS: f64 = 1e-17;
/// Relative widening applied to products of many rounded factors.
const PRODUCT_SLACK: f64 = 1e-13;

/// ceil(sqrt(2·ln(1/ε)/T)) + 2.
pub fn auto_n_max(area: f64) -> u32 {
    ((2.0 * (1.0 / EPS).ln() / area).sqrt().ceil() as u32).saturating_add(2)
}

/// Σ_{n ∈ Z} q^{(n + x)²} with ln q = `ln_q` < 0, summed over |n| ≤ n_max.
///
/// Only x mod 1 matters; after reducing x to [−½, ½] every omitted index has
/// |n + x| ≥ n_max + ½, giving the tail 2q^{m²}/(1 − q^{2m}), m = n_max + ½.
pub fn shift_sum(ln_q: f64, x: f64, n_max: u32) -> BoundedValue {
    let x = x - x.round();
    let mut acc = CompensatedSum::new();
    let n_max = n_max as i64;
    for n in -n_max..=n_max {
        let y = n as f64 + x;
        acc.add((ln_q * y * y).exp());
    }
    let m = n_max as f64 + 0.5;
    let tail = 2.0 * (ln_q * m * m).exp() / (-(ln_q * 2.0 * m).exp_m1());
    BoundedValue::from_partial_and_tail(acc.value(), tail)
}

/// ϑ(0; iT/2π) = Σ_{n ∈ Z} e^{−Tn²/2}, with |n| < n_max summed and the tail
/// 2e^{−T n_max²/2}/(1 − e^{−T n_max}).
pub fn theta_value_with(area: f64, n_max: u32) -> Result<BoundedValue> {
    if !(area > 0.0) || !area.is_finite() {
        return Err(Error::NonPositiveArea(area));
    }
    let n_max = n_max.max(1) as i64;
    let ln_q = -0.5 * area;
    let mut acc = CompensatedSum::new();
    for n in -(n_max - 1)..n_max {
        acc.add((ln_q * (n * n) as f64).exp());
    }
    let m = n_max as f64;
    let tail = 2.0 * (ln_q * m * m).exp() / (-(-area * m).exp_m1());
    Ok(BoundedValue::from_partial_and_tail(acc.value(), tail))
}

pub fn theta_value(area: f64) -> Result<BoundedValue> {
    if !(area > 0.0) || !area.is_finite() {
        return Err(Error::NonPositiveArea(area));
    }
    theta_value_with(area, auto_n_max(area))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductVariant {
    /// ∏ (1 − q^m)^{−2}
    Squared,
    /// ∏ (1 − q^{2m})^{−1}
    Even,
}

fn check_q(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidQ(q))
    }
}

/// Smallest M with Q^{M+1}/(1 − Q) ≤ ε.
fn product_terms(big_q: f64) -> u64 {
    let target = (EPS * (1.0 - big_q)).ln() / big_q.ln();
    (target.ceil().max(1.0) as u64).max(1)
}

/// Encloses ∏_{m ≥ 1} (1 − q^m)^{−2} or ∏_{m ≥ 1} (1 − q^{2m})^{−1}.
///
/// With Q = q (resp. q²) and c = 2 (resp. 1), the logarithm of the omitted
/// factors is at most c·Q^{M+1}/((1 − Q)(1 − Q^{M+1})).
pub fn partition_product(q: f64, variant: ProductVariant) -> Result<BoundedValue> {
    check_q(q)?;
    let (big_q, c) = match variant {
        ProductVariant::Squared => (q, 2.0),
        ProductVariant::Even => (q * q, 1.0),
    };
    if big_q == 0.0 {
        return Ok(BoundedValue::exact(1.0));
    }
    let m_max = product_terms(big_q);
    let ln_big_q = big_q.ln();
    let mut log_sum = CompensatedSum::new();
    for m in 1..=m_max {
        log_sum.add(-(-(ln_big_q * m as f64).exp()).ln_1p());
    }
    let partial = (c * log_sum.value()).exp();
    let qm1 = (ln_big_q * (m_max + 1) as f64).exp();
    let log_tail = c * qm1 / ((1.0 - big_q) * (1.0 - qm1));
    Ok(BoundedValue::new(
        partial * (1.0 - PRODUCT_SLACK),
        partial * log_tail.exp() * (1.0 + PRODUCT_SLACK),
    ))
}

/// Both sides of Σ_n q^{n²} = ∏_{m ≥ 1} (1 − q^{2m})(1 + q^{2m−1})².
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct JacobiCheck {
    pub lhs: BoundedValue,
    pub rhs: BoundedValue,
    /// |midpoint(lhs) − midpoint(rhs)|.
    pub defect: f64,
}

impl JacobiCheck {
    /// Whether the defect is explained by the enclosure widths.
    pub fn consistent(&self) -> bool {
        self.defect <= self.lhs.width() + self.rhs.width() || self.lhs.intersects(&self.rhs)
    }
}

pub fn jacobi_triple_product_check(q: f64) -> Result<JacobiCheck> {
    check_q(q)?;
    let area = -2.0 * q.ln();
    let lhs = theta_value(area)?;
    let q2 = q * q;
    let m_max = product_terms(q2);
    let mut log_sum = CompensatedSum::new();
    for m in 1..=m_max {
        let even = q.powi(2 * m as i32);
        let odd = q.powi(2 * m as i32 - 1);
        log_sum.add((-even).ln_1p() + 2.0 * odd.ln_1p());
    }
    let partial = log_sum.value().exp();
    // ∏_{m>M}(1 − q^{2m}) ≥ 1 − q^{2M+2}/(1 − q²); ∏_{m>M}(1 + q^{2m−1})² ≤ exp(2q^{2M+1}/(1 − q²))
    let lower = partial * (1.0 - q.powi(2 * m_max as i32 + 2) / (1.0 - q2));
    let upper = partial * (2.0 * q.powi(2 * m_max as i32 + 1) / (1.0 - q2)).exp();
    let rhs = BoundedValue::new(lower * (1.0 - PRODUCT_SLACK), upper * (1.0 + PRODUCT_SLACK));
    Ok(JacobiCheck {
        lhs,
        rhs,
        defect: (lhs.midpoint() - rhs.midpoint()).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_at_half() {
        // q = 1/2: 1 + 2(q + q⁴ + q⁹ + …)
        let area = 2.0 * 2f64.ln();
        let direct: f64 = 1.0 + 2.0 * (1..=8).map(|n| 0.5f64.powi(n * n)).sum::<f64>();
        let t = theta_value(area).unwrap();
        assert!(t.contains(direct) || (t.midpoint() - direct).abs() < 1e-15);
        assert!(t.width() < 1e-12);
    }

    #[test]
    fn theta_tends_to_one() {
        let t = theta_value(200.0).unwrap();
        assert!((t.midpoint() - 1.0).abs() < 1e-40 + 1e-12);
        assert!(theta_value(0.0).is_err());
        assert!(theta_value(-1.0).is_err());
    }

    #[test]
    fn shift_sum_is_periodic_and_peaks_at_zero() {
        let ln_q = -0.7;
        let a = shift_sum(ln_q, 0.3, 12);
        let b = shift_sum(ln_q, 1.3, 12);
        assert!((a.midpoint() - b.midpoint()).abs() < 1e-14);
        let zero = shift_sum(ln_q, 0.0, 12);
        assert!(zero.lower > a.upper);
        assert!(zero.intersects(&theta_value(1.4).unwrap()));
    }

    #[test]
    fn products_against_partition_series() {
        let p = crate::weights::partition_counts(200);
        let series = |x: f64| -> f64 {
            p.iter()
                .enumerate()
                .map(|(n, &c)| c as f64 * x.powi(n as i32))
                .sum()
        };
        let sq = partition_product(0.5, ProductVariant::Squared).unwrap();
        let s = series(0.5);
        assert!((sq.midpoint() - s * s).abs() < 1e-9);
        let ev = partition_product(0.5, ProductVariant::Even).unwrap();
        assert!((ev.midpoint() - series(0.25)).abs() < 1e-9);
        let tiny = partition_product(1e-12, ProductVariant::Squared).unwrap();
        assert!((tiny.midpoint() - 1.0).abs() < 1e-11);
        assert!(partition_product(1.0, ProductVariant::Even).is_err());
    }

    #[test]
    fn jacobi_identity() {
        for (q, tol) in [(1e-6, 1e-12), (0.1, 1e-9), (0.5, 1e-9), (0.9, 1e-6)] {
            let c = jacobi_triple_product_check(q).unwrap();
            assert!(c.defect <= tol, "q={q}: {c:?}");
            assert!(c.consistent());
        }
    }
}
