use crate::error::{Error, Result};
use crate::weights::HighestWeight;
use num_complex::Complex64;

/// Determinant by LU with partial pivoting; consumes the matrix.
pub(crate) fn determinant(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let n = a.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .unwrap();
        if a[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for row in col + 1..n {
            let f = a[row][col] / p;
            if f.norm() == 0.0 {
                continue;
            }
            for k in col..n {
                let v = a[col][k];
                a[row][k] -= f * v;
            }
        }
    }
    det
}

fn alternant(exponents: &[i64], angles: &[f64]) -> Complex64 {
    let rows = exponents
        .iter()
        .map(|&e| {
            angles
                .iter()
                .map(|&t| Complex64::from_polar(1.0, e as f64 * t))
                .collect()
        })
        .collect();
    determinant(rows)
}

fn ratio(weight: &HighestWeight, angles: &[f64]) -> Complex64 {
    let n = weight.rank() as i64;
    let e = weight.entries();
    let top: Vec<i64> = (0..e.len()).map(|j| e[j] + n - 1 - j as i64).collect();
    let bottom: Vec<i64> = (0..e.len()).map(|j| n - 1 - j as i64).collect();
    alternant(&top, angles) / alternant(&bottom, angles)
}

fn min_separation(angles: &[f64]) -> f64 {
    let mut sep = f64::INFINITY;
    for (i, &a) in angles.iter().enumerate() {
        for &b in &angles[i + 1..] {
            sep = sep.min((Complex64::from_polar(1.0, a) - Complex64::from_polar(1.0, b)).norm());
        }
    }
    sep
}

const SEPARATION_FLOOR: f64 = 1e-4;
const STABLE: f64 = 1e-8;
const LEVELS: usize = 8;

/// Weyl character χ_λ(diag(e^{iθ₁}, …, e^{iθ_N})) as a ratio of alternants.
///
/// Nearly coincident eigenvalues are spread by the deterministic perturbation
/// θ_k ± k·h. The average over ±h is even and analytic in h, so a Neville
/// table in h² extrapolates to h = 0; successive diagonal entries must agree
/// to 1e-8 relative to max(1, |χ|).
pub fn character_at(weight: &HighestWeight, angles: &[f64]) -> Result<Complex64> {
    if angles.len() != weight.rank() {
        return Err(Error::InvalidParameter(format!(
            "expected {} angles, got {}",
            weight.rank(),
            angles.len()
        )));
    }
    if weight.rank() <= 1 || min_separation(angles) >= SEPARATION_FLOOR {
        return Ok(ratio(weight, angles));
    }
    let at = |h: f64| {
        let spread: Vec<f64> = angles
            .iter()
            .enumerate()
            .map(|(k, &t)| t + h * (k as f64 + 1.0))
            .collect();
        ratio(weight, &spread)
    };
    let even = |h: f64| (at(h) + at(-h)) * 0.5;
    let mut steps: Vec<f64> = Vec::new();
    let mut table: Vec<Complex64> = Vec::new();
    let mut previous: Option<Complex64> = None;
    let mut spread = f64::INFINITY;
    let mut h = 0.2;
    for _ in 0..LEVELS {
        steps.push(h * h);
        table.push(even(h));
        // in-place Neville update towards h² = 0
        let last = table.len() - 1;
        for j in (0..last).rev() {
            let ratio = steps[j] / steps[last];
            table[j] = table[j + 1] + (table[j + 1] - table[j]) / (ratio - 1.0);
        }
        let estimate = table[0];
        if let Some(prev) = previous {
            spread = (estimate - prev).norm();
            if spread <= STABLE * estimate.norm().max(1.0) {
                return Ok(estimate);
            }
        }
        previous = Some(estimate);
        h /= 2.0;
    }
    Err(Error::DegenerateAngles(spread))
}
