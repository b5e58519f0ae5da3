use super::character::determinant;
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::summation::CompensatedSum;
use crate::weights::{Group, HighestWeight};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Uniform grid on the maximal torus of U(N), or on its sum-zero subtorus
/// for SU(N) (the last angle is minus the sum of the others).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusGrid {
    pub n: usize,
    pub points_per_angle: usize,
    pub group: Group,
}

impl TorusGrid {
    pub fn new(n: usize, points_per_angle: usize, group: Group) -> Result<Self> {
        if n == 0 || points_per_angle == 0 {
            return Err(Error::InvalidParameter(
                "grid needs N >= 1 and P >= 1".into(),
            ));
        }
        Ok(Self {
            n,
            points_per_angle,
            group,
        })
    }

    /// Smallest P for which the grid integrates χ_λ(t²)|Δ(t)|² exactly.
    pub fn required_points(weight: &HighestWeight) -> usize {
        let top = weight
            .entries()
            .iter()
            .map(|e| e.unsigned_abs())
            .max()
            .unwrap_or(0) as usize;
        2 * top * weight.rank() + 4
    }

    pub fn for_weight(weight: &HighestWeight) -> Self {
        Self {
            n: weight.rank(),
            points_per_angle: Self::required_points(weight),
            group: weight.group(),
        }
    }

    fn free_angles(&self) -> usize {
        match self.group {
            Group::Unitary => self.n,
            Group::SpecialUnitary => self.n - 1,
        }
    }

    pub fn node_count(&self) -> usize {
        self.points_per_angle.pow(self.free_angles() as u32)
    }
}

/// Complete homogeneous symmetric polynomials h_0..=h_k of `x`.
fn complete_homogeneous(x: &[Complex64], k: usize) -> Vec<Complex64> {
    let mut h = vec![Complex64::new(0.0, 0.0); k + 1];
    h[0] = Complex64::new(1.0, 0.0);
    for &xi in x {
        for j in 1..=k {
            let prev = h[j - 1];
            h[j] += xi * prev;
        }
    }
    h
}

/// χ_λ(x) = (x₁⋯x_N)^{λ_N} · det[h_{μᵢ−i+j}(x)] with μ = λ − λ_N.
pub(crate) fn character_jacobi_trudi(entries: &[i64], x: &[Complex64]) -> Complex64 {
    let n = entries.len();
    let last = entries[n - 1];
    let mu: Vec<usize> = entries.iter().map(|&e| (e - last) as usize).collect();
    let h = complete_homogeneous(x, mu[0] + n);
    let at = |k: i64| {
        if k < 0 {
            Complex64::new(0.0, 0.0)
        } else {
            h[k as usize]
        }
    };
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| at(mu[i] as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    let det_power = x.iter().product::<Complex64>().powi(last as i32);
    determinant(rows) * det_power
}

fn integrand(entries: &[i64], angles: &[f64]) -> f64 {
    let squares: Vec<Complex64> = angles
        .iter()
        .map(|&t| Complex64::from_polar(1.0, 2.0 * t))
        .collect();
    let mut vandermonde = 1.0;
    for (i, &a) in angles.iter().enumerate() {
        for &b in &angles[i + 1..] {
            vandermonde *= 2.0 - 2.0 * (a - b).cos();
        }
    }
    (character_jacobi_trudi(entries, &squares) * vandermonde).re
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// ∫ χ_λ(g²) dg before rounding, by the Weyl integration formula.
pub fn fs_integral(weight: &HighestWeight, grid: &TorusGrid) -> Result<f64> {
    fs_integral_with(weight, grid, Execution::default())
}

pub fn fs_integral_with(weight: &HighestWeight, grid: &TorusGrid, exec: Execution) -> Result<f64> {
    if grid.n != weight.rank() {
        return Err(Error::InvalidParameter(format!(
            "grid rank {} does not match weight rank {}",
            grid.n,
            weight.rank()
        )));
    }
    let needed = TorusGrid::required_points(weight);
    if grid.points_per_angle < needed {
        return Err(Error::InvalidParameter(format!(
            "grid has {} points per angle, weight needs {needed}",
            grid.points_per_angle
        )));
    }
    let n = grid.n;
    let p = grid.points_per_angle;
    let free = grid.free_angles();
    if free == 0 {
        // SU(1): the trivial group
        return Ok(1.0);
    }
    let step = 2.0 * PI / p as f64;
    let entries = weight.entries().to_vec();
    let inner = p.pow(free as u32 - 1);
    let slabs = exec.map((0..p).collect(), |first| {
        let mut acc = CompensatedSum::new();
        let mut angles = vec![0.0; n];
        for rest in 0..inner {
            let mut r = rest;
            angles[0] = first as f64 * step;
            for slot in angles.iter_mut().take(free).skip(1) {
                *slot = (r % p) as f64 * step;
                r /= p;
            }
            if free < n {
                angles[n - 1] = -angles[..n - 1].iter().sum::<f64>();
            }
            acc.add(integrand(&entries, &angles));
        }
        acc
    });
    let mut total = CompensatedSum::new();
    for s in &slabs {
        total.merge(s);
    }
    Ok(total.value() / grid.node_count() as f64 / factorial(n))
}

const ROUNDING_GUARD: f64 = 1e-6;

/// Frobenius–Schur indicator by torus quadrature, rounded to {−1, 0, 1}.
pub fn fs_quadrature(weight: &HighestWeight, grid: &TorusGrid) -> Result<i8> {
    let value = fs_integral(weight, grid)?;
    let nearest = value.round();
    let distance = (value - nearest).abs();
    if distance > ROUNDING_GUARD || nearest.abs() > 1.0 {
        return Err(Error::QuadratureUnstable { value, distance });
    }
    Ok(nearest as i8)
}
