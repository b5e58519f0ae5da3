use super::{HighestWeight, Partition, Rational};
use num_bigint::BigInt;

/// (Σλᵢ², Σ_{i<j}(λᵢ − λⱼ), Σλᵢ) in exact integer arithmetic.
fn moments(weight: &HighestWeight) -> (i128, i128, i128) {
    let e = weight.entries();
    let n = e.len() as i128;
    let mut squares = 0i128;
    let mut spread = 0i128;
    let mut total = 0i128;
    for (idx, &x) in e.iter().enumerate() {
        let x = x as i128;
        let i = idx as i128 + 1;
        squares += x * x;
        // Σ_{i<j}(λᵢ − λⱼ) = Σᵢ λᵢ (N + 1 − 2i)
        spread += x * (n + 1 - 2 * i);
        total += x;
    }
    (squares, spread, total)
}

/// c₂(λ) = (1/N)(Σλᵢ² + Σ_{i<j}(λᵢ − λⱼ)).
pub fn casimir_u(weight: &HighestWeight) -> Rational {
    let (squares, spread, _) = moments(weight);
    let n = weight.rank() as i128;
    Rational::new(BigInt::from(squares + spread), BigInt::from(n))
}

/// c′₂(λ) = (1/N)(Σλᵢ² − (Σλᵢ)²/N + Σ_{i<j}(λᵢ − λⱼ)).
pub fn casimir_su(weight: &HighestWeight) -> Rational {
    let (squares, spread, total) = moments(weight);
    let n = weight.rank() as i128;
    Rational::new(
        BigInt::from(n * squares - total * total + n * spread),
        BigInt::from(n * n),
    )
}

pub fn casimir_u_f64(weight: &HighestWeight) -> f64 {
    let (squares, spread, _) = moments(weight);
    (squares + spread) as f64 / weight.rank() as f64
}

pub fn casimir_su_f64(weight: &HighestWeight) -> f64 {
    let (squares, spread, total) = moments(weight);
    let n = weight.rank() as i128;
    (n * squares - total * total + n * spread) as f64 / (n * n) as f64
}

/// K(α): sum of the contents j − i over the boxes of α.
pub fn total_content(alpha: &Partition) -> i64 {
    alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(idx, &p)| {
            let p = p as i64;
            let i = idx as i64 + 1;
            p * (p + 1) / 2 - i * p
        })
        .sum()
}
