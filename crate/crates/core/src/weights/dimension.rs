//! Weyl dimension d_λ = ∏_{i<j} (λᵢ − λⱼ + j − i)/(j − i).

use super::HighestWeight;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// A positive real stored as its natural logarithm.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct LogPositive {
    pub log_value: f64,
}

impl LogPositive {
    pub fn one() -> Self {
        Self { log_value: 0.0 }
    }

    pub fn from_value(x: f64) -> Self {
        assert!(x > 0.0 && x.is_finite());
        Self { log_value: x.ln() }
    }

    pub fn mul(self, other: Self) -> Self {
        Self {
            log_value: self.log_value + other.log_value,
        }
    }

    pub fn powf(self, e: f64) -> Self {
        Self {
            log_value: self.log_value * e,
        }
    }

    /// exp(log_value); may overflow to infinity.
    pub fn value(self) -> f64 {
        self.log_value.exp()
    }
}

/// Exact dimension as a big integer.
///
/// Numerator and denominator are accumulated row by row and reduced by their
/// gcd after each row, which keeps the intermediate integers small.
pub fn dimension_exact(weight: &HighestWeight) -> BigUint {
    let e = weight.entries();
    let n = e.len();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        let mut row_num = BigUint::one();
        let mut row_den = BigUint::one();
        for j in (i + 1)..n {
            let gap = (j - i) as i128;
            row_num *= BigUint::from((e[i] as i128 - e[j] as i128 + gap) as u128);
            row_den *= BigUint::from(gap as u128);
        }
        num *= row_num;
        den *= row_den;
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
    }
    debug_assert!(den.is_one());
    num / den
}

/// Running product kept as `mantissa · 2^exponent` with exactly batched
/// integer factors, so only a handful of roundings occur.
struct ScaledProduct {
    chunk: u128,
    mantissa: f64,
    exponent: i64,
}

impl ScaledProduct {
    const CHUNK_LIMIT: u128 = 1 << 64;
    const SCALE: f64 = 18446744073709551616.0; // 2^64

    fn new() -> Self {
        Self {
            chunk: 1,
            mantissa: 1.0,
            exponent: 0,
        }
    }

    fn mul(&mut self, factor: u64) {
        if self.chunk >= Self::CHUNK_LIMIT {
            self.flush();
        }
        self.chunk *= factor as u128;
    }

    fn flush(&mut self) {
        self.mantissa *= self.chunk as f64;
        self.chunk = 1;
        while self.mantissa >= Self::SCALE {
            self.mantissa /= Self::SCALE;
            self.exponent += 64;
        }
    }

    fn ln(mut self) -> f64 {
        self.flush();
        self.mantissa.ln() + self.exponent as f64 * std::f64::consts::LN_2
    }
}

/// ln d_λ without big integers or log-gamma.
pub fn dimension_log(weight: &HighestWeight) -> LogPositive {
    let e = weight.entries();
    let n = e.len();
    let mut num = ScaledProduct::new();
    let mut den = ScaledProduct::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = (j - i) as i64;
            let top = e[i] - e[j] + gap;
            if top != gap {
                num.mul(top as u64);
                den.mul(gap as u64);
            }
        }
    }
    LogPositive {
        log_value: num.ln() - den.ln(),
    }
}

/// d_λ as a float, for hot loops where N and d are moderate.
pub fn dimension_f64(weight: &HighestWeight) -> f64 {
    let e = weight.entries();
    let n = e.len();
    let mut d = 1.0;
    for i in 0..n {
        for j in (i + 1)..n {
            if e[i] != e[j] {
                let gap = (j - i) as f64;
                d *= 1.0 + (e[i] - e[j]) as f64 / gap;
            }
        }
    }
    d
}
