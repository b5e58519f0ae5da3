//! Depth-first enumeration of SU(N) highest weights by dimension.
//!
//! Weights are addressed by the shifted differences mᵢ = λᵢ − λᵢ₊₁ + 1 ≥ 1,
//! for which d_λ = ∏_{i<j} (mᵢ + … + m_{j−1})/(j − i). Every factor is
//! non-decreasing in every mₖ, so fixing a prefix and setting the remaining
//! coordinates to 1 gives a lower bound on all completions; a branch is cut
//! as soon as that bound exceeds the cutoff.

use crate::par::Execution;
use crate::weights::{dimension_exact, HighestWeight};
use num_traits::ToPrimitive;

/// Relative float slack on dimension comparisons. Float dimensions carry a
/// relative error below N²·2⁻⁵², far under this.
const DIM_SLACK: f64 = 1e-9;

/// d(m₁, …, m_k, 1, …, 1) for the first `k` coordinates of `m`.
fn prefix_bound(m: &[u64], k: usize, n: usize) -> f64 {
    let mut d = 1.0f64;
    for i in 0..k {
        let mut s = 0u64;
        for j in (i + 1)..n {
            // column j (0-based) covers m[i..j]
            s += if j - 1 < k { m[j - 1] } else { 1 };
            let gap = (j - i) as u64;
            if s != gap {
                d *= s as f64 / gap as f64;
            }
        }
    }
    d
}

fn dfs<A, V>(m: &mut Vec<u64>, depth: usize, n: usize, limit: f64, acc: &mut A, visit: &V)
where
    V: Fn(&mut A, &[u64], f64),
{
    if depth == n - 1 {
        let d = prefix_bound(m, depth, n);
        if d <= limit {
            visit(acc, m, d);
        }
        return;
    }
    let mut v = 1u64;
    loop {
        m[depth] = v;
        if prefix_bound(m, depth + 1, n) > limit {
            break;
        }
        dfs(m, depth + 1, n, limit, acc, visit);
        v += 1;
    }
    m[depth] = 1;
}

/// Visits every λ ∈ ŜU(N) whose float dimension is at most
/// `dim_cutoff · (1 + 1e-9)`, hence every λ with d_λ ≤ `dim_cutoff`.
///
/// The lattice is split on the first two coordinates; chunks are folded in
/// lexicographic order, so the result does not depend on scheduling.
pub(crate) fn visit_weights<A, V, M>(
    n: usize,
    dim_cutoff: f64,
    exec: Execution,
    make: impl Fn() -> A + Sync + Send,
    visit: V,
    merge: M,
) -> A
where
    A: Send,
    V: Fn(&mut A, &[u64], f64) + Sync + Send,
    M: Fn(&mut A, A),
{
    assert!(n >= 1);
    let limit = dim_cutoff * (1.0 + DIM_SLACK);
    let mut total = make();
    if n == 1 {
        if 1.0 <= limit {
            visit(&mut total, &[], 1.0);
        }
        return total;
    }
    let split_depth = if n == 2 { 0 } else { (n - 1).min(2) };
    let mut prefixes: Vec<Vec<u64>> = Vec::new();
    let mut m = vec![1u64; n - 1];
    collect_prefixes(&mut m, 0, split_depth, n, limit, &mut prefixes);

    let chunks = exec.map(prefixes, |prefix| {
        let mut acc = make();
        let mut m = vec![1u64; n - 1];
        m[..split_depth].copy_from_slice(&prefix);
        dfs(&mut m, split_depth, n, limit, &mut acc, &visit);
        acc
    });
    for chunk in chunks {
        merge(&mut total, chunk);
    }
    total
}

fn collect_prefixes(
    m: &mut Vec<u64>,
    depth: usize,
    split: usize,
    n: usize,
    limit: f64,
    out: &mut Vec<Vec<u64>>,
) {
    if depth == split {
        out.push(m[..split].to_vec());
        return;
    }
    let mut v = 1u64;
    loop {
        m[depth] = v;
        if prefix_bound(m, depth + 1, n) > limit {
            break;
        }
        collect_prefixes(m, depth + 1, split, n, limit, out);
        v += 1;
    }
    m[depth] = 1;
}

/// λ from shifted differences: λᵢ = Σ_{k ≥ i} (m_k − 1), λ_N = 0.
pub(crate) fn weight_from_shifted_differences(m: &[u64]) -> HighestWeight {
    let n = m.len() + 1;
    let mut entries = vec![0i64; n];
    for i in (0..n - 1).rev() {
        entries[i] = entries[i + 1] + (m[i] - 1) as i64;
    }
    HighestWeight::from_entries_unchecked(entries, crate::weights::Group::SpecialUnitary)
}

/// Every λ ∈ ŜU(N) with d_λ ≤ `dim_cutoff`, in depth-first order, with its
/// exact dimension.
pub fn enumerate_weights_by_dimension(n: usize, dim_cutoff: u64) -> Vec<(HighestWeight, u64)> {
    enumerate_weights_by_dimension_with(n, dim_cutoff, Execution::default())
}

pub fn enumerate_weights_by_dimension_with(
    n: usize,
    dim_cutoff: u64,
    exec: Execution,
) -> Vec<(HighestWeight, u64)> {
    visit_weights(
        n,
        dim_cutoff as f64,
        exec,
        Vec::new,
        |acc: &mut Vec<(HighestWeight, u64)>, m, _| {
            let w = weight_from_shifted_differences(m);
            if let Some(d) = dimension_exact(&w).to_u64() {
                if d <= dim_cutoff {
                    acc.push((w, d));
                }
            }
        },
        |a, b| a.extend(b),
    )
}

/// ∏_k C(m_k + k − 1, k): the product lower bound on d_λ.
pub fn binomial_product_bound(weight: &HighestWeight) -> f64 {
    weight
        .differences()
        .iter()
        .enumerate()
        .map(|(idx, &diff)| {
            let k = idx as u64 + 1;
            let top = diff + k; // m_k + k - 1 with m_k = diff + 1
            (0..k).fold(1.0, |acc, i| acc * (top - i) as f64 / (k - i) as f64)
        })
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_weights_by_dimension() {
        let ws = enumerate_weights_by_dimension(2, 5);
        let dims: Vec<u64> = ws.iter().map(|(_, d)| *d).collect();
        assert_eq!(dims, vec![1, 2, 3, 4, 5]);
        assert_eq!(ws[3].0.entries(), &[3, 0]);
    }

    #[test]
    fn only_trivial_below_n() {
        for n in 1..8 {
            let ws = enumerate_weights_by_dimension(n, 1);
            assert_eq!(ws.len(), 1);
            assert!(ws[0].0.is_flat());
        }
    }

    #[test]
    fn su3_small_cutoff() {
        let mut ws: Vec<Vec<i64>> = enumerate_weights_by_dimension(3, 3)
            .into_iter()
            .map(|(w, _)| w.entries().to_vec())
            .collect();
        ws.sort();
        assert_eq!(ws, vec![vec![0, 0, 0], vec![1, 0, 0], vec![1, 1, 0]]);
    }

    #[test]
    fn binomial_bound_is_below_dimension() {
        for (w, d) in enumerate_weights_by_dimension(5, 300) {
            assert!(
                binomial_product_bound(&w) <= d as f64 * (1.0 + 1e-12),
                "{w}"
            );
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = enumerate_weights_by_dimension_with(4, 500, Execution::Sequential);
        let b = enumerate_weights_by_dimension_with(4, 500, Execution::Parallel);
        assert_eq!(a, b);
    }
}
