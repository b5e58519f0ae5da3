//! Integer partitions: enumeration, counts, and extremal contents.

use super::Partition;

/// Partitions with |α| ≤ max_size: sizes ascending, lexicographically
/// decreasing within each size.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    max_size: u32,
    size: u32,
    current: Option<Vec<u32>>,
}

pub fn enumerate_partitions(max_size: u32) -> PartitionIter {
    PartitionIter {
        max_size,
        size: 0,
        current: Some(Vec::new()),
    }
}

/// Partitions of exactly `n`, lexicographically decreasing.
pub fn enumerate_partitions_of(n: u32) -> impl Iterator<Item = Partition> {
    let mut it = PartitionIter {
        max_size: n,
        size: n,
        current: Some(if n == 0 { vec![] } else { vec![n] }),
    };
    std::iter::from_fn(move || {
        let out = it.current.take()?;
        it.current = next_in_size(&out);
        Some(Partition::from_parts_unchecked(out))
    })
}

/// Successor in decreasing lexicographic order among partitions of the same size.
fn next_in_size(parts: &[u32]) -> Option<Vec<u32>> {
    let k = parts.iter().rposition(|&p| p > 1)?;
    let v = parts[k] - 1;
    let mut rem: u32 = parts[k + 1..].iter().sum::<u32>() + 1;
    let mut next = parts[..k].to_vec();
    next.push(v);
    while rem > 0 {
        let chunk = rem.min(v);
        next.push(chunk);
        rem -= chunk;
    }
    Some(next)
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        self.current = match next_in_size(&out) {
            Some(p) => Some(p),
            None if self.size < self.max_size => {
                self.size += 1;
                Some(vec![self.size])
            }
            None => None,
        };
        Some(Partition::from_parts_unchecked(out))
    }
}

/// p(0), …, p(n_max) via Euler's pentagonal recurrence.
///
/// Exact up to n_max ≈ 1200 (beyond that p(n) leaves u128); panics on overflow.
pub fn partition_counts(n_max: usize) -> Vec<u128> {
    let mut p = vec![0i128; n_max + 1];
    p[0] = 1;
    for n in 1..=n_max {
        let mut acc: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[n - g1];
            if g2 <= n {
                term = term
                    .checked_add(p[n - g2])
                    .expect("partition count overflow");
            }
            acc = if k % 2 == 1 {
                acc.checked_add(term)
            } else {
                acc.checked_sub(term)
            }
            .expect("partition count overflow");
        }
        p[n] = acc;
    }
    p.into_iter().map(|x| x as u128).collect()
}

/// Number of partitions of a = 0..=a_max with at most `max_parts` parts, as
/// floats. Built from positive additions only, so the relative rounding
/// error stays below a_max · max_parts · 2⁻⁵³.
pub fn bounded_partition_counts(a_max: usize, max_parts: usize) -> Vec<f64> {
    // c_L(a) = c_{L-1}(a) + c_L(a - L)
    let mut c = vec![0.0f64; a_max + 1];
    c[0] = 1.0;
    for l in 1..=max_parts.min(a_max) {
        for a in l..=a_max {
            c[a] += c[a - l];
        }
    }
    c
}

/// Minimal total content over partitions of `a` with at most `max_rows`
/// rows, attained by the balanced partition. `None` if no such partition.
pub fn min_content(a: u64, max_rows: usize) -> Option<i64> {
    if a == 0 {
        return Some(0);
    }
    if max_rows == 0 {
        return None;
    }
    let rows = (max_rows as u64).min(a);
    let base = a / rows;
    let extra = a % rows;
    let mut k: i64 = 0;
    for i in 1..=rows {
        let part = (base + u64::from(i <= extra)) as i64;
        k += part * (part + 1) / 2 - i as i64 * part;
    }
    Some(k)
}
