use super::Histogram;
use crate::error::{Error, Result};

/// `table[k]` = number of partitions of `n` into exactly `k` parts.
fn parts_table(n: u32) -> Result<Vec<u64>> {
    let n = n as usize;
    // exact[m][k]: partitions of m into exactly k parts
    let mut exact = vec![vec![0u64; n + 1]; n + 1];
    exact[0][0] = 1;
    for m in 1..=n {
        for k in 1..=m {
            exact[m][k] = exact[m - 1][k - 1]
                .checked_add(exact[m - k][k])
                .ok_or(Error::Overflow(n as u32))?;
        }
    }
    Ok(exact.swap_remove(n))
}

pub fn partition_count(n: u32) -> Result<u64> {
    parts_table(n)?
        .iter()
        .try_fold(0u64, |acc, &c| acc.checked_add(c))
        .ok_or(Error::Overflow(n))
}

/// Bin `k` counts the partitions of `n` with exactly `k` parts.
pub fn parts_histogram(n: u32) -> Result<Histogram> {
    if n == 0 {
        return Err(Error::ZeroTotal);
    }
    let mut h = Histogram::new();
    for (k, &count) in parts_table(n)?.iter().enumerate() {
        h.add(k as u64, count);
    }
    Ok(h)
}

/// `|#even-length partitions - #odd-length partitions|` of `n`.
pub fn parity_imbalance(n: u32) -> Result<u64> {
    let h = parts_histogram(n)?;
    let (even, odd) = h.bins().iter().fold((0u64, 0u64), |(e, o), (&k, &c)| {
        if k % 2 == 0 {
            (e + c, o)
        } else {
            (e, o + c)
        }
    });
    Ok(even.abs_diff(odd))
}

/// Visits the partitions of `n` as non-increasing part lists, in reverse
/// lexicographic order.
fn for_each_partition(n: u32, mut visit: impl FnMut(&[u32])) {
    let mut parts = vec![n];
    loop {
        visit(&parts);
        // strip trailing ones, then lower the last larger part
        let mut ones = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        let Some(last) = parts.last_mut() else {
            return;
        };
        *last -= 1;
        let cap = *last;
        let mut rest = ones + 1;
        while rest > 0 {
            let part = rest.min(cap);
            parts.push(part);
            rest -= part;
        }
    }
}

/// `(p(n) - 1)` plus the number of pairs (partition, i) with
/// `λ_i >= λ_{i+1} + λ_{i+2}` over interior indices `i <= len - 2`.
///
/// Every word but `1^(n-1)` gains an edge by filling its first zero; a later
/// zero can be filled exactly when the part before the merged pair is at
/// least their sum, so this equals the edge count of the binary flip graph.
pub fn lambda_edge_statistic(n: u32) -> Result<u64> {
    if n < 2 {
        return Err(Error::Precondition(format!("the edge statistic needs n >= 2, got {n}")));
    }
    let mut partitions = 0u64;
    let mut occurrences = 0u64;
    for_each_partition(n, |parts| {
        partitions += 1;
        occurrences += parts.windows(3).filter(|w| w[0] >= w[1] + w[2]).count() as u64;
    });
    Ok(partitions - 1 + occurrences)
}
