//! Slow reference implementations for cross-checking. Nothing here reuses
//! the enumeration, decoding or graph code; the word list is produced by
//! the literal recursive grammar only.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::words::{validate_by_rules, DDimPartition, Dim};

/// All partitions of `n` as non-increasing part lists, lexicographically
/// ascending.
pub fn naive_partitions(n: u32) -> Vec<Vec<u32>> {
    fn extend(remaining: u32, cap: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in 1..=remaining.min(cap) {
            current.push(part);
            extend(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(n, n, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// Largest `n` the d-dimensional oracle accepts.
pub const NAIVE_DDIM_MAX_N: u32 = 12;

/// All d-dimensional partitions of `n`: every downward-closed support of at
/// most `n` cells inside the box `[1, n]^d`, filled in every axis-monotone
/// way that sums to `n`.
pub fn naive_ddim_partitions(dim: Dim, n: u32) -> Result<Vec<DDimPartition>> {
    let d = dim.get() as usize;
    if d > 3 || n == 0 || n > NAIVE_DDIM_MAX_N {
        return Err(Error::Precondition(format!(
            "naive oracle handles d <= 3 and 1 <= n <= {NAIVE_DDIM_MAX_N}, got d = {d}, n = {n}"
        )));
    }
    let mut cells_in_box: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..d {
        cells_in_box = cells_in_box
            .into_iter()
            .flat_map(|c| {
                (1..=n).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    cells_in_box.sort();

    let mut supports = Vec::new();
    grow_supports(&cells_in_box, 0, &mut Vec::new(), &mut HashSet::new(), n as usize, &mut supports);

    let mut found: BTreeSet<BTreeMap<Vec<u32>, u32>> = BTreeSet::new();
    for support in &supports {
        let mut values = vec![0u32; support.len()];
        fill(support, 0, n, &mut values, &mut found);
    }
    found
        .into_iter()
        .map(|parts| DDimPartition::new(dim, parts))
        .collect()
}

fn predecessors(cell: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    (0..cell.len()).filter(move |&a| cell[a] > 1).map(move |a| {
        let mut p = cell.to_vec();
        p[a] -= 1;
        p
    })
}

// Supports are grown in lexicographic cell order, which is a linear
// extension of the product order, so each one appears once.
fn grow_supports(
    cells: &[Vec<u32>],
    from: usize,
    current: &mut Vec<Vec<u32>>,
    members: &mut HashSet<Vec<u32>>,
    max: usize,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if !current.is_empty() {
        out.push(current.clone());
    }
    if current.len() == max {
        return;
    }
    for i in from..cells.len() {
        let cell = &cells[i];
        let first = current.is_empty() && cell.iter().all(|&x| x == 1);
        if (current.is_empty() && !first)
            || (!current.is_empty() && !predecessors(cell).all(|p| members.contains(&p)))
        {
            continue;
        }
        current.push(cell.clone());
        members.insert(cell.clone());
        grow_supports(cells, i + 1, current, members, max, out);
        members.remove(cell);
        current.pop();
    }
}

fn fill(
    support: &[Vec<u32>],
    at: usize,
    remaining: u32,
    values: &mut Vec<u32>,
    out: &mut BTreeSet<BTreeMap<Vec<u32>, u32>>,
) {
    let left = (support.len() - at) as u32;
    if at == support.len() {
        if remaining == 0 {
            out.insert(support.iter().cloned().zip(values.iter().copied()).collect());
        }
        return;
    }
    if remaining < left {
        return;
    }
    let cap = predecessors(&support[at])
        .map(|p| values[support.iter().position(|c| *c == p).expect("support is downward closed")])
        .min()
        .unwrap_or(u32::MAX)
        .min(remaining - (left - 1));
    for v in 1..=cap {
        values[at] = v;
        fill(support, at + 1, remaining - v, values, out);
    }
}

/// Every word of length `n - 1` accepted by the recursive grammar, found by
/// extending accepted prefixes one letter at a time.
pub fn naive_words(dim: Dim, n: u32) -> Vec<Vec<u8>> {
    let mut level: Vec<Vec<u8>> = vec![vec![]];
    for _ in 1..n {
        level = level
            .into_iter()
            .flat_map(|w| {
                (0..=dim.get()).filter_map(move |letter| {
                    let mut next = w.clone();
                    next.push(letter);
                    validate_by_rules(&next, dim).unwrap_or(false).then_some(next)
                })
            })
            .collect();
    }
    level.sort();
    level
}

/// Largest vertex count the all-pairs oracle accepts.
pub const NAIVE_EDGES_MAX_VERTICES: usize = 3000;

/// Pairs of words at Hamming distance exactly one, by comparing all pairs.
pub fn naive_edges(dim: Dim, n: u32) -> Result<BTreeSet<(Vec<u8>, Vec<u8>)>> {
    let words = naive_words(dim, n);
    if words.len() > NAIVE_EDGES_MAX_VERTICES {
        return Err(Error::Precondition(format!(
            "{} words exceed the all-pairs limit of {NAIVE_EDGES_MAX_VERTICES}",
            words.len()
        )));
    }
    let mut edges = BTreeSet::new();
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            if a.iter().zip(b).filter(|(x, y)| x != y).count() == 1 {
                edges.insert((a.clone(), b.clone()));
            }
        }
    }
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: u32) -> Dim {
        Dim::new(n).unwrap()
    }

    #[test]
    fn ordinary_counts() {
        assert_eq!(naive_partitions(1), vec![vec![1]]);
        assert_eq!(naive_partitions(4).len(), 5);
        assert_eq!(naive_partitions(6).len(), 11);
        assert_eq!(naive_partitions(4)[0], vec![1, 1, 1, 1]);
    }

    #[test]
    fn plane_and_solid_counts() {
        assert_eq!(naive_ddim_partitions(d(2), 1).unwrap().len(), 1);
        assert_eq!(naive_ddim_partitions(d(2), 5).unwrap().len(), 24);
        assert_eq!(naive_ddim_partitions(d(3), 6).unwrap().len(), 140);
        assert_eq!(naive_ddim_partitions(d(1), 6).unwrap().len(), 11);
        assert!(naive_ddim_partitions(d(4), 3).is_err());
    }

    #[test]
    fn edge_oracle_examples() {
        assert_eq!(naive_edges(d(1), 4).unwrap().len(), 5);
        assert_eq!(naive_edges(d(1), 2).unwrap().len(), 1);
        assert_eq!(naive_edges(d(2), 3).unwrap().len(), 8);
    }
}
