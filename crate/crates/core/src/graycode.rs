//! Cyclic listings of partition words where consecutive words are at most
//! `k` flips apart: `k = 2` from a Hamiltonian cycle in the square of the
//! 2-connected graph without `0^(n-1)`, `k = 3` from a walk of a spanning
//! tree that realises a Hamiltonian cycle of its cube.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graphs::{build, Adjacency, Hamiltonicity, PartitionGraph, SearchOptions};
use crate::words::{parse_digits, Dim, PartitionWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayCode {
    dim: Dim,
    n: u32,
    k: u32,
    cyclic: bool,
    sequence: Vec<PartitionWord>,
}

impl GrayCode {
    pub fn new(dim: Dim, n: u32, k: u32, cyclic: bool, sequence: Vec<PartitionWord>) -> Self {
        GrayCode { dim, n, k, cyclic, sequence }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Maximum number of flips between consecutive words.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn sequence(&self) -> &[PartitionWord] {
        &self.sequence
    }

    /// The 2-Gray code lives on the graph without `0^(n-1)`.
    pub fn includes_zero(&self) -> bool {
        self.k != 2
    }

    /// Header `d n k cyclic`, then one word per line.
    pub fn write<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "{} {} {} {}", self.dim, self.n, self.k, self.cyclic)?;
        for word in &self.sequence {
            writeln!(out, "{word}")?;
        }
        out.flush()
    }

    pub fn read<R: BufRead>(input: R) -> Result<GrayCode> {
        let mut lines = input.lines();
        let io_err = |line: usize, e: std::io::Error| Error::Parse { line, msg: e.to_string() };
        let header = lines
            .next()
            .ok_or(Error::Parse { line: 1, msg: "missing header".into() })?
            .map_err(|e| io_err(1, e))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let bad_header = || Error::Parse { line: 1, msg: format!("bad header `{header}`") };
        let [d, n, k, cyclic] = fields[..] else {
            return Err(bad_header());
        };
        let dim = Dim::new(d.parse().map_err(|_| bad_header())?)?;
        let n: u32 = n.parse().map_err(|_| bad_header())?;
        let k: u32 = k.parse().map_err(|_| bad_header())?;
        let cyclic: bool = cyclic.parse().map_err(|_| bad_header())?;

        let mut sequence = Vec::new();
        for (i, line) in lines.enumerate() {
            let line = line.map_err(|e| io_err(i + 2, e))?;
            let symbols = parse_digits(&line).map_err(|_| Error::Parse {
                line: i + 2,
                msg: format!("`{line}` is not a digit string"),
            })?;
            if symbols.len() + 1 != n as usize {
                return Err(Error::Parse { line: i + 2, msg: format!("`{line}` has the wrong length") });
            }
            sequence.push(PartitionWord::new(symbols, dim)?);
        }
        Ok(GrayCode { dim, n, k, cyclic, sequence })
    }
}

/// Order of a spanning tree whose consecutive vertices (cyclically) are at
/// most three tree edges apart: vertices at even depth are listed on entry,
/// vertices at odd depth on exit.
pub fn cube_walk(children: &[Vec<u32>], root: u32) -> Vec<u32> {
    let mut order = Vec::with_capacity(children.len());
    let mut stack: Vec<(u32, usize, bool)> = vec![(root, 0, true)];
    order.push(root);
    while let Some(top) = stack.last_mut() {
        let (v, next, even) = *top;
        if let Some(&child) = children[v as usize].get(next) {
            top.1 += 1;
            if !even {
                order.push(child);
            }
            stack.push((child, 0, !even));
        } else {
            stack.pop();
            if !even {
                order.push(v);
            }
        }
    }
    order
}

/// 2-Gray code on the ordinary partitions of `n` other than `1 + ... + 1`.
pub fn gray2(n: u32, options: &SearchOptions) -> Result<GrayCode> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "the 2-Gray code needs n >= 4, got {n}"
        )));
    }
    let dim = Dim::new(1)?;
    let graph = build(dim, n, false)?;
    let square = graph.power(2);
    match square.is_hamiltonian(options) {
        Hamiltonicity::Yes(mut cycle) => {
            let start = cycle.iter().position(|&v| v == 0).expect("vertex 0 on the cycle");
            cycle.rotate_left(start);
            let sequence = cycle.iter().map(|&v| graph.word_set().word(v as usize + 1)).collect();
            Ok(GrayCode::new(dim, n, 2, true, sequence))
        }
        Hamiltonicity::Unknown { elapsed } => {
            Err(Error::SearchExhausted { elapsed_ms: elapsed.as_millis() })
        }
        Hamiltonicity::No(witness) => Err(Error::Contract(format!(
            "square of the flip graph for n = {n} reported non-Hamiltonian: {witness:?}"
        ))),
    }
}

/// 3-Gray code on all d-dimensional partitions of `n`, built from the
/// breadth-first tree rooted at `0^(n-1)`.
pub fn gray3(dim: Dim, n: u32) -> Result<GrayCode> {
    if n < 2 {
        return Err(Error::Precondition(format!("the 3-Gray code needs n >= 2, got {n}")));
    }
    let graph = build(dim, n, true)?;
    let (children, _) = graph.graph().bfs_tree(0);
    let order = cube_walk(&children, 0);
    if order.len() != graph.vertex_count() {
        return Err(Error::Contract("flip graph is disconnected".into()));
    }
    let sequence = order.iter().map(|&v| graph.word_set().word(v as usize)).collect();
    Ok(GrayCode::new(dim, n, 3, true, sequence))
}

/// Checks that `code` lists every vertex of `graph` once and that each
/// consecutive pair (and last-to-first when cyclic) is at most `k` apart.
pub fn verify(code: &GrayCode, graph: &PartitionGraph) -> Result<bool> {
    if code.dim != graph.dim() || code.n != graph.n() {
        return Err(Error::Contract(format!(
            "code is for (d, n) = ({}, {}) but the graph is ({}, {})",
            code.dim,
            code.n,
            graph.dim(),
            graph.n()
        )));
    }
    if graph.adjacency() != Adjacency::Flip {
        return Err(Error::Contract("verification needs the flip graph itself".into()));
    }
    if code.includes_zero() != graph.include_zero() {
        return Err(Error::Contract(format!(
            "a {}-Gray code {} the zero word but the graph does not agree",
            code.k,
            if code.includes_zero() { "includes" } else { "excludes" }
        )));
    }

    let count = graph.vertex_count();
    if code.sequence.len() != count {
        return Ok(false);
    }
    let mut seen = vec![false; count];
    let mut vertices = Vec::with_capacity(count);
    for word in &code.sequence {
        match graph.vertex_of(word.symbols()) {
            Some(v) if !seen[v as usize] => {
                seen[v as usize] = true;
                vertices.push(v);
            }
            _ => return Ok(false),
        }
    }
    let pairs = if code.cyclic { count } else { count.saturating_sub(1) };
    Ok((0..pairs).all(|i| {
        let (u, v) = (vertices[i], vertices[(i + 1) % count]);
        count == 1 || graph.graph().bounded_distance(u, v, code.k).is_some_and(|d| d >= 1)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: u32) -> Dim {
        Dim::new(n).unwrap()
    }

    fn words(code: &GrayCode) -> Vec<String> {
        code.sequence().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn gray2_small_and_contract() {
        let code = gray2(4, &SearchOptions::default()).unwrap();
        assert_eq!(code.sequence().len(), 4);
        assert!(verify(&code, &build(d(1), 4, false).unwrap()).unwrap());
        assert!(matches!(gray2(3, &SearchOptions::default()), Err(Error::Precondition(_))));
    }

    #[test]
    fn gray3_trivial_cycle() {
        let code = gray3(d(1), 2).unwrap();
        assert_eq!(words(&code), ["0", "1"]);
        assert!(verify(&code, &build(d(1), 2, true).unwrap()).unwrap());
        assert!(gray3(d(1), 1).is_err());
    }

    #[test]
    fn cube_walk_of_a_path() {
        // 0 - 1 - 2 - 3 - 4
        let children = vec![vec![1], vec![2], vec![3], vec![4], vec![]];
        assert_eq!(cube_walk(&children, 0), [0, 2, 4, 3, 1]);
    }

    #[test]
    fn verify_rejects_bad_sequences() {
        let graph = build(d(2), 5, true).unwrap();
        let code = gray3(d(2), 5).unwrap();
        assert!(verify(&code, &graph).unwrap());

        let mut repeated = code.sequence().to_vec();
        repeated[1] = repeated[0].clone();
        assert!(!verify(&GrayCode::new(d(2), 5, 3, true, repeated), &graph).unwrap());

        // canonical order puts 0000 next to 2222, four flips apart
        let canonical: Vec<PartitionWord> = (0..24).map(|i| graph.word_set().word(i)).collect();
        assert!(!verify(&GrayCode::new(d(2), 5, 3, true, canonical), &graph).unwrap());

        let other = build(d(2), 4, true).unwrap();
        assert!(verify(&code, &other).is_err());
        assert!(verify(&code, &build(d(2), 5, false).unwrap()).is_err());
    }

    #[test]
    fn file_round_trip() {
        let code = gray2(6, &SearchOptions::default()).unwrap();
        let mut buf = Vec::new();
        code.write(&mut buf).unwrap();
        assert!(String::from_utf8_lossy(&buf).starts_with("1 6 2 true\n"));
        assert_eq!(GrayCode::read(&buf[..]).unwrap(), code);
        assert!(GrayCode::read(&b"1 6 2\n"[..]).is_err());
        assert!(GrayCode::read(&b"1 4 2 true\n011\n"[..]).is_err());
    }
}
