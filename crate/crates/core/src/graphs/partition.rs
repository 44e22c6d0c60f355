use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::hamilton::{hamiltonian_cycle, Hamiltonicity, SearchOptions};
use super::Graph;
use crate::error::Result;
use crate::words::{self, enumerate_with_budget, render, Budget, Dim, PartitionWord, WordSet};

/// Which vertex pairs are joined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Adjacency {
    /// Words differing in exactly one position.
    Flip,
    /// Graph distance `1..=k` in the flip graph.
    Power(u32),
    /// Hamming distance `1..=k`, regardless of graph distance.
    HammingBall(u32),
}

/// The flip graph on the words of `(d, n)`, optionally without `0^(n-1)`.
///
/// Vertex `i` is the `i`-th word in canonical order among the included
/// words.
#[derive(Debug, Clone)]
pub struct PartitionGraph {
    words: WordSet,
    include_zero: bool,
    adjacency: Adjacency,
    graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub biconnected: bool,
    pub articulation_points: Vec<String>,
    pub diameter: Option<u32>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub global_clustering: f64,
}

/// The valid words one substitution away from `word`, in canonical order.
pub fn neighbors(word: &PartitionWord) -> Vec<PartitionWord> {
    let dim = word.dim();
    let mut out = Vec::new();
    let mut candidate = word.symbols().to_vec();
    for position in 0..candidate.len() {
        let original = candidate[position];
        for letter in (0..=dim.get()).filter(|&l| l != original) {
            candidate[position] = letter;
            if words::is_valid_unchecked(&candidate, dim) {
                out.push(PartitionWord::from_trusted(candidate.clone(), dim));
            }
        }
        candidate[position] = original;
    }
    out.sort();
    out
}

pub fn build(dim: Dim, n: u32, include_zero: bool) -> Result<PartitionGraph> {
    build_with_budget(dim, n, include_zero, &Budget::unlimited())
}

/// Builds the flip graph by substituting every letter at every position and
/// probing a membership index over the word set.
pub fn build_with_budget(dim: Dim, n: u32, include_zero: bool, budget: &Budget) -> Result<PartitionGraph> {
    let words = enumerate_with_budget(dim, n, budget)?;
    Ok(PartitionGraph::from_words(words, include_zero))
}

impl PartitionGraph {
    /// Flip graph over an already enumerated word set.
    pub fn from_words(words: WordSet, include_zero: bool) -> PartitionGraph {
        let dim = words.dim();
        let offset = usize::from(!include_zero);
        let index: HashMap<&[u8], u32> = words
            .iter()
            .enumerate()
            .skip(offset)
            .map(|(i, w)| (w, (i - offset) as u32))
            .collect();

        let adjacency: Vec<Vec<u32>> = (offset..words.len())
            .into_par_iter()
            .map(|i| {
                let mut candidate = words.get(i).to_vec();
                let mut found = Vec::new();
                for position in 0..candidate.len() {
                    let original = candidate[position];
                    for letter in 0..=dim.get() {
                        if letter == original {
                            continue;
                        }
                        candidate[position] = letter;
                        if let Some(&j) = index.get(candidate.as_slice()) {
                            found.push(j);
                        }
                    }
                    candidate[position] = original;
                }
                found
            })
            .collect();
        let graph = Graph::from_adjacency(adjacency);
        drop(index);

        PartitionGraph { words, include_zero, adjacency: Adjacency::Flip, graph }
    }

    pub fn dim(&self) -> Dim {
        self.words.dim()
    }

    pub fn n(&self) -> u32 {
        self.words.n()
    }

    pub fn include_zero(&self) -> bool {
        self.include_zero
    }

    pub fn adjacency(&self) -> Adjacency {
        self.adjacency
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The full word set, including `0^(n-1)` even when it is not a vertex.
    pub fn word_set(&self) -> &WordSet {
        &self.words
    }

    fn offset(&self) -> usize {
        usize::from(!self.include_zero)
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn word(&self, vertex: u32) -> &[u8] {
        self.words.get(vertex as usize + self.offset())
    }

    pub fn label(&self, vertex: u32) -> String {
        render(self.word(vertex))
    }

    pub fn vertex_of(&self, symbols: &[u8]) -> Option<u32> {
        let i = self.words.position(symbols)?;
        i.checked_sub(self.offset()).map(|v| v as u32)
    }

    pub fn degree_sequence(&self) -> BTreeMap<u32, usize> {
        self.graph.degree_sequence()
    }

    /// Colour of each vertex: symbol sum modulo `d + 1`. A single
    /// substitution changes the sum by `1..=d`, so neighbours always differ.
    pub fn proper_coloring(&self) -> Vec<u8> {
        let modulus = self.dim().alphabet() as u32;
        (0..self.vertex_count() as u32)
            .map(|v| (self.word(v).iter().map(|&s| s as u32).sum::<u32>() % modulus) as u8)
            .collect()
    }

    pub fn is_proper_coloring(&self, colors: &[u8]) -> bool {
        colors.len() == self.vertex_count()
            && self.graph.edges().all(|(u, v)| colors[u as usize] != colors[v as usize])
    }

    pub fn structure_report(&self) -> StructureReport {
        let g = &self.graph;
        let articulation_points: Vec<String> =
            g.articulation_points().into_iter().map(|v| self.label(v)).collect();
        let connected = g.is_connected();
        StructureReport {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            connected,
            bipartite: g.bipartition().is_some(),
            biconnected: connected && g.vertex_count() >= 3 && articulation_points.is_empty(),
            articulation_points,
            diameter: g.diameter(),
            min_degree: (0..g.vertex_count() as u32).map(|v| g.degree(v)).min().unwrap_or(0),
            max_degree: (0..g.vertex_count() as u32).map(|v| g.degree(v)).max().unwrap_or(0),
            global_clustering: g.global_clustering(),
        }
    }

    pub fn is_hamiltonian(&self, options: &SearchOptions) -> Hamiltonicity {
        hamiltonian_cycle(&self.graph, options)
    }

    /// Same vertices, joined when their distance in this graph is `1..=k`.
    pub fn power(&self, k: u32) -> PartitionGraph {
        PartitionGraph {
            words: self.words.clone(),
            include_zero: self.include_zero,
            adjacency: Adjacency::Power(k),
            graph: self.graph.power(k),
        }
    }

    /// Same vertices, joined when their words are at Hamming distance
    /// `1..=k`. Kept for comparison with [`Self::power`]; two words at
    /// Hamming distance two need not be two flips apart.
    pub fn hamming_power(&self, k: u32) -> PartitionGraph {
        let n = self.vertex_count() as u32;
        let adjacency = (0..n)
            .into_par_iter()
            .map(|u| {
                (0..n)
                    .filter(|&v| {
                        let dist = hamming(self.word(u), self.word(v));
                        (1..=k as usize).contains(&dist)
                    })
                    .collect()
            })
            .collect();
        PartitionGraph {
            words: self.words.clone(),
            include_zero: self.include_zero,
            adjacency: Adjacency::HammingBall(k),
            graph: Graph::from_adjacency(adjacency),
        }
    }
}

pub(crate) fn hamming(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}
