use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Graph;

/// Options for the Hamiltonian-cycle search.
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub budget: Duration,
    /// 0 keeps canonical tie-breaking; any other value shuffles it.
    pub seed: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: Duration::from_secs(10), seed: 0 }
    }
}

/// Why a graph has no Hamiltonian cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NonHamiltonian {
    TooFewVertices { vertex_count: usize },
    /// Bipartite with colour classes of different sizes.
    BipartiteImbalance { larger: usize, smaller: usize },
    Disconnected,
    LowDegree { vertex: u32, degree: usize },
    CutVertex { vertex: u32 },
    /// Backtracking covered the whole search space.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hamiltonicity {
    /// A verified cycle, as a vertex order.
    Yes(Vec<u32>),
    No(NonHamiltonian),
    Unknown { elapsed: Duration },
}

impl Hamiltonicity {
    pub fn cycle(&self) -> Option<&[u32]> {
        match self {
            Hamiltonicity::Yes(c) => Some(c),
            _ => None,
        }
    }
}

/// Whether `order` visits every vertex once and closes into a cycle.
pub fn is_hamiltonian_cycle(graph: &Graph, order: &[u32]) -> bool {
    let n = graph.vertex_count();
    if order.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v as usize >= n || std::mem::replace(&mut seen[v as usize], true) {
            return false;
        }
    }
    (0..n).all(|i| graph.has_edge(order[i], order[(i + 1) % n]))
}

/// Decides Hamiltonicity: cheap disproofs first (bipartite imbalance,
/// connectivity, degree, cut vertices), then backtracking that always
/// extends the path towards the neighbour with the fewest free neighbours.
pub fn hamiltonian_cycle(graph: &Graph, options: &SearchOptions) -> Hamiltonicity {
    let n = graph.vertex_count();
    if n < 3 {
        return Hamiltonicity::No(NonHamiltonian::TooFewVertices { vertex_count: n });
    }
    if let Some(colors) = graph.bipartition() {
        let ones = colors.iter().filter(|&&c| c == 1).count();
        let (larger, smaller) = (ones.max(n - ones), ones.min(n - ones));
        if larger != smaller {
            return Hamiltonicity::No(NonHamiltonian::BipartiteImbalance { larger, smaller });
        }
    }
    if !graph.is_connected() {
        return Hamiltonicity::No(NonHamiltonian::Disconnected);
    }
    if let Some(vertex) = (0..n as u32).find(|&v| graph.degree(v) < 2) {
        let degree = graph.degree(vertex);
        return Hamiltonicity::No(NonHamiltonian::LowDegree { vertex, degree });
    }
    if let Some(&vertex) = graph.articulation_points().first() {
        return Hamiltonicity::No(NonHamiltonian::CutVertex { vertex });
    }
    Search::new(graph, options).run()
}

struct Search<'a> {
    graph: &'a Graph,
    rank: Vec<u32>,
    on_path: Vec<bool>,
    path: Vec<u32>,
    started: Instant,
    budget: Duration,
}

impl<'a> Search<'a> {
    fn new(graph: &'a Graph, options: &SearchOptions) -> Self {
        let n = graph.vertex_count();
        let mut rank: Vec<u32> = (0..n as u32).collect();
        if options.seed != 0 {
            rank.shuffle(&mut ChaCha8Rng::seed_from_u64(options.seed));
        }
        Search {
            graph,
            rank,
            on_path: vec![false; n],
            path: Vec::with_capacity(n),
            started: Instant::now(),
            budget: options.budget,
        }
    }

    fn free_degree(&self, v: u32) -> usize {
        self.graph.neighbors(v).iter().filter(|&&w| !self.on_path[w as usize]).count()
    }

    fn candidates(&self, v: u32) -> Vec<u32> {
        let mut next: Vec<u32> = self
            .graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !self.on_path[w as usize])
            .collect();
        next.sort_by_key(|&w| (self.free_degree(w), self.rank[w as usize]));
        next
    }

    /// After the path grew to `end`, every unvisited vertex next to the old
    /// end still needs two usable neighbours, and the start must keep one.
    fn feasible(&self, previous_end: u32, end: u32) -> bool {
        let start = self.path[0];
        let usable = |x: u32| {
            self.graph
                .neighbors(x)
                .iter()
                .filter(|&&y| !self.on_path[y as usize] || y == start || y == end)
                .count()
        };
        self.free_degree(start) > 0
            && self
                .graph
                .neighbors(previous_end)
                .iter()
                .filter(|&&x| !self.on_path[x as usize])
                .all(|&x| usable(x) >= 2)
    }

    fn visit(&mut self, v: u32) {
        self.on_path[v as usize] = true;
        self.path.push(v);
    }

    fn leave(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.on_path[v as usize] = false;
    }

    fn run(mut self) -> Hamiltonicity {
        let n = self.graph.vertex_count();
        let start = (0..n as u32)
            .min_by_key(|&v| (self.graph.degree(v), self.rank[v as usize]))
            .expect("non-empty graph");
        self.visit(start);
        let mut frames = vec![(self.candidates(start), 0usize)];
        let mut steps = 0u64;

        while let Some((candidates, next)) = frames.last_mut() {
            steps += 1;
            if steps.is_multiple_of(4096) && self.started.elapsed() > self.budget {
                return Hamiltonicity::Unknown { elapsed: self.started.elapsed() };
            }
            let Some(&w) = candidates.get(*next) else {
                frames.pop();
                self.leave();
                continue;
            };
            *next += 1;
            let previous_end = *self.path.last().expect("non-empty path");
            self.visit(w);
            if self.path.len() == n {
                if self.graph.has_edge(w, start) {
                    debug_assert!(is_hamiltonian_cycle(self.graph, &self.path));
                    return Hamiltonicity::Yes(self.path);
                }
                self.leave();
                continue;
            }
            if !self.feasible(previous_end, w) {
                self.leave();
                continue;
            }
            let candidates = self.candidates(w);
            frames.push((candidates, 0));
        }
        Hamiltonicity::No(NonHamiltonian::Exhausted)
    }
}
