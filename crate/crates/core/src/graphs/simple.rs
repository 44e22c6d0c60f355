use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

const UNSEEN: u32 = u32::MAX;

/// Simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds from adjacency lists, which must be symmetric and loop-free.
    pub fn from_adjacency(mut adjacency: Vec<Vec<u32>>) -> Self {
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            debug_assert!(!list.contains(&(v as u32)), "self loop at {v}");
        }
        let graph = Graph { adjacency };
        debug_assert!(graph.is_symmetric());
        graph
    }

    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u != v {
                adjacency[u as usize].push(v);
                adjacency[v as usize].push(u);
            }
        }
        Graph::from_adjacency(adjacency)
    }

    fn is_symmetric(&self) -> bool {
        self.adjacency
            .iter()
            .enumerate()
            .all(|(u, list)| list.iter().all(|&v| self.has_edge(v, u as u32)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter().filter(move |&&v| v > u).map(move |&v| (u, v))
        })
    }

    /// Degree -> number of vertices with that degree.
    pub fn degree_sequence(&self) -> BTreeMap<u32, usize> {
        let mut counts = BTreeMap::new();
        for list in &self.adjacency {
            *counts.entry(list.len() as u32).or_insert(0) += 1;
        }
        counts
    }

    /// Hop distances from `source`; `u32::MAX` marks unreachable vertices.
    pub fn distances_from(&self, source: u32) -> Vec<u32> {
        let mut dist = vec![UNSEEN; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source as usize] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u as usize] + 1;
            for &v in self.neighbors(u) {
                if dist[v as usize] == UNSEEN {
                    dist[v as usize] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Distance from `u` to `v` if it is at most `limit`.
    pub fn bounded_distance(&self, u: u32, v: u32, limit: u32) -> Option<u32> {
        if u == v {
            return Some(0);
        }
        let mut frontier = vec![u];
        let mut seen = std::collections::HashSet::from([u]);
        for depth in 1..=limit {
            let mut next = Vec::new();
            for &x in &frontier {
                for &y in self.neighbors(x) {
                    if y == v {
                        return Some(depth);
                    }
                    if seen.insert(y) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        None
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.distances_from(0).iter().all(|&d| d != UNSEEN)
    }

    /// A proper 2-colouring, or `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root as u32);
            while let Some(u) = queue.pop_front() {
                let c = color[u as usize];
                for &v in self.neighbors(u) {
                    match color[v as usize] {
                        u8::MAX => {
                            color[v as usize] = 1 - c;
                            queue.push_back(v);
                        }
                        cv if cv == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color)
    }

    /// Cut vertices, ascending, via an iterative low-link search.
    pub fn articulation_points(&self) -> Vec<u32> {
        let n = self.vertex_count();
        let mut order = vec![UNSEEN; n];
        let mut low = vec![0u32; n];
        let mut parent = vec![UNSEEN; n];
        let mut cut = vec![false; n];
        let mut clock = 0u32;
        let mut stack: Vec<(u32, usize)> = Vec::new();

        for root in 0..n as u32 {
            if order[root as usize] != UNSEEN {
                continue;
            }
            order[root as usize] = clock;
            low[root as usize] = clock;
            clock += 1;
            let mut root_children = 0;
            stack.push((root, 0));
            while let Some(top) = stack.last_mut() {
                let (v, next) = *top;
                if let Some(&w) = self.adjacency[v as usize].get(next) {
                    top.1 += 1;
                    if order[w as usize] == UNSEEN {
                        parent[w as usize] = v;
                        order[w as usize] = clock;
                        low[w as usize] = clock;
                        clock += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, 0));
                    } else if w != parent[v as usize] {
                        low[v as usize] = low[v as usize].min(order[w as usize]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _)) = stack.last() {
                        low[p as usize] = low[p as usize].min(low[v as usize]);
                        if p != root && low[v as usize] >= order[p as usize] {
                            cut[p as usize] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                cut[root as usize] = true;
            }
        }
        (0..n as u32).filter(|&v| cut[v as usize]).collect()
    }

    /// Connected, at least three vertices, and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.vertex_count() >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }

    /// Exact diameter by breadth-first search from every vertex; `None` when
    /// the graph is disconnected or empty.
    pub fn diameter(&self) -> Option<u32> {
        if self.vertex_count() == 0 {
            return None;
        }
        (0..self.vertex_count() as u32)
            .into_par_iter()
            .map(|s| self.distances_from(s).into_iter().max().unwrap_or(0))
            .try_fold(|| 0, |acc, ecc| (ecc != UNSEEN).then_some(acc.max(ecc)))
            .try_reduce(|| 0, |a, b| Some(a.max(b)))
    }

    pub fn triangle_count(&self) -> u64 {
        self.edges()
            .map(|(u, v)| {
                let (a, b) = (self.neighbors(u), self.neighbors(v));
                let (mut i, mut j, mut count) = (0, 0, 0u64);
                while i < a.len() && j < b.len() {
                    match a[i].cmp(&b[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => {
                            if a[i] > v {
                                count += 1;
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                }
                count
            })
            .sum()
    }

    /// Paths of length two (wedges), counted by their centre.
    pub fn wedge_count(&self) -> u64 {
        self.adjacency
            .iter()
            .map(|l| {
                let d = l.len() as u64;
                d * d.saturating_sub(1) / 2
            })
            .sum()
    }

    /// Transitivity `3 * triangles / wedges`, zero without wedges.
    pub fn global_clustering(&self) -> f64 {
        let wedges = self.wedge_count();
        if wedges == 0 {
            0.0
        } else {
            3.0 * self.triangle_count() as f64 / wedges as f64
        }
    }

    /// Joins every pair of vertices at distance `1..=k`.
    pub fn power(&self, k: u32) -> Graph {
        let n = self.vertex_count();
        let adjacency = (0..n as u32)
            .into_par_iter()
            .map(|source| {
                let mut reached = vec![source];
                let mut frontier = vec![source];
                let mut seen = std::collections::HashSet::from([source]);
                for _ in 0..k {
                    let mut next = Vec::new();
                    for &x in &frontier {
                        for &y in self.neighbors(x) {
                            if seen.insert(y) {
                                next.push(y);
                                reached.push(y);
                            }
                        }
                    }
                    frontier = next;
                }
                reached.retain(|&v| v != source);
                reached
            })
            .collect();
        Graph::from_adjacency(adjacency)
    }

    /// Children lists of the breadth-first tree rooted at `root`, each in
    /// ascending order. Unreached vertices have no parent.
    pub fn bfs_tree(&self, root: u32) -> (Vec<Vec<u32>>, Vec<u32>) {
        let n = self.vertex_count();
        let mut children = vec![Vec::new(); n];
        let mut parent = vec![UNSEEN; n];
        let mut queue = VecDeque::from([root]);
        parent[root as usize] = root;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if parent[v as usize] == UNSEEN {
                    parent[v as usize] = u;
                    children[u as usize].push(v);
                    queue.push_back(v);
                }
            }
        }
        (children, parent)
    }
}
