//! Undirected simple graphs and the metrics computed on them.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

/// A graph metric: a finite value, infinity, or undefined (empty graph).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    Undefined,
    Finite(usize),
    Infinite,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Undefined => f.write_str("undefined"),
            Self::Finite(n) => write!(f, "{n}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

/// Finite values serialize as numbers, infinity as `"inf"`, undefined as
/// `null`.
impl Serialize for Metric {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Self::Undefined => serializer.serialize_none(),
            Self::Finite(n) => serializer.serialize_u64(*n as u64),
            Self::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    matrix: Vec<bool>,
    neighbours: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph on `0..n` from an adjacency predicate evaluated on
    /// unordered pairs `i < j`.
    pub fn from_predicate(n: usize, adjacent: impl Fn(usize, usize) -> bool + Sync) -> Self {
        let upper: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| (i + 1..n).filter(|&j| adjacent(i, j)).collect())
            .collect();
        let mut g = Self::empty(n);
        for (i, row) in upper.into_iter().enumerate() {
            for j in row {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            matrix: vec![false; n * n],
            neighbours: vec![Vec::new(); n],
        }
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "simple graphs have no loops");
        if self.matrix[a * self.n + b] {
            return;
        }
        self.matrix[a * self.n + b] = true;
        self.matrix[b * self.n + a] = true;
        self.neighbours[a].push(b);
        self.neighbours[b].push(a);
        self.neighbours[a].sort_unstable();
        self.neighbours[b].sort_unstable();
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.neighbours.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.matrix[a * self.n + b]
    }

    pub fn neighbours(&self, a: usize) -> &[usize] {
        &self.neighbours[a]
    }

    pub fn degree(&self, a: usize) -> usize {
        self.neighbours[a].len()
    }

    /// Edges as pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.neighbours[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect()
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.neighbours[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Largest distance over the given sources and targets (all vertices
    /// when `None`).
    pub fn eccentricity_max(&self, among: Option<&[usize]>) -> Metric {
        let all: Vec<usize>;
        let vs = match among {
            Some(v) => v,
            None => {
                all = (0..self.n).collect();
                &all
            }
        };
        if vs.is_empty() {
            return Metric::Undefined;
        }
        let per_source: Vec<Option<usize>> = vs
            .par_iter()
            .map(|&s| {
                let dist = self.distances_from(s);
                vs.iter().try_fold(0, |acc, &t| dist[t].map(|d| acc.max(d)))
            })
            .collect();
        per_source
            .into_iter()
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
            .map_or(Metric::Infinite, Metric::Finite)
    }

    /// Longest shortest path: undefined on the empty graph, 0 on a single
    /// vertex, infinite when disconnected.
    pub fn diameter(&self) -> Metric {
        self.eccentricity_max(None)
    }

    /// Length of a shortest cycle, via one BFS per root. Undefined on the
    /// empty graph, infinite for forests.
    pub fn girth(&self) -> Metric {
        if self.n == 0 {
            return Metric::Undefined;
        }
        let best = (0..self.n)
            .into_par_iter()
            .filter_map(|root| self.shortest_cycle_through_bfs(root))
            .min();
        best.map_or(Metric::Infinite, Metric::Finite)
    }

    fn shortest_cycle_through_bfs(&self, root: usize) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut best: Option<usize> = None;
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for &w in &self.neighbours[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        best
    }

    /// A proper 2-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let c = colour[u].unwrap();
                for &w in &self.neighbours[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// `K_{1,m}` for some `m ≥ 1`: one centre adjacent to every other
    /// vertex and no further edges.
    pub fn is_star(&self) -> bool {
        self.n >= 2
            && self.edge_count() == self.n - 1
            && (0..self.n).any(|v| self.degree(v) == self.n - 1)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> SimpleGraph {
        SimpleGraph::from_predicate(n, |_, _| true)
    }

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(complete(4).diameter(), Metric::Finite(1));
        assert_eq!(SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).diameter(), Metric::Finite(2));
        assert_eq!(SimpleGraph::empty(2).diameter(), Metric::Infinite);
        assert_eq!(SimpleGraph::empty(1).diameter(), Metric::Finite(0));
        assert_eq!(SimpleGraph::empty(0).diameter(), Metric::Undefined);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(complete(4).girth(), Metric::Finite(3));
        assert_eq!(cycle(4).girth(), Metric::Finite(4));
        assert_eq!(cycle(7).girth(), Metric::Finite(7));
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(star.girth(), Metric::Infinite);
        assert_eq!(SimpleGraph::empty(0).girth(), Metric::Undefined);
    }

    #[test]
    fn star_and_bipartite() {
        let k12 = SimpleGraph::from_edges(3, &[(0, 1), (0, 2)]);
        assert!(k12.is_star() && k12.is_bipartite());
        let k22 = SimpleGraph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(!k22.is_star() && k22.is_bipartite());
        assert!(!complete(3).is_bipartite());
        assert!(complete(2).is_star());
        let p4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!p4.is_star() && p4.is_bipartite());
    }

    #[test]
    fn metric_json() {
        let v = serde_json::to_string(&[Metric::Finite(2), Metric::Infinite, Metric::Undefined]).unwrap();
        assert_eq!(v, r#"[2,"inf",null]"#);
    }
}
