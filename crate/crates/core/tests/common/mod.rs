//! Brute-force reference computations shared by the integration tests.
//! Nothing here calls the library's order, graph or congruence code; only
//! the Cayley table is read.

#![allow(dead_code)]

use zdg::graph::Metric;
use zdg::FiniteSemigroup;

/// Absorbing element found by scanning the table.
pub fn absorbing(s: &FiniteSemigroup) -> Option<usize> {
    let n = s.order();
    (0..n).find(|&z| (0..n).all(|x| s.mul(z, x) == z && s.mul(x, z) == z))
}

pub fn idempotents(s: &FiniteSemigroup) -> Vec<usize> {
    (0..s.order()).filter(|&x| s.mul(x, x) == x).collect()
}

/// `Ea` as a membership vector.
pub fn left_translate(s: &FiniteSemigroup, a: usize) -> Vec<bool> {
    let mut v = vec![false; s.order()];
    for e in idempotents(s) {
        v[s.mul(e, a)] = true;
    }
    v
}

/// `a ≤ b` iff `a = eb` for some idempotent `e`.
pub fn leq(s: &FiniteSemigroup, a: usize, b: usize) -> bool {
    idempotents(s).into_iter().any(|e| s.mul(e, b) == a)
}

/// Zero-divisor graph straight from the table: vertices are nonzero `a`
/// with some nonzero `b ≠ a` such that `Ea ∩ Eb = {0}`.
pub struct TableGamma {
    pub vertices: Vec<usize>,
    pub adj: Vec<Vec<bool>>,
}

impl TableGamma {
    pub fn edge_count(&self) -> usize {
        let n = self.vertices.len();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.adj[i][j]).count()).sum()
    }
}

pub fn gamma_from_table(s: &FiniteSemigroup) -> TableGamma {
    let z = absorbing(s).expect("semigroup with zero");
    let n = s.order();
    let tr: Vec<Vec<bool>> = (0..n).map(|a| left_translate(s, a)).collect();
    let trivial = |a: usize, b: usize| (0..n).all(|c| c == z || !(tr[a][c] && tr[b][c]));
    let vertices: Vec<usize> = (0..n)
        .filter(|&a| a != z && (0..n).any(|b| b != z && b != a && trivial(a, b)))
        .collect();
    let adj = vertices
        .iter()
        .map(|&a| vertices.iter().map(|&b| a != b && trivial(a, b)).collect())
        .collect();
    TableGamma { vertices, adj }
}

/// Diameter by Floyd–Warshall.
pub fn diameter(adj: &[Vec<bool>]) -> Metric {
    let n = adj.len();
    if n == 0 {
        return Metric::Undefined;
    }
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if adj[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    let max = d.iter().flatten().copied().max().unwrap();
    if max >= INF {
        Metric::Infinite
    } else {
        Metric::Finite(max)
    }
}

/// Girth as the minimum over edges `uv` of `1 + dist(u, v)` with `uv`
/// removed.
pub fn girth(adj: &[Vec<bool>]) -> Metric {
    let n = adj.len();
    if n == 0 {
        return Metric::Undefined;
    }
    let mut best: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            if !adj[u][v] {
                continue;
            }
            let mut dist = vec![usize::MAX; n];
            dist[u] = 0;
            let mut queue = std::collections::VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for y in 0..n {
                    if adj[x][y] && !((x == u && y == v) || (x == v && y == u)) && dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if dist[v] != usize::MAX {
                let c = dist[v] + 1;
                best = Some(best.map_or(c, |b| b.min(c)));
            }
        }
    }
    best.map_or(Metric::Infinite, Metric::Finite)
}

/// `a σ b` iff `ea = fb` for idempotents `e, f`, as class labels in order
/// of first appearance.
pub fn sigma_classes(s: &FiniteSemigroup) -> Vec<usize> {
    let n = s.order();
    let es = idempotents(s);
    let related = |a: usize, b: usize| es.iter().any(|&e| es.iter().any(|&f| s.mul(e, a) == s.mul(f, b)));
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for a in 0..n {
        if label[a] != usize::MAX {
            continue;
        }
        for b in a..n {
            if label[b] == usize::MAX && related(a, b) {
                label[b] = next;
            }
        }
        next += 1;
    }
    label
}

/// Adjacency is exactly "different class".
pub fn is_complete_multipartite(adj: &[Vec<bool>], class: &[usize]) -> bool {
    let n = adj.len();
    (0..n).all(|i| (0..n).all(|j| i == j || adj[i][j] == (class[i] != class[j])))
}
