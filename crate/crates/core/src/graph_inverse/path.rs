use super::DirectedGraph;

/// A directed path, possibly empty. An empty path is identified with its
/// base vertex; a nonempty path's base is the source of its first edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GPath {
    len_key: usize,
    base: usize,
    edges: Vec<usize>,
    range: usize,
}

impl GPath {
    pub fn vertex(v: usize) -> Self {
        Self {
            len_key: 0,
            base: v,
            edges: Vec::new(),
            range: v,
        }
    }

    /// Builds a path from an edge list, checking that consecutive edges
    /// compose.
    pub fn from_edges(g: &DirectedGraph, edges: Vec<usize>) -> Option<Self> {
        let first = *edges.first()?;
        let mut at = g.edges[first].source;
        for &e in &edges {
            if g.edges[e].source != at {
                return None;
            }
            at = g.edges[e].range;
        }
        Some(Self {
            len_key: edges.len(),
            base: g.edges[first].source,
            edges,
            range: at,
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn source(&self) -> usize {
        self.base
    }

    pub fn range(&self) -> usize {
        self.range
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// `self · other`; `None` unless `r(self) = s(other)`.
    pub fn concat(&self, other: &Self) -> Option<Self> {
        if self.range != other.base {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Some(Self {
            len_key: edges.len(),
            base: self.base,
            edges,
            range: other.range,
        })
    }

    /// The `t` with `self = prefix · t`, if `prefix` is a prefix of `self`.
    pub fn strip_prefix(&self, prefix: &Self) -> Option<Self> {
        if prefix.base != self.base || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        let rest = self.edges[prefix.len()..].to_vec();
        Some(Self {
            len_key: rest.len(),
            base: prefix.range,
            edges: rest,
            range: self.range,
        })
    }

    /// Edge names concatenated, or the vertex name for an empty path.
    pub fn label(&self, g: &DirectedGraph) -> String {
        if self.edges.is_empty() {
            g.vertices[self.base].clone()
        } else {
            self.edges.iter().map(|&e| g.edges[e].name.as_str()).collect()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathEnumeration {
    /// Sorted by length, then source, then edge sequence.
    pub paths: Vec<GPath>,
    pub max_len: usize,
    /// The list is all of `Path(G)`.
    pub exact: bool,
}

/// All paths with at most `max_len` edges, including one empty path per
/// vertex.
pub fn enumerate_paths(g: &DirectedGraph, max_len: usize) -> PathEnumeration {
    let mut paths: Vec<GPath> = (0..g.vertex_count()).map(GPath::vertex).collect();
    let mut frontier: Vec<GPath> = paths.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for e in g.out_edges(p.range) {
                if p.is_empty() {
                    next.push(GPath::from_edges(g, vec![e]).expect("single edge"));
                } else {
                    let mut edges = p.edges.clone();
                    edges.push(e);
                    next.push(GPath {
                        len_key: edges.len(),
                        base: p.base,
                        edges,
                        range: g.edges[e].range,
                    });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    paths.sort();
    let exact = g.longest_path().is_some_and(|l| l <= max_len);
    PathEnumeration { paths, max_len, exact }
}

/// Number of paths with at most `max_len` edges, without materializing them.
pub fn count_paths(g: &DirectedGraph, max_len: usize) -> usize {
    let n = g.vertex_count();
    let mut ending_at = vec![1usize; n];
    let mut total = n;
    for _ in 0..max_len {
        let mut next = vec![0usize; n];
        for e in &g.edges {
            next[e.range] = next[e.range].saturating_add(ending_at[e.source]);
        }
        total = total.saturating_add(next.iter().fold(0usize, |a, &b| a.saturating_add(b)));
        ending_at = next;
    }
    total
}
