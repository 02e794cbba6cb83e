use std::fmt::Write as _;

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: usize,
    pub range: usize,
}

/// A directed multigraph; loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

impl DirectedGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Self {
        Self { vertices, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.source == v)
            .map(|(i, _)| i)
    }

    /// A single vertex and no edges.
    pub fn is_trivial(&self) -> bool {
        self.vertices.len() == 1 && self.edges.is_empty()
    }

    /// Longest path length when the graph has no directed cycle (loops
    /// count as cycles), `None` otherwise.
    pub fn longest_path(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut indegree = vec![0usize; n];
        for e in &self.edges {
            indegree[e.range] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        while let Some(v) = ready.pop() {
            order.push(v);
            for e in self.out_edges(v) {
                let r = self.edges[e].range;
                indegree[r] -= 1;
                if indegree[r] == 0 {
                    ready.push(r);
                }
            }
        }
        if order.len() < n {
            return None;
        }
        let mut longest_from = vec![0usize; n];
        for &v in order.iter().rev() {
            longest_from[v] = self
                .out_edges(v)
                .map(|e| longest_from[self.edges[e].range] + 1)
                .max()
                .unwrap_or(0);
        }
        Some(longest_from.into_iter().max().unwrap_or(0))
    }

    pub fn is_acyclic(&self) -> bool {
        self.longest_path().is_some()
    }
}

/// True iff the graph has no edges.
pub fn is_null_graph(g: &DirectedGraph) -> bool {
    g.edges.is_empty()
}

/// Parses the `.dgf` format:
///
/// ```text
/// vertices: w1 w2
/// edges:
/// e: w1 -> w2
/// ```
pub fn parse_graph(text: &str) -> Result<DirectedGraph, ParseError> {
    let mut vertices: Option<Vec<String>> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut in_edges = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(syntax(line_no, format!("expected `key: value`, found `{line}`")));
        };
        let (key, value) = (key.trim(), value.trim());
        if in_edges {
            let Some((src, dst)) = value.split_once("->") else {
                return Err(syntax(line_no, "edge lines look like `name: u -> v`"));
            };
            let (src, dst) = (src.trim(), dst.trim());
            if key.is_empty() || key.contains(char::is_whitespace) {
                return Err(syntax(line_no, "edge names are single tokens"));
            }
            if edges.iter().any(|e| e.name == key) {
                return Err(ParseError::DuplicateEdge(key.to_string(), line_no));
            }
            let vs = vertices.as_ref().expect("edges section follows vertices");
            let find = |name: &str| {
                vs.iter().position(|v| v == name).ok_or_else(|| ParseError::UnknownVertex {
                    line: line_no,
                    edge: key.to_string(),
                    vertex: name.to_string(),
                })
            };
            edges.push(Edge {
                name: key.to_string(),
                source: find(src)?,
                range: find(dst)?,
            });
            continue;
        }
        match key {
            "vertices" => {
                if vertices.is_some() {
                    return Err(syntax(line_no, "`vertices` declared twice"));
                }
                let names: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                for (i, v) in names.iter().enumerate() {
                    if names[..i].contains(v) {
                        return Err(ParseError::DuplicateVertex(v.clone()));
                    }
                }
                if names.is_empty() {
                    return Err(ParseError::NoVertices);
                }
                vertices = Some(names);
            }
            "edges" => {
                if vertices.is_none() {
                    return Err(syntax(line_no, "`edges:` must come after `vertices:`"));
                }
                if !value.is_empty() {
                    return Err(syntax(line_no, "edges go on the lines after `edges:`"));
                }
                in_edges = true;
            }
            other => return Err(syntax(line_no, format!("unknown key `{other}`"))),
        }
    }
    let vertices = vertices.ok_or(ParseError::NoVertices)?;
    Ok(DirectedGraph { vertices, edges })
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn render_graph(g: &DirectedGraph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "vertices: {}", g.vertices.join(" "));
    out.push_str("edges:\n");
    for e in &g.edges {
        let _ = writeln!(out, "{}: {} -> {}", e.name, g.vertices[e.source], g.vertices[e.range]);
    }
    out
}
