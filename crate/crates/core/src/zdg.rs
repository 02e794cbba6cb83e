//! Zero-divisor graphs `Γ(S)` of inverse semigroups with zero.
//!
//! Two distinct nonzero elements are adjacent when the only element below
//! both of them in the natural partial order is the zero. The classifiers in
//! this module predict the diameter and girth of `Γ(S)` from order-theoretic
//! data and compare the prediction with BFS-computed values.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result, TheoremViolation};
use crate::graph::{Metric, SimpleGraph};
use crate::semigroup::{FiniteSemigroup, OrderStructure};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZdGraph {
    /// Source element of each graph vertex (index into the semigroup or
    /// element list the graph was built from).
    pub vertices: Vec<usize>,
    pub labels: Vec<String>,
    pub graph: SimpleGraph,
    pub diameter: Metric,
    pub girth: Metric,
    pub connected: bool,
    /// Metrics were computed on a truncated enumeration.
    pub truncated: bool,
}

impl ZdGraph {
    pub fn new(vertices: Vec<usize>, labels: Vec<String>, graph: SimpleGraph) -> Self {
        let diameter = graph.diameter();
        Self::with_diameter(vertices, labels, graph, diameter, false)
    }

    pub fn with_diameter(
        vertices: Vec<usize>,
        labels: Vec<String>,
        graph: SimpleGraph,
        diameter: Metric,
        truncated: bool,
    ) -> Self {
        assert_eq!(vertices.len(), graph.vertex_count());
        assert_eq!(labels.len(), graph.vertex_count());
        let girth = graph.girth();
        let connected = graph.is_connected();
        Self {
            vertices,
            labels,
            graph,
            diameter,
            girth,
            connected,
            truncated,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Graph position of a source element.
    pub fn position(&self, element: usize) -> Option<usize> {
        self.vertices.iter().position(|&v| v == element)
    }

    /// Adjacency by source element; false when either is not a vertex.
    pub fn adjacent_elements(&self, a: usize, b: usize) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(i), Some(j)) => i != j && self.graph.adjacent(i, j),
            _ => false,
        }
    }

    /// Edges as label pairs.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect()
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", dot_id(name));
        for l in &self.labels {
            let _ = writeln!(out, "  {};", dot_id(l));
        }
        for (a, b) in self.graph.edges() {
            let _ = writeln!(out, "  {} -- {};", dot_id(&self.labels[a]), dot_id(&self.labels[b]));
        }
        out.push_str("}\n");
        out
    }

    pub fn metrics(&self, diam_case: Option<&DiamClass>, girth_case: Option<&GirthClass>) -> MetricsBlock {
        MetricsBlock {
            vertices: self.vertex_count(),
            edges: self.edge_count(),
            diameter: self.diameter,
            girth: self.girth,
            diam_case: diam_case.map(|c| c.case.label().to_string()),
            girth_case: girth_case.map(|c| c.case.label().to_string()),
        }
    }
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsBlock {
    pub vertices: usize,
    pub edges: usize,
    pub diameter: Metric,
    pub girth: Metric,
    pub diam_case: Option<String>,
    pub girth_case: Option<String>,
}

fn require_zero(s: &FiniteSemigroup) -> Result<usize> {
    s.zero().ok_or(Error::MissingZero)
}

/// `Z(S)^×`: nonzero elements that meet some other nonzero element only in
/// the zero.
pub fn zero_divisors(s: &FiniteSemigroup, ord: &OrderStructure) -> Result<Vec<usize>> {
    let z = require_zero(s)?;
    Ok(s.nonzero()
        .filter(|&a| s.nonzero().any(|b| ord.meets_only_at(a, b, z)))
        .collect())
}

/// `Ann(x) = {y : ω(x, y) = {0}}`; always contains the zero.
pub fn annihilator(s: &FiniteSemigroup, ord: &OrderStructure, x: usize) -> Result<Vec<usize>> {
    let z = require_zero(s)?;
    Ok((0..s.order()).filter(|&y| ord.meets_only_at(x, y, z)).collect())
}

/// `{e·a : e ∈ E(S)}` computed straight from the table.
fn left_translate(s: &FiniteSemigroup, a: usize) -> Vec<bool> {
    let mut hit = vec![false; s.order()];
    for &e in s.idempotents() {
        hit[s.mul(e, a)] = true;
    }
    hit
}

fn right_translate(s: &FiniteSemigroup, a: usize) -> Vec<bool> {
    let mut hit = vec![false; s.order()];
    for &e in s.idempotents() {
        hit[s.mul(a, e)] = true;
    }
    hit
}

fn meets_only_at(x: &[bool], y: &[bool], z: usize) -> bool {
    x.iter().zip(y).enumerate().all(|(c, (&p, &q))| !(p && q) || c == z) && x[z] && y[z]
}

/// Builds `Γ(S)`. Every pair of nonzero elements is also tested against the
/// translate forms `Ea ∩ Eb = {0}` and `aE ∩ bE = {0}`; any disagreement with
/// the meet-set form is reported as a violation.
pub fn build_gamma(s: &FiniteSemigroup, ord: &OrderStructure) -> Result<ZdGraph> {
    let z = require_zero(s)?;
    let nonzero: Vec<usize> = s.nonzero().collect();
    let left: Vec<Vec<bool>> = (0..s.order()).map(|a| left_translate(s, a)).collect();
    let right: Vec<Vec<bool>> = (0..s.order()).map(|a| right_translate(s, a)).collect();
    for &a in &nonzero {
        for &b in &nonzero {
            let meet = ord.meets_only_at(a, b, z);
            let by_left = meets_only_at(&left[a], &left[b], z);
            let by_right = meets_only_at(&right[a], &right[b], z);
            if meet != by_left || meet != by_right {
                return Err(TheoremViolation::new(
                    "adjacency equivalences (meet / Ea∩Eb / aE∩bE)",
                    format!(
                        "pair ({}, {}): meet={meet} left={by_left} right={by_right}",
                        s.name(a),
                        s.name(b)
                    ),
                )
                .into());
            }
        }
    }
    let vertices = zero_divisors(s, ord)?;
    let graph = SimpleGraph::from_predicate(vertices.len(), |i, j| {
        ord.meets_only_at(vertices[i], vertices[j], z)
    });
    let labels = vertices.iter().map(|&v| s.name(v).to_string()).collect();
    Ok(ZdGraph::new(vertices, labels, graph))
}

/// `Min(S^×)` computed as `{x ≠ 0 : Ex = {x, 0}}`, cross-checked against
/// plain minimality in the poset `S^×`.
pub fn minimal_nonzero(s: &FiniteSemigroup, ord: &OrderStructure) -> Result<Vec<usize>> {
    let z = require_zero(s)?;
    let by_down_set: Vec<usize> = s
        .nonzero()
        .filter(|&x| {
            let mut expect = vec![x, z];
            expect.sort_unstable();
            ord.down_set(x) == expect.as_slice()
        })
        .collect();
    let by_poset: Vec<usize> = s
        .nonzero()
        .filter(|&x| !s.nonzero().any(|y| y != x && ord.leq(y, x)))
        .collect();
    if by_down_set != by_poset {
        return Err(TheoremViolation::new(
            "Min(S^x) = {x : Ex = {x,0}}",
            format!(
                "down-set form {:?} vs poset form {:?}",
                names(s, &by_down_set),
                names(s, &by_poset)
            ),
        )
        .into());
    }
    Ok(by_down_set)
}

fn names(s: &FiniteSemigroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| s.name(x).to_string()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiamCase {
    /// `Z(S)^× = Min(S^×)`.
    Complete,
    /// Every non-adjacent pair outside `Min` has a common annihilator.
    CommonNeighbour,
    /// Some non-adjacent pair outside `Min` has `Ann(x) ∩ Ann(y) = {0}`.
    DistanceThree,
}

impl DiamCase {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Complete => "ii",
            Self::CommonNeighbour => "iii",
            Self::DistanceThree => "iv",
        }
    }

    pub fn predicted(&self) -> usize {
        match self {
            Self::Complete => 1,
            Self::CommonNeighbour => 2,
            Self::DistanceThree => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamClass {
    pub case: DiamCase,
    pub predicted: Metric,
    pub computed: Metric,
    /// The `(x, y)` pair witnessing case (iv).
    pub witness: Option<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GirthCase {
    Star,
    BipartiteNonStar,
    OddCycle,
}

impl GirthCase {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Star => "star",
            Self::BipartiteNonStar => "bipartite",
            Self::OddCycle => "odd-cycle",
        }
    }

    pub fn predicted(&self) -> Metric {
        match self {
            Self::Star => Metric::Infinite,
            Self::BipartiteNonStar => Metric::Finite(4),
            Self::OddCycle => Metric::Finite(3),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GirthClass {
    pub case: GirthCase,
    pub predicted: Metric,
    pub computed: Metric,
}

fn require_pair_graph(g: &ZdGraph) -> Result<()> {
    if g.vertex_count() < 2 {
        return Err(Error::Degenerate(format!(
            "classification needs at least two vertices, graph has {}",
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Decides which diameter case applies from `Min(S^×)` and annihilators and
/// checks it against the computed diameter. Also requires `Γ(S)` to be
/// connected.
pub fn classify_diameter(s: &FiniteSemigroup, ord: &OrderStructure, g: &ZdGraph) -> Result<DiamClass> {
    require_pair_graph(g)?;
    let z = require_zero(s)?;
    if !g.connected {
        return Err(TheoremViolation::new("Γ(S) is connected", "zero-divisor graph is disconnected").into());
    }
    let minimal = minimal_nonzero(s, ord)?;
    let outside: Vec<usize> = g
        .vertices
        .iter()
        .copied()
        .filter(|v| !minimal.contains(v))
        .collect();
    let (case, witness) = if outside.is_empty() && g.vertices.len() == minimal.len() {
        (DiamCase::Complete, None)
    } else if outside.is_empty() {
        // Min(S^×) has an element that is not a zero-divisor, so the
        // vertex set differs from Min without any vertex outside it.
        return Err(TheoremViolation::new(
            "Z(S)^x vs Min(S^x)",
            format!("Min {:?} strictly contains Z(S)^x", names(s, &minimal)),
        )
        .into());
    } else {
        let anns: Vec<Vec<usize>> = outside
            .iter()
            .map(|&x| annihilator(s, ord, x))
            .collect::<Result<_>>()?;
        let mut witness = None;
        'search: for (i, &x) in outside.iter().enumerate() {
            for (j, &y) in outside.iter().enumerate().skip(i + 1) {
                if ord.meets_only_at(x, y, z) {
                    continue;
                }
                let common_nonzero = anns[i].iter().any(|&c| c != z && anns[j].contains(&c));
                if !common_nonzero {
                    witness = Some((x, y));
                    break 'search;
                }
            }
        }
        match witness {
            Some(w) => (DiamCase::DistanceThree, Some(w)),
            None => (DiamCase::CommonNeighbour, None),
        }
    };
    let predicted = Metric::Finite(case.predicted());
    if predicted != g.diameter {
        return Err(TheoremViolation::new(
            "diameter classification",
            format!("case ({}) predicts {predicted}, BFS gives {}", case.label(), g.diameter),
        )
        .into());
    }
    Ok(DiamClass {
        case,
        predicted,
        computed: g.diameter,
        witness,
    })
}

/// Star / bipartite-non-star / odd-cycle classification, checked against
/// the computed girth.
pub fn classify_girth(g: &ZdGraph) -> Result<GirthClass> {
    require_pair_graph(g)?;
    let case = if g.graph.is_star() {
        GirthCase::Star
    } else if g.graph.is_bipartite() {
        GirthCase::BipartiteNonStar
    } else {
        GirthCase::OddCycle
    };
    let predicted = case.predicted();
    if predicted != g.girth {
        return Err(TheoremViolation::new(
            "girth classification",
            format!("case {} predicts {predicted}, BFS gives {}", case.label(), g.girth),
        )
        .into());
    }
    Ok(GirthClass {
        case,
        predicted,
        computed: g.girth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::semigroup::{adjoin_zero, natural_order, verify_inverse};

    fn prepared(s: &FiniteSemigroup) -> OrderStructure {
        natural_order(s, &verify_inverse(s)).unwrap()
    }

    fn by_name(s: &FiniteSemigroup, xs: &[usize]) -> Vec<String> {
        names(s, xs)
    }

    fn chain3() -> FiniteSemigroup {
        // 0 < f < e
        FiniteSemigroup::from_fn(vec!["0".into(), "f".into(), "e".into()], |a, b| a.min(b))
    }

    #[test]
    fn b2_gamma_is_k4() {
        let b2 = generators::b2();
        let ord = prepared(&b2);
        let zd = zero_divisors(&b2, &ord).unwrap();
        assert_eq!(by_name(&b2, &zd), ["e", "f", "a", "b"]);
        let g = build_gamma(&b2, &ord).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.diameter, Metric::Finite(1));
        assert_eq!(g.girth, Metric::Finite(3));
        assert_eq!(by_name(&b2, &minimal_nonzero(&b2, &ord).unwrap()), ["e", "f", "a", "b"]);
        let dc = classify_diameter(&b2, &ord, &g).unwrap();
        assert_eq!(dc.case, DiamCase::Complete);
        assert_eq!(classify_girth(&g).unwrap().case, GirthCase::OddCycle);
        let a = b2.index_of("a").unwrap();
        let ann = annihilator(&b2, &ord, a).unwrap();
        for x in ["0", "e", "f", "b"] {
            assert!(ann.contains(&b2.index_of(x).unwrap()));
        }
    }

    #[test]
    fn chain_has_no_zero_divisors() {
        let c = chain3();
        let ord = prepared(&c);
        assert!(zero_divisors(&c, &ord).unwrap().is_empty());
        let g = build_gamma(&c, &ord).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.diameter, Metric::Undefined);
        assert_eq!(g.girth, Metric::Undefined);
        assert_eq!(by_name(&c, &minimal_nonzero(&c, &ord).unwrap()), ["f"]);
        assert_eq!(annihilator(&c, &ord, 2).unwrap(), [0]);
        assert!(matches!(classify_girth(&g), Err(Error::Degenerate(_))));
    }

    #[test]
    fn annihilator_of_zero_is_everything() {
        let b2 = generators::b2();
        let ord = prepared(&b2);
        assert_eq!(annihilator(&b2, &ord, 0).unwrap(), [0, 1, 2, 3, 4]);
    }

    #[test]
    fn adjoined_z2_gives_k2() {
        let s = adjoin_zero(&generators::cyclic_group(2)).unwrap();
        let ord = prepared(&s);
        let g = build_gamma(&s, &ord).unwrap();
        assert_eq!(g.labels, ["1", "g"]);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(classify_diameter(&s, &ord, &g).unwrap().case, DiamCase::Complete);
        assert_eq!(classify_girth(&g).unwrap().case, GirthCase::Star);
    }

    #[test]
    fn adjoined_clifford_c1_is_case_iii() {
        let s = adjoin_zero(&generators::clifford_c1()).unwrap();
        let ord = prepared(&s);
        let g = build_gamma(&s, &ord).unwrap();
        let dc = classify_diameter(&s, &ord, &g).unwrap();
        assert_eq!(dc.case, DiamCase::CommonNeighbour);
        assert_eq!(dc.computed, Metric::Finite(2));
    }

    #[test]
    fn missing_zero_is_an_error() {
        let z3 = generators::cyclic_group(3);
        let ord = prepared(&z3);
        assert_eq!(zero_divisors(&z3, &ord), Err(Error::MissingZero));
        assert_eq!(build_gamma(&z3, &ord).unwrap_err(), Error::MissingZero);
    }

    #[test]
    fn dot_output() {
        let b2 = generators::b2();
        let g = build_gamma(&b2, &prepared(&b2)).unwrap();
        let dot = g.to_dot("gamma");
        assert!(dot.starts_with("graph \"gamma\" {\n"));
        assert!(dot.contains("  \"a\" -- \"b\";\n"));
        assert_eq!(dot.matches(" -- ").count(), 6);
    }
}
