use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::{enumerate_paths, ig_inverse, ig_leq, ig_multiply, DirectedGraph, GPath, IgElement, PathEnumeration};
use crate::error::{Error, Result, TheoremViolation};
use crate::graph::{Metric, SimpleGraph};
use crate::semigroup::{self, FiniteSemigroup};
use crate::zdg::{self, ZdGraph};

/// Path-length bound used when none is given.
pub const DEFAULT_MAX_LEN: usize = 4;

/// The elements of `I(G)` whose paths have at most `max_len` edges, with
/// the zero at index 0.
#[derive(Debug, Clone)]
pub struct IgUniverse {
    pub graph: DirectedGraph,
    pub paths: PathEnumeration,
    pub elements: Vec<IgElement>,
    index: HashMap<IgElement, usize>,
}

/// A product together with its position in the enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub value: IgElement,
    pub index: Option<usize>,
    /// The product has a path longer than the enumeration bound.
    pub overflow: bool,
}

pub fn ig_elements(g: &DirectedGraph, max_len: usize) -> IgUniverse {
    let paths = enumerate_paths(g, max_len);
    let mut by_range: Vec<Vec<&GPath>> = vec![Vec::new(); g.vertex_count()];
    for p in &paths.paths {
        by_range[p.range()].push(p);
    }
    let mut elements = vec![IgElement::Zero];
    for bucket in &by_range {
        for p in bucket {
            for q in bucket {
                elements.push(IgElement::Pair {
                    p: (*p).clone(),
                    q: (*q).clone(),
                });
            }
        }
    }
    elements.sort();
    let index = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    IgUniverse {
        graph: g.clone(),
        paths,
        elements,
        index,
    }
}

impl IgUniverse {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.paths.max_len
    }

    pub fn exact(&self) -> bool {
        self.paths.exact
    }

    pub fn index_of(&self, x: &IgElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn label(&self, i: usize) -> String {
        self.elements[i].label(&self.graph)
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        (0..self.len()).find(|&i| self.label(i) == label)
    }

    pub fn multiply(&self, i: usize, j: usize) -> Product {
        let value = ig_multiply(&self.elements[i], &self.elements[j]);
        let index = self.index_of(&value);
        Product {
            overflow: index.is_none(),
            value,
            index,
        }
    }

    /// Row-major product table; `None` marks overflow.
    pub fn product_table(&self) -> Vec<Option<usize>> {
        let n = self.len();
        (0..n * n)
            .into_par_iter()
            .map(|k| self.multiply(k / n, k % n).index)
            .collect()
    }

    /// The Cayley table of the enumeration, available when it is closed
    /// under multiplication (always the case for exact enumerations).
    pub fn to_semigroup(&self) -> Option<FiniteSemigroup> {
        let table = self.product_table();
        if table.iter().any(Option::is_none) {
            return None;
        }
        let mut seen = HashSet::new();
        let names: Vec<String> = (0..self.len())
            .map(|i| {
                let l = self.label(i);
                if seen.insert(l.clone()) {
                    l
                } else {
                    format!("{l}#{i}")
                }
            })
            .collect();
        let n = self.len();
        Some(FiniteSemigroup::from_fn(names, |a, b| table[a * n + b].unwrap()))
    }
}

/// `{αα⁻¹ · x : α ∈ alphas} ∪ {0}`.
pub fn translate_with(alphas: &[GPath], x: &IgElement) -> HashSet<IgElement> {
    let mut out: HashSet<IgElement> = alphas
        .iter()
        .map(|a| ig_multiply(&IgElement::idempotent(a.clone()), x))
        .collect();
    out.insert(IgElement::Zero);
    out
}

/// The idempotent translate `E(I(G))x`, with `α` ranging over paths of at
/// most `max_len` edges.
pub fn idempotent_translate(g: &DirectedGraph, max_len: usize, x: &IgElement) -> HashSet<IgElement> {
    translate_with(&enumerate_paths(g, max_len).paths, x)
}

/// Closed-form adjacency in `Γ(I(G))`: `pq⁻¹` and `rs⁻¹` are non-adjacent
/// iff one is `(rt)(st)⁻¹`-below the other for some path `t`.
pub fn ig_adjacent(x: &IgElement, y: &IgElement) -> Result<bool> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::Degenerate("adjacency is defined on nonzero elements".into()));
    }
    if x == y {
        return Err(Error::Degenerate("adjacency needs two distinct elements".into()));
    }
    Ok(!(ig_leq(x, y) || ig_leq(y, x)))
}

/// `Γ(I(G))` on an enumeration.
#[derive(Debug, Clone)]
pub struct IgGamma {
    pub universe: IgUniverse,
    pub gamma: ZdGraph,
    pub exact: bool,
}

impl IgGamma {
    pub fn max_len(&self) -> usize {
        self.universe.max_len()
    }
}

fn closed_form_graph(elements: &[IgElement]) -> SimpleGraph {
    SimpleGraph::from_predicate(elements.len(), |i, j| !(ig_leq(&elements[i], &elements[j]) || ig_leq(&elements[j], &elements[i])))
}

/// Builds `Γ(I(G))` over elements with paths of at most `max_len` edges.
///
/// Every enumerated nonzero element must have a neighbour; distances are
/// measured in the graph over the enumeration at `max_len + 1` so that
/// intermediate vertices one edge longer are available.
pub fn build_gamma_ig(g: &DirectedGraph, max_len: usize) -> Result<IgGamma> {
    if g.is_trivial() {
        return Err(Error::TrivialGraph);
    }
    let core = ig_elements(g, max_len);
    let exact = core.exact();
    let core_nonzero: Vec<IgElement> = core.elements[1..].to_vec();

    let (pool_elements, core_positions): (Vec<IgElement>, Vec<usize>) = if exact {
        (core_nonzero.clone(), (0..core_nonzero.len()).collect())
    } else {
        let pool = ig_elements(g, max_len + 1);
        let pool_nonzero = pool.elements[1..].to_vec();
        let pos = core_nonzero
            .iter()
            .map(|x| pool.index_of(x).expect("pool contains core") - 1)
            .collect();
        (pool_nonzero, pos)
    };
    let pool_graph = closed_form_graph(&pool_elements);

    for (k, &pos) in core_positions.iter().enumerate() {
        if pool_graph.degree(pos) == 0 {
            return Err(TheoremViolation::new(
                "every nonzero element of I(G) is a zero-divisor",
                format!("{} has no neighbour", core.label(k + 1)),
            )
            .into());
        }
    }

    let core_graph = if exact {
        pool_graph.clone()
    } else {
        SimpleGraph::from_predicate(core_positions.len(), |i, j| {
            pool_graph.adjacent(core_positions[i], core_positions[j])
        })
    };
    let diameter = pool_graph.eccentricity_max(Some(&core_positions));
    let vertices: Vec<usize> = (1..core.len()).collect();
    let labels = vertices.iter().map(|&i| core.label(i)).collect();
    let gamma = ZdGraph::with_diameter(vertices, labels, core_graph, diameter, !exact);
    Ok(IgGamma {
        universe: core,
        gamma,
        exact,
    })
}

/// Diameter and girth of `Γ(I(G))` predicted from `|V(G)|` and `|E(G)|`.
pub fn classify_ig(g: &DirectedGraph) -> Result<(Metric, Metric)> {
    if g.is_trivial() {
        return Err(Error::TrivialGraph);
    }
    Ok(match (g.edge_count(), g.vertex_count()) {
        (0, 2) => (Metric::Finite(1), Metric::Infinite),
        (0, _) => (Metric::Finite(1), Metric::Finite(3)),
        _ => (Metric::Finite(2), Metric::Finite(3)),
    })
}

/// Compares closed-form adjacency with the idempotent-translate definition
/// on every pair of distinct enumerated nonzero elements. `alpha_len` bounds
/// the paths `α` used to form translates. Returns the number of pairs.
pub fn check_adjacency_oracle(ig: &IgGamma, alpha_len: usize) -> Result<usize> {
    let u = &ig.universe;
    let alphas = enumerate_paths(&u.graph, alpha_len).paths;
    let translates: Vec<HashSet<IgElement>> = u.elements[1..]
        .par_iter()
        .map(|x| translate_with(&alphas, x))
        .collect();
    let n = translates.len();
    let bad = (0..n).into_par_iter().find_map_first(|i| {
        (0..n).filter(|&j| j != i).find_map(|j| {
            let (small, large) = if translates[i].len() <= translates[j].len() {
                (&translates[i], &translates[j])
            } else {
                (&translates[j], &translates[i])
            };
            let oracle = small.iter().all(|c| c.is_zero() || !large.contains(c));
            let closed = ig.gamma.graph.adjacent(i, j);
            (oracle != closed).then_some((i, j, oracle, closed))
        })
    });
    if let Some((i, j, oracle, closed)) = bad {
        return Err(TheoremViolation::new(
            "closed-form adjacency agrees with translate oracle",
            format!(
                "({}, {}): translates say {oracle}, closed form says {closed}",
                u.label(i + 1),
                u.label(j + 1)
            ),
        )
        .into());
    }
    Ok(n * n.saturating_sub(1))
}

/// Elements of `Path(G) ∪ Path(G)⁻¹` are pairwise adjacent.
pub fn check_paths_pairwise_adjacent(ig: &IgGamma) -> Result<usize> {
    let u = &ig.universe;
    let paths: Vec<usize> = (1..u.len()).filter(|&i| u.elements[i].is_path_or_inverse_path()).collect();
    let mut checked = 0;
    for (a, &i) in paths.iter().enumerate() {
        for &j in &paths[a + 1..] {
            if !ig.gamma.graph.adjacent(i - 1, j - 1) {
                return Err(TheoremViolation::new(
                    "paths and inverse paths are pairwise adjacent",
                    format!("{} and {}", u.label(i), u.label(j)),
                )
                .into());
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Theorem-level statements that need the whole of `I(G)`: diameter in
/// `{1, 2}`, girth in `{3, ∞}`, the null-graph and comparability
/// characterizations, and agreement with [`classify_ig`].
pub fn check_exact_theorems(ig: &IgGamma) -> Result<()> {
    if !ig.exact {
        return Err(Error::Degenerate("exact theorems need an exact enumeration".into()));
    }
    let u = &ig.universe;
    let g = &u.graph;
    let fail = |check: &str, witness: String| -> Result<()> { Err(TheoremViolation::new(check, witness).into()) };
    let diam = ig.gamma.diameter;
    let girth = ig.gamma.girth;
    if !matches!(diam, Metric::Finite(1) | Metric::Finite(2)) {
        return fail("diam Γ(I(G)) ∈ {1,2}", format!("diameter {diam}"));
    }
    if !matches!(girth, Metric::Finite(3) | Metric::Infinite) {
        return fail("gr Γ(I(G)) ∈ {3,∞}", format!("girth {girth}"));
    }
    let null = g.edge_count() == 0;
    let nv = g.vertex_count();
    if (girth == Metric::Infinite) != (nv == 2 && null) {
        return fail("gr = ∞ iff |V|=2 and |E|=0", format!("girth {girth}, |V|={nv}, |E|={}", g.edge_count()));
    }
    if (girth == Metric::Finite(3)) != (!null || nv >= 3) {
        return fail("gr = 3 iff |E|≠0 or |V|≥3", format!("girth {girth}, |V|={nv}, |E|={}", g.edge_count()));
    }

    // Order data straight from translates over all of Path(G).
    let alphas = &u.paths.paths;
    let translates: Vec<HashSet<IgElement>> = u.elements[1..].iter().map(|x| translate_with(alphas, x)).collect();
    let all_minimal = translates.iter().all(|t| t.len() == 2);
    let comparable_pair = (0..translates.len()).any(|i| {
        (0..translates.len()).any(|j| i != j && translates[j].contains(&u.elements[i + 1]))
    });
    let d1 = diam == Metric::Finite(1);
    if d1 != all_minimal || d1 != (null && nv >= 2) {
        return fail(
            "diam = 1 iff I(G)^x = Min iff G is null with |V| ≥ 2",
            format!("diam {diam}, all minimal {all_minimal}, null {null}, |V|={nv}"),
        );
    }
    let d2 = diam == Metric::Finite(2);
    if d2 != !null || d2 != comparable_pair {
        return fail(
            "diam = 2 iff G not null iff distinct comparable elements exist",
            format!("diam {diam}, null {null}, comparable pair {comparable_pair}"),
        );
    }
    let (pd, pg) = classify_ig(g)?;
    if (pd, pg) != (diam, girth) {
        return fail(
            "(diam, gr) classification",
            format!("predicted ({pd}, {pg}), computed ({diam}, {girth})"),
        );
    }
    Ok(())
}

/// Associativity on triples of enumerated elements whose pairwise products
/// stay inside the enumeration. When a triple product overflows on one
/// side the two sides are compared exactly. Returns the number of fully
/// overflow-free triples.
pub fn check_associativity(u: &IgUniverse) -> Result<usize> {
    let n = u.len();
    let table = u.product_table();
    let counts: Vec<std::result::Result<usize, (usize, usize, usize)>> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut ok = 0usize;
            for y in 0..n {
                let Some(xy) = table[x * n + y] else { continue };
                for z in 0..n {
                    let Some(yz) = table[y * n + z] else { continue };
                    match (table[xy * n + z], table[x * n + yz]) {
                        (Some(l), Some(r)) => {
                            if l != r {
                                return Err((x, y, z));
                            }
                            ok += 1;
                        }
                        _ => {
                            let l = ig_multiply(&u.elements[xy], &u.elements[z]);
                            let r = ig_multiply(&u.elements[x], &u.elements[yz]);
                            if l != r {
                                return Err((x, y, z));
                            }
                        }
                    }
                }
            }
            Ok(ok)
        })
        .collect();
    let mut total = 0;
    for c in counts {
        match c {
            Ok(k) => total += k,
            Err((x, y, z)) => {
                return Err(TheoremViolation::new(
                    "I(G) multiplication is associative",
                    format!("({}, {}, {})", u.label(x), u.label(y), u.label(z)),
                )
                .into())
            }
        }
    }
    Ok(total)
}

/// `x x⁻¹ x = x`, `(x⁻¹)⁻¹ = x`, and the idempotents are exactly `pp⁻¹`
/// and `0`.
pub fn check_inverse_laws(u: &IgUniverse) -> Result<usize> {
    for x in &u.elements {
        let inv = ig_inverse(x);
        if ig_inverse(&inv) != *x {
            return Err(TheoremViolation::new("(x^-1)^-1 = x", x.label(&u.graph)).into());
        }
        if ig_multiply(&ig_multiply(x, &inv), x) != *x {
            return Err(TheoremViolation::new("x x^-1 x = x", x.label(&u.graph)).into());
        }
        if ig_multiply(&ig_multiply(&inv, x), &inv) != inv {
            return Err(TheoremViolation::new("x^-1 x x^-1 = x^-1", x.label(&u.graph)).into());
        }
        let squares_to_self = ig_multiply(x, x) == *x;
        if squares_to_self != x.is_idempotent() {
            return Err(TheoremViolation::new("E(I(G)) = {pp^-1} ∪ {0}", x.label(&u.graph)).into());
        }
    }
    Ok(u.len())
}

/// For exact enumerations: the Cayley table of `I(G)` run through the
/// generic natural-order pipeline yields the same order and the same graph
/// as the closed forms.
pub fn check_cayley_agreement(ig: &IgGamma) -> Result<()> {
    let u = &ig.universe;
    let Some(s) = u.to_semigroup() else {
        return Err(Error::Degenerate("enumeration is not closed under multiplication".into()));
    };
    semigroup::require_associative(&s)?;
    let verdict = semigroup::verify_inverse(&s);
    verdict.require(&s)?;
    let order = semigroup::natural_order(&s, &verdict)?;
    for i in 0..u.len() {
        for j in 0..u.len() {
            if order.leq(i, j) != ig_leq(&u.elements[i], &u.elements[j]) {
                return Err(TheoremViolation::new(
                    "closed-form order matches Cayley-table order",
                    format!("({}, {})", u.label(i), u.label(j)),
                )
                .into());
            }
        }
    }
    let table_gamma = zdg::build_gamma(&s, &order)?;
    if table_gamma.vertices != ig.gamma.vertices || table_gamma.graph.edges() != ig.gamma.graph.edges() {
        return Err(TheoremViolation::new(
            "closed-form Γ(I(G)) matches Cayley-table Γ",
            format!(
                "table graph {}v/{}e vs closed form {}v/{}e",
                table_gamma.vertex_count(),
                table_gamma.edge_count(),
                ig.gamma.vertex_count(),
                ig.gamma.edge_count()
            ),
        )
        .into());
    }
    Ok(())
}
