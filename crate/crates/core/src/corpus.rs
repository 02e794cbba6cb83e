//! Seeded corpora of semigroups and digraphs for the verification harness.
//!
//! A corpus is a pure function of its [`CorpusSpec`]: the same family, seed,
//! count and caps always yield the same instances in the same order.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::generators::{self, partial_injections, PartialInjection};
use crate::graph_inverse::{count_paths, DirectedGraph, Edge};
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    I2Closures,
    I3Closures,
    Clifford,
    Groups,
    RandomDigraphs,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::I2Closures,
        Family::I3Closures,
        Family::Clifford,
        Family::Groups,
        Family::RandomDigraphs,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::I2Closures => "i2-closures",
            Family::I3Closures => "i3-closures",
            Family::Clifford => "clifford",
            Family::Groups => "groups",
            Family::RandomDigraphs => "random-digraphs",
        }
    }

    /// Families whose size is fixed, ignoring `count` and `seed`.
    pub fn is_enumerated(&self) -> bool {
        matches!(self, Family::Clifford | Family::Groups)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Family::ALL.iter().map(Family::name).collect();
                Error::Unsupported(format!("unknown family `{s}` (known: {})", known.join(", ")))
            })
    }
}

/// Size limits for generated instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Generators drawn for each inverse-monoid closure.
    pub max_generators: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Bound on `|I(G)|` enumerated at path length 3.
    pub max_elements: usize,
    /// Bound on the number of paths of length at most 6, which is what the
    /// translate oracle enumerates on cyclic graphs.
    pub max_alpha_paths: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_generators: 3,
            max_vertices: 5,
            max_edges: 6,
            max_elements: 300,
            max_alpha_paths: 5000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub family: Family,
    pub seed: u64,
    pub count: usize,
    pub caps: Caps,
}

impl CorpusSpec {
    pub fn new(family: Family, seed: u64, count: usize) -> Self {
        Self {
            family,
            seed,
            count,
            caps: Caps::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Instance {
    Semigroup { name: String, semigroup: FiniteSemigroup },
    Digraph { name: String, graph: DirectedGraph },
}

impl Instance {
    pub fn name(&self) -> &str {
        match self {
            Instance::Semigroup { name, .. } | Instance::Digraph { name, .. } => name,
        }
    }
}

pub fn generate(spec: &CorpusSpec) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.family {
        Family::I2Closures => Ok(closures(2, spec, &mut rng)),
        Family::I3Closures => Ok(closures(3, spec, &mut rng)),
        Family::Groups => Ok(groups()),
        Family::Clifford => clifford_family(),
        Family::RandomDigraphs => random_digraphs(spec, &mut rng),
    }
}

fn closures(n: usize, spec: &CorpusSpec, rng: &mut ChaCha8Rng) -> Vec<Instance> {
    let maps: Vec<PartialInjection> = partial_injections(n).into_iter().filter(|m| m.rank() > 0).collect();
    (0..spec.count)
        .map(|i| {
            let k = rng.gen_range(1..=spec.caps.max_generators.max(1));
            let gens: Vec<PartialInjection> = (0..k).map(|_| maps.choose(rng).expect("maps").clone()).collect();
            let names: Vec<String> = gens.iter().map(PartialInjection::name).collect();
            Instance::Semigroup {
                name: format!("i{n}-closure-{i:03} <{}>", names.join(" ")),
                semigroup: generators::inverse_closure(n, &gens),
            }
        })
        .collect()
}

fn groups() -> Vec<Instance> {
    let mut out: Vec<Instance> = (1..=6)
        .map(|n| Instance::Semigroup {
            name: format!("Z{n}"),
            semigroup: generators::cyclic_group(n),
        })
        .collect();
    out.push(Instance::Semigroup {
        name: "S3".into(),
        semigroup: generators::symmetric_group_s3(),
    });
    out
}

/// Every Clifford chain of length 1 to 3 with cyclic groups of order at most
/// 3, a bottom group of order at least 2, and every linking homomorphism
/// `x ↦ cx`.
fn clifford_family() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for len in 1..=3usize {
        let mut digits = vec![0usize; len];
        loop {
            let orders: Vec<usize> = digits.iter().map(|d| d + 1).collect();
            if orders[len - 1] >= 2 {
                let choices: Vec<Vec<usize>> = (0..len - 1)
                    .map(|i| (0..orders[i + 1]).filter(|&c| (c * orders[i]) % orders[i + 1] == 0).collect())
                    .collect();
                let mut pick = vec![0usize; len - 1];
                loop {
                    let mults: Vec<usize> = pick.iter().enumerate().map(|(i, &k)| choices[i][k]).collect();
                    out.push(Instance::Semigroup {
                        name: format!("clifford orders={orders:?} homs={mults:?}"),
                        semigroup: generators::clifford_chain(&orders, &mults)?,
                    });
                    if !advance(&mut pick, |i| choices[i].len()) {
                        break;
                    }
                }
            }
            if !advance(&mut digits, |_| 3) {
                break;
            }
        }
    }
    Ok(out)
}

/// Odometer increment with a per-position radix. Returns false after
/// wrapping around.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < radix(i) {
            return true;
        }
        digits[i] = 0;
    }
    false
}

/// `|I(G)|` at path length `len` without enumerating it.
pub fn universe_size(g: &DirectedGraph, len: usize) -> usize {
    let n = g.vertex_count();
    let mut ending_at = vec![1usize; n];
    let mut total = ending_at.clone();
    for _ in 0..len {
        let mut next = vec![0usize; n];
        for e in &g.edges {
            next[e.range] = next[e.range].saturating_add(ending_at[e.source]);
        }
        for v in 0..n {
            total[v] = total[v].saturating_add(next[v]);
        }
        ending_at = next;
    }
    total.iter().fold(1usize, |acc, &c| acc.saturating_add(c.saturating_mul(c)))
}

/// Random digraphs within the caps. Even-numbered instances are acyclic
/// (edges point from lower to higher vertex index); odd-numbered ones may
/// have loops, cycles and parallel edges. The single-vertex edgeless graph
/// is never produced.
fn random_digraphs(spec: &CorpusSpec, rng: &mut ChaCha8Rng) -> Result<Vec<Instance>> {
    let caps = spec.caps;
    if caps.max_vertices == 0 {
        return Err(Error::Unsupported("digraph corpus needs at least one vertex".into()));
    }
    let mut out = Vec::with_capacity(spec.count);
    for i in 0..spec.count {
        let acyclic = i % 2 == 0;
        let graph = loop {
            let n = rng.gen_range(1..=caps.max_vertices);
            let m = rng.gen_range(0..=caps.max_edges);
            if n == 1 && (m == 0 || acyclic) {
                continue;
            }
            let mut edges = Vec::with_capacity(m);
            for k in 0..m {
                let (source, range) = if acyclic {
                    let a = rng.gen_range(0..n);
                    let b = rng.gen_range(0..n - 1);
                    let b = if b >= a { b + 1 } else { b };
                    (a.min(b), a.max(b))
                } else {
                    (rng.gen_range(0..n), rng.gen_range(0..n))
                };
                edges.push(Edge {
                    name: char::from(b'a' + k as u8).to_string(),
                    source,
                    range,
                });
            }
            let vertices = (1..=n).map(|v| format!("v{v}")).collect();
            let g = DirectedGraph::new(vertices, edges);
            if universe_size(&g, 3) <= caps.max_elements && count_paths(&g, 6) <= caps.max_alpha_paths {
                break g;
            }
        };
        out.push(Instance::Digraph {
            name: format!("digraph-{i:03}"),
            graph,
        });
    }
    Ok(out)
}
