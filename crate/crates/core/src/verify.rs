//! Runs every applicable check on every instance of a corpus.
//!
//! Instances are analysed in parallel; results are folded back in corpus
//! order so summaries are identical between runs.

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{generate, CorpusSpec, Instance};
use crate::error::{Error, Result};
use crate::graph::Metric;
use crate::graph_inverse::{
    build_gamma_ig, check_adjacency_oracle, check_associativity, check_cayley_agreement, check_exact_theorems,
    check_inverse_laws, check_paths_pairwise_adjacent, classify_ig, ig_elements, DirectedGraph,
};
use crate::semigroup::{self, FiniteSemigroup, OrderStructure};
use crate::sigma;
use crate::zdg;

/// Path-length bound for the adjacency oracle on digraphs with a cycle.
pub const ORACLE_MAX_LEN: usize = 2;
/// Path-length bound for the associativity and inverse-law checks.
pub const ALGEBRA_MAX_LEN: usize = 3;
/// Group congruences are enumerated exhaustively up to this order.
pub const LEAST_CONGRUENCE_MAX_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail { witness: String },
    Skip { reason: String },
}

impl Outcome {
    fn from_result<T>(r: Result<T>) -> Self {
        match r {
            Ok(_) => Outcome::Pass,
            Err(e) => Outcome::Fail { witness: e.to_string() },
        }
    }

    fn skip(reason: impl Into<String>) -> Self {
        Outcome::Skip { reason: reason.into() }
    }

    fn check(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail { witness: witness() }
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass)
    }
}

/// Named check results for one instance, in the order they were run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub instance: String,
    pub checks: Vec<(String, Outcome)>,
}

impl InstanceResult {
    fn new(instance: &str) -> Self {
        Self {
            instance: instance.to_string(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, outcome: Outcome) {
        self.checks.push((name.to_string(), outcome));
    }

    pub fn outcome(&self, name: &str) -> Option<&Outcome> {
        self.checks.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, o)| !matches!(o, Outcome::Fail { .. }))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub check: String,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub check: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub schema: &'static str,
    pub family: String,
    pub seed: u64,
    pub count: usize,
    pub instances: usize,
    pub tallies: Vec<Tally>,
    pub failures: Vec<Failure>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tally(&self, check: &str) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.check == check)
    }

    pub fn render(&self) -> String {
        let width = self.tallies.iter().map(|t| t.check.len()).max().unwrap_or(0);
        let mut out = format!(
            "family {} seed {} ({} instances)\n",
            self.family, self.seed, self.instances
        );
        for t in &self.tallies {
            out.push_str(&format!(
                "  {:<width$}  {:>5} passed {:>3} failed {:>5} skipped\n",
                t.check, t.passed, t.failed, t.skipped
            ));
        }
        for f in &self.failures {
            out.push_str(&format!("FAIL {} / {}: {}\n", f.instance, f.check, f.witness));
        }
        out.push_str(if self.ok() { "all checks passed\n" } else { "some checks failed\n" });
        out
    }
}

pub fn summarize(spec: &CorpusSpec, results: &[InstanceResult]) -> VerifySummary {
    let mut tallies: Vec<Tally> = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        for (name, outcome) in &r.checks {
            let pos = match tallies.iter().position(|t| &t.check == name) {
                Some(p) => p,
                None => {
                    tallies.push(Tally {
                        check: name.clone(),
                        ..Tally::default()
                    });
                    tallies.len() - 1
                }
            };
            let t = &mut tallies[pos];
            match outcome {
                Outcome::Pass => {
                    t.checked += 1;
                    t.passed += 1;
                }
                Outcome::Fail { witness } => {
                    t.checked += 1;
                    t.failed += 1;
                    failures.push(Failure {
                        instance: r.instance.clone(),
                        check: name.clone(),
                        witness: witness.clone(),
                    });
                }
                Outcome::Skip { .. } => t.skipped += 1,
            }
        }
    }
    VerifySummary {
        schema: crate::report::SCHEMA,
        family: spec.family.name().to_string(),
        seed: spec.seed,
        count: spec.count,
        instances: results.len(),
        tallies,
        failures,
    }
}

pub fn run_corpus(spec: &CorpusSpec) -> Result<(Vec<InstanceResult>, VerifySummary)> {
    let corpus = generate(spec)?;
    let results: Vec<InstanceResult> = corpus.par_iter().map(check_instance).collect();
    let summary = summarize(spec, &results);
    Ok((results, summary))
}

pub fn check_instance(inst: &Instance) -> InstanceResult {
    match inst {
        Instance::Semigroup { name, semigroup } => check_semigroup(name, semigroup),
        Instance::Digraph { name, graph } => check_digraph(name, graph),
    }
}

/// Axioms and natural order; `None` when a failure makes further checks
/// meaningless.
fn check_foundations(r: &mut InstanceResult, s: &FiniteSemigroup) -> Option<OrderStructure> {
    let assoc = semigroup::require_associative(s);
    let assoc_ok = assoc.is_ok();
    r.push("associativity", Outcome::from_result(assoc));
    if !assoc_ok {
        return None;
    }
    let verdict = semigroup::verify_inverse(s);
    r.push("inverse axioms", Outcome::from_result(verdict.require(s)));
    if !verdict.is_inverse {
        return None;
    }
    let order = semigroup::natural_order(s, &verdict);
    let order = match order {
        Ok(o) => {
            r.push("natural order left/right forms", Outcome::Pass);
            o
        }
        Err(e) => {
            r.push("natural order left/right forms", Outcome::from_result::<()>(Err(e)));
            return None;
        }
    };
    r.push(
        "natural order is a partial order",
        Outcome::check(order.check_partial_order().is_ok(), || "order axioms fail".into()),
    );
    r.push(
        "least element iff absorbing",
        Outcome::from_result(semigroup::check_least_is_zero(s, &order)),
    );
    Some(order)
}

pub fn check_semigroup(name: &str, s: &FiniteSemigroup) -> InstanceResult {
    let mut r = InstanceResult::new(name);
    let Some(order) = check_foundations(&mut r, s) else {
        return r;
    };
    if s.proper_zero().is_some() {
        check_with_zero(&mut r, s, &order);
    } else {
        check_zero_free(&mut r, s);
    }
    r
}

fn check_with_zero(r: &mut InstanceResult, s: &FiniteSemigroup, order: &OrderStructure) {
    let z = s.zero().expect("zero present");
    let gamma = match zdg::build_gamma(s, order) {
        Ok(g) => {
            r.push("adjacency: meet / Ea∩Eb / aE∩bE", Outcome::Pass);
            g
        }
        Err(e) => {
            r.push("adjacency: meet / Ea∩Eb / aE∩bE", Outcome::from_result::<()>(Err(e)));
            return;
        }
    };

    // a ∈ Ann(b) ⇔ b ∈ Ann(a) ⇔ adjacent, for every pair of distinct
    // nonzero elements.
    let anns: Vec<Vec<usize>> = (0..s.order())
        .map(|x| zdg::annihilator(s, order, x).unwrap_or_default())
        .collect();
    let mut ann_witness = None;
    'pairs: for a in s.nonzero() {
        for b in s.nonzero() {
            if a == b {
                continue;
            }
            let in_b = anns[b].contains(&a);
            let in_a = anns[a].contains(&b);
            let adjacent = gamma.adjacent_elements(a, b);
            if in_a != in_b || in_a != adjacent {
                ann_witness = Some(format!("({}, {})", s.name(a), s.name(b)));
                break 'pairs;
            }
        }
    }
    r.push(
        "adjacency: annihilator membership",
        Outcome::check(ann_witness.is_none(), || ann_witness.clone().unwrap_or_default()),
    );
    let zd = zdg::zero_divisors(s, order).unwrap_or_default();
    let expected: Vec<usize> = s
        .nonzero()
        .filter(|&x| anns[x].iter().any(|&y| y != z))
        .collect();
    r.push(
        "vertices are the elements with a nonzero annihilator",
        Outcome::check(zd == expected && gamma.vertices == zd, || format!("{zd:?} vs {expected:?}")),
    );
    let min = zdg::minimal_nonzero(s, order);
    let min_ok = min.is_ok();
    r.push("Min characterization", Outcome::from_result(min));

    if gamma.vertex_count() < 2 {
        let reason = format!("Γ has {} vertices", gamma.vertex_count());
        for c in [
            "Γ connected",
            "diameter in {1,2,3}",
            "girth in {3,4,inf}",
            "diameter classification",
            "girth classification",
            "self-pair convention immaterial",
        ] {
            r.push(c, Outcome::skip(reason.clone()));
        }
        return;
    }
    r.push(
        "Γ connected",
        Outcome::check(gamma.connected, || "Γ is disconnected".into()),
    );
    r.push(
        "diameter in {1,2,3}",
        Outcome::check(
            matches!(gamma.diameter, Metric::Finite(1..=3)),
            || format!("diameter {}", gamma.diameter),
        ),
    );
    r.push(
        "girth in {3,4,inf}",
        Outcome::check(
            matches!(gamma.girth, Metric::Finite(3) | Metric::Finite(4) | Metric::Infinite),
            || format!("girth {}", gamma.girth),
        ),
    );
    if min_ok {
        r.push(
            "diameter classification",
            Outcome::from_result(zdg::classify_diameter(s, order, &gamma)),
        );
    } else {
        r.push("diameter classification", Outcome::skip("Min check failed"));
    }
    r.push("girth classification", Outcome::from_result(zdg::classify_girth(&gamma)));

    // With x = y allowed, case (iii) would additionally need
    // Ann(x) ≠ {0} for x ∈ Z^×\Min; that always holds for a zero-divisor.
    let min = zdg::minimal_nonzero(s, order).unwrap_or_default();
    let bad_self = gamma
        .vertices
        .iter()
        .copied()
        .filter(|x| !min.contains(x))
        .find(|&x| !anns[x].iter().any(|&y| y != z) || order.meets_only_at(x, x, z));
    r.push(
        "self-pair convention immaterial",
        Outcome::check(bad_self.is_none(), || s.name(bad_self.unwrap_or(z)).to_string()),
    );
}

fn check_zero_free(r: &mut InstanceResult, s: &FiniteSemigroup) {
    let verdict = semigroup::verify_inverse(s);
    let sp = match sigma::sigma(s, &verdict) {
        Ok(sp) => {
            r.push("sigma is a group congruence", Outcome::Pass);
            sp
        }
        Err(e) => {
            r.push("sigma is a group congruence", Outcome::from_result::<()>(Err(e)));
            return;
        }
    };
    if s.order() <= LEAST_CONGRUENCE_MAX_ORDER {
        r.push(
            "sigma is the least group congruence",
            Outcome::from_result(sigma::check_sigma_least(s, &sp)),
        );
    } else {
        r.push(
            "sigma is the least group congruence",
            Outcome::skip(format!("order {} > {LEAST_CONGRUENCE_MAX_ORDER}", s.order())),
        );
    }
    r.push(
        "non-sigma pairs are the edges of Γ(S⁰)",
        Outcome::from_result(sigma::check_non_sigma_adjacency(s, &sp)),
    );
    let decomposition = sigma::verify_structure_theorem(s, &sp);
    let gamma = match decomposition {
        Ok(d) => {
            r.push("Γ(S⁰) is a union of bipartite blocks", Outcome::Pass);
            d.gamma
        }
        Err(e) => {
            r.push("Γ(S⁰) is a union of bipartite blocks", Outcome::from_result::<()>(Err(e)));
            return;
        }
    };
    r.push(
        "diameter from sigma",
        Outcome::from_result(sigma::check_diameter_sigma(s, &sp, &gamma)),
    );
    r.push("girth from sigma", Outcome::from_result(sigma::check_girth_sigma(&sp, &gamma)));
    r.push(
        "diameter-one formulations agree",
        Outcome::check(sigma::diameter_one_formulations_agree(s, &sp), || {
            format!("sigma identity {} but group {}", sp.is_identity, s.is_group())
        }),
    );
    if gamma.vertex_count() >= 2 {
        match sigma::gamma_of_adjoined(s) {
            Ok(adj) => {
                r.push(
                    "diameter classification",
                    Outcome::from_result(zdg::classify_diameter(&adj.s0, &adj.order, &adj.gamma)),
                );
                r.push("girth classification", Outcome::from_result(zdg::classify_girth(&adj.gamma)));
            }
            Err(e) => r.push("diameter classification", Outcome::from_result::<()>(Err(e))),
        }
    } else {
        let reason = format!("Γ(S⁰) has {} vertices", gamma.vertex_count());
        r.push("diameter classification", Outcome::skip(reason.clone()));
        r.push("girth classification", Outcome::skip(reason));
    }
}

pub fn check_digraph(name: &str, g: &DirectedGraph) -> InstanceResult {
    let mut r = InstanceResult::new(name);
    if g.is_trivial() {
        r.push("nontrivial graph", Outcome::Fail { witness: Error::TrivialGraph.to_string() });
        return r;
    }
    let algebra = ig_elements(g, ALGEBRA_MAX_LEN);
    r.push("x x^-1 x = x and inverse laws", Outcome::from_result(check_inverse_laws(&algebra)));
    r.push("associativity (Lmax 3)", Outcome::from_result(check_associativity(&algebra)));

    let exact_len = g.longest_path();
    let (max_len, alpha_len) = match exact_len {
        Some(l) => (l, l),
        None => (ORACLE_MAX_LEN, 3 * ORACLE_MAX_LEN),
    };
    let ig = match build_gamma_ig(g, max_len) {
        Ok(ig) => {
            r.push("every nonzero element is a vertex", Outcome::Pass);
            ig
        }
        Err(e) => {
            r.push("every nonzero element is a vertex", Outcome::from_result::<()>(Err(e)));
            return r;
        }
    };
    r.push(
        "closed-form adjacency matches translates",
        Outcome::from_result(check_adjacency_oracle(&ig, alpha_len)),
    );
    r.push(
        "paths pairwise adjacent",
        Outcome::from_result(check_paths_pairwise_adjacent(&ig)),
    );
    if ig.exact {
        r.push("diameter/girth theorems (exact)", Outcome::from_result(check_exact_theorems(&ig)));
        r.push("Cayley-table agreement", Outcome::from_result(check_cayley_agreement(&ig)));
    } else {
        r.push("diameter/girth theorems (exact)", Outcome::skip("G has a cycle"));
        r.push("Cayley-table agreement", Outcome::skip("G has a cycle"));
    }
    r.push(
        "classification defined",
        Outcome::from_result(classify_ig(g)),
    );
    r
}
