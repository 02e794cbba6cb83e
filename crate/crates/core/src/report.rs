//! Analysis reports for single inputs, serialized as versioned JSON.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Metric;
use crate::graph_inverse::{
    build_gamma_ig, check_adjacency_oracle, check_associativity, check_cayley_agreement, check_exact_theorems,
    check_inverse_laws, check_paths_pairwise_adjacent, classify_ig, count_paths, DirectedGraph, IgGamma,
};
use crate::semigroup::{self, FiniteSemigroup};
use crate::sigma;
use crate::zdg::{self, MetricsBlock, ZdGraph};

pub const SCHEMA: &str = "zdg/1";

/// Cayley-table checks on `I(G)` are cubic in its size; above this they are
/// skipped and noted.
pub const TABLE_CHECK_MAX_ELEMENTS: usize = 400;
/// The translate oracle is skipped when it would enumerate more paths.
pub const ORACLE_MAX_PATHS: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    fn from_result<T>(name: &str, r: &Result<T>) -> Self {
        Self {
            name: name.to_string(),
            pass: r.is_ok(),
            witness: r.as_ref().err().map(Error::to_string),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputInfo {
    pub kind: &'static str,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupStats {
    pub order: usize,
    pub idempotents: usize,
    pub zero: Option<String>,
    /// The graph was built on `S` with a zero adjoined.
    pub zero_adjoined: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub acyclic: bool,
    pub max_len: usize,
    pub elements: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaBlock {
    pub num_classes: usize,
    pub class_sizes: Vec<usize>,
    pub classes: Vec<Vec<String>>,
    pub is_identity: bool,
    pub predicted_diameter: Metric,
    pub predicted_girth: Metric,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub diameter: Metric,
    pub girth: Metric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub input: InputInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<SemigroupStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub digraph: Option<DigraphStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<MetricsBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<SigmaBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prediction: Option<Prediction>,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl AnalysisReport {
    fn new(kind: &'static str, source: &str) -> Self {
        Self {
            schema: SCHEMA,
            input: InputInfo {
                kind,
                source: source.to_string(),
            },
            semigroup: None,
            digraph: None,
            graph: None,
            sigma: None,
            prediction: None,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Every check, including those nested in the sigma block.
    pub fn all_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks
            .iter()
            .chain(self.sigma.iter().flat_map(|s| s.checks.iter()))
    }

    pub fn failed(&self) -> bool {
        self.all_checks().any(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.all_checks().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    fn record<T>(&mut self, name: &str, r: Result<T>) -> Option<T> {
        self.checks.push(CheckResult::from_result(name, &r));
        r.ok()
    }
}

/// A report together with the graph it describes, when one was built.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub report: AnalysisReport,
    pub gamma: Option<ZdGraph>,
}

/// Runs the semigroup pipeline. Axiom failures (non-associative table, not
/// an inverse semigroup) are returned as errors; theorem-check failures are
/// recorded in the report.
pub fn analyze_semigroup(s: &FiniteSemigroup, source: &str) -> Result<Analysis> {
    semigroup::require_associative(s)?;
    let verdict = semigroup::verify_inverse(s);
    verdict.require(s)?;
    let mut report = AnalysisReport::new("semigroup", source);
    let zero_free = s.proper_zero().is_none();
    report.semigroup = Some(SemigroupStats {
        order: s.order(),
        idempotents: s.idempotents().len(),
        zero: s.proper_zero().map(|z| s.name(z).to_string()),
        zero_adjoined: zero_free,
    });
    let Some(order) = report.record("natural order left/right forms", semigroup::natural_order(s, &verdict)) else {
        return Ok(Analysis { report, gamma: None });
    };
    report.record("least element iff absorbing", semigroup::check_least_is_zero(s, &order));

    if zero_free {
        let gamma = analyze_zero_free(&mut report, s, &verdict);
        return Ok(Analysis { report, gamma });
    }
    let Some(gamma) = report.record("adjacency: meet / Ea∩Eb / aE∩bE", zdg::build_gamma(s, &order)) else {
        return Ok(Analysis { report, gamma: None });
    };
    report.record("Min characterization", zdg::minimal_nonzero(s, &order));
    let (diam, girth) = classify(&mut report, s, &order, &gamma);
    report.graph = Some(gamma.metrics(diam.as_ref(), girth.as_ref()));
    Ok(Analysis {
        report,
        gamma: Some(gamma),
    })
}

fn classify(
    report: &mut AnalysisReport,
    s: &FiniteSemigroup,
    order: &semigroup::OrderStructure,
    gamma: &ZdGraph,
) -> (Option<zdg::DiamClass>, Option<zdg::GirthClass>) {
    if gamma.vertex_count() < 2 {
        report.notes.push(format!(
            "Γ has {} vertices; classification skipped",
            gamma.vertex_count()
        ));
        return (None, None);
    }
    let d = report.record("diameter classification", zdg::classify_diameter(s, order, gamma));
    let g = report.record("girth classification", zdg::classify_girth(gamma));
    (d, g)
}

fn analyze_zero_free(
    report: &mut AnalysisReport,
    s: &FiniteSemigroup,
    verdict: &semigroup::InverseVerdict,
) -> Option<ZdGraph> {
    let sp = report.record("sigma is a group congruence", sigma::sigma(s, verdict))?;
    let mut checks = Vec::new();
    if s.order() <= crate::verify::LEAST_CONGRUENCE_MAX_ORDER {
        checks.push(CheckResult::from_result(
            "sigma is the least group congruence",
            &sigma::check_sigma_least(s, &sp),
        ));
    }
    checks.push(CheckResult::from_result(
        "non-sigma pairs are the edges of Γ(S⁰)",
        &sigma::check_non_sigma_adjacency(s, &sp),
    ));
    checks.push(CheckResult::from_result(
        "Γ(S⁰) is a union of bipartite blocks",
        &sigma::verify_structure_theorem(s, &sp),
    ));
    let adjoined = sigma::gamma_of_adjoined(s);
    if let Ok(adj) = &adjoined {
        checks.push(CheckResult::from_result(
            "diameter from sigma",
            &sigma::check_diameter_sigma(s, &sp, &adj.gamma),
        ));
        checks.push(CheckResult::from_result(
            "girth from sigma",
            &sigma::check_girth_sigma(&sp, &adj.gamma),
        ));
    }
    let agree = sigma::diameter_one_formulations_agree(s, &sp);
    checks.push(CheckResult {
        name: "diameter-one formulations agree".into(),
        pass: agree,
        witness: (!agree).then(|| format!("sigma identity {} but group {}", sp.is_identity, s.is_group())),
    });
    let predicted_diameter = sigma::predict_diameter_sigma(s, &sp);
    let predicted_girth = sigma::predict_girth_sigma(&sp);
    report.sigma = Some(SigmaBlock {
        num_classes: sp.num_classes(),
        class_sizes: sp.class_sizes(),
        classes: sp
            .classes
            .iter()
            .map(|c| c.iter().map(|&a| s.name(a).to_string()).collect())
            .collect(),
        is_identity: sp.is_identity,
        predicted_diameter,
        predicted_girth,
        checks,
    });
    report.prediction = Some(Prediction {
        diameter: predicted_diameter,
        girth: predicted_girth,
    });
    let adj = report.record("zero adjoined", adjoined)?;
    let (diam, girth) = classify(report, &adj.s0, &adj.order, &adj.gamma);
    report.graph = Some(adj.gamma.metrics(diam.as_ref(), girth.as_ref()));
    Some(adj.gamma)
}

/// Runs the graph inverse semigroup pipeline at path length `max_len`.
/// A single isolated vertex is rejected with [`Error::TrivialGraph`].
pub fn analyze_digraph(g: &DirectedGraph, max_len: usize, source: &str) -> Result<Analysis> {
    let prediction = classify_ig(g)?;
    let mut report = AnalysisReport::new("digraph", source);
    report.prediction = Some(Prediction {
        diameter: prediction.0,
        girth: prediction.1,
    });
    let built = build_gamma_ig(g, max_len);
    if let Err(Error::TrivialGraph) = built {
        return Err(Error::TrivialGraph);
    }
    report.digraph = Some(DigraphStats {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        acyclic: g.is_acyclic(),
        max_len,
        elements: built.as_ref().map_or(0, |ig| ig.universe.len()),
        exact: built.as_ref().is_ok_and(|ig| ig.exact),
    });
    let Some(ig) = report.record("every nonzero element is a vertex", built) else {
        return Ok(Analysis { report, gamma: None });
    };
    digraph_checks(&mut report, &ig);
    report.graph = Some(ig.gamma.metrics(None, None));
    Ok(Analysis {
        report,
        gamma: Some(ig.gamma),
    })
}

fn digraph_checks(report: &mut AnalysisReport, ig: &IgGamma) {
    let g = &ig.universe.graph;
    report.record("paths pairwise adjacent", check_paths_pairwise_adjacent(ig));
    let alpha_len = if ig.exact { ig.max_len() } else { 3 * ig.max_len() };
    if count_paths(g, alpha_len) <= ORACLE_MAX_PATHS {
        report.record(
            "closed-form adjacency matches translates",
            check_adjacency_oracle(ig, alpha_len),
        );
    } else {
        report
            .notes
            .push(format!("translate oracle skipped: more than {ORACLE_MAX_PATHS} paths"));
    }
    report.record("x x^-1 x = x and inverse laws", check_inverse_laws(&ig.universe));
    let small = ig.universe.len() <= TABLE_CHECK_MAX_ELEMENTS;
    if small {
        report.record("associativity", check_associativity(&ig.universe));
    } else {
        report.notes.push(format!(
            "table checks skipped: {} elements exceed {TABLE_CHECK_MAX_ELEMENTS}",
            ig.universe.len()
        ));
    }
    if ig.exact {
        report.record("diameter/girth theorems (exact)", check_exact_theorems(ig));
        if small {
            report.record("Cayley-table agreement", check_cayley_agreement(ig));
        }
    } else {
        report.notes.push(format!(
            "G has a directed cycle; metrics describe elements with paths of length at most {}",
            ig.max_len()
        ));
    }
}
