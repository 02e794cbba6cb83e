//! The least group congruence `σ` on zero-free inverse semigroups, and the
//! shape of `Γ(S⁰)` it determines.
//!
//! `a σ b` iff `ea = fb` for idempotents `e, f`, i.e. iff the left
//! idempotent translates `Ea` and `Eb` intersect. For `S` without zero, two
//! distinct elements are adjacent in `Γ(S⁰)` exactly when they lie in
//! different classes, so `Γ(S⁰)` is a union of complete bipartite blocks.

use serde::Serialize;

use crate::error::{Error, Result, TheoremViolation};
use crate::graph::Metric;
use crate::semigroup::{adjoin_zero, natural_order, verify_inverse, FiniteSemigroup, InverseVerdict, OrderStructure};
use crate::zdg::{build_gamma, ZdGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaPartition {
    pub class_of: Vec<usize>,
    /// Classes ordered by least member; members sorted.
    pub classes: Vec<Vec<usize>>,
    pub is_identity: bool,
}

impl SigmaPartition {
    pub fn from_class_of(class_of: Vec<usize>) -> Self {
        let count = class_of.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); count];
        for (a, &c) in class_of.iter().enumerate() {
            classes[c].push(a);
        }
        let is_identity = classes.iter().all(|c| c.len() == 1);
        Self {
            class_of,
            classes,
            is_identity,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Computes `σ`. Refuses semigroups with a zero; see [`sigma_allow_zero`].
pub fn sigma(s: &FiniteSemigroup, v: &InverseVerdict) -> Result<SigmaPartition> {
    if s.proper_zero().is_some() {
        return Err(Error::HasZero);
    }
    sigma_allow_zero(s, v)
}

/// `σ` without the zero-free precondition. With a zero present every pair is
/// related and the result is the universal relation.
pub fn sigma_allow_zero(s: &FiniteSemigroup, v: &InverseVerdict) -> Result<SigmaPartition> {
    v.require(s)?;
    let n = s.order();
    let translates: Vec<Vec<bool>> = (0..n)
        .map(|a| {
            let mut hit = vec![false; n];
            for &e in s.idempotents() {
                hit[s.mul(e, a)] = true;
            }
            hit
        })
        .collect();
    let related = |a: usize, b: usize| translates[a].iter().zip(&translates[b]).any(|(&x, &y)| x && y);

    // Assign classes by least representative, then confirm the relation is
    // an equivalence on the nose.
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for a in 0..n {
        match reps.iter().position(|&r| related(r, a)) {
            Some(c) => class_of[a] = c,
            None => {
                class_of[a] = reps.len();
                reps.push(a);
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if related(a, b) != (class_of[a] == class_of[b]) {
                return Err(TheoremViolation::new(
                    "sigma is an equivalence",
                    format!("pair ({}, {})", s.name(a), s.name(b)),
                )
                .into());
            }
        }
    }
    let sp = SigmaPartition::from_class_of(class_of);
    if let Err(w) = check_group_congruence(s, &sp.class_of) {
        return Err(TheoremViolation::new("sigma is a group congruence", w).into());
    }
    Ok(sp)
}

/// Compatibility of a partition with multiplication on both sides.
pub fn is_congruence(s: &FiniteSemigroup, class_of: &[usize]) -> std::result::Result<(), String> {
    let n = s.order();
    for a in 0..n {
        for b in (a + 1)..n {
            if class_of[a] != class_of[b] {
                continue;
            }
            for c in 0..n {
                if class_of[s.mul(c, a)] != class_of[s.mul(c, b)] {
                    return Err(format!("{} ~ {} but not after left multiplication by {}", s.name(a), s.name(b), s.name(c)));
                }
                if class_of[s.mul(a, c)] != class_of[s.mul(b, c)] {
                    return Err(format!("{} ~ {} but not after right multiplication by {}", s.name(a), s.name(b), s.name(c)));
                }
            }
        }
    }
    Ok(())
}

/// Checks that the partition is a congruence whose quotient table is a
/// group.
pub fn check_group_congruence(s: &FiniteSemigroup, class_of: &[usize]) -> std::result::Result<(), String> {
    is_congruence(s, class_of)?;
    let k = class_of.iter().copied().max().map_or(0, |m| m + 1);
    let mut rep = vec![usize::MAX; k];
    for (a, &c) in class_of.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = a;
        }
    }
    let names: Vec<String> = (0..k).map(|c| format!("[{}]", s.name(rep[c]))).collect();
    let quotient = FiniteSemigroup::from_fn(names, |x, y| class_of[s.mul(rep[x], rep[y])]);
    if quotient.is_group() {
        Ok(())
    } else {
        Err(format!("quotient by {k} classes is not a group"))
    }
}

/// Every partition of `S` that is a congruence with group quotient, by
/// exhaustive search over restricted growth strings. Capped at order 6.
pub fn group_congruences(s: &FiniteSemigroup) -> Result<Vec<Vec<usize>>> {
    const CAP: usize = 6;
    let n = s.order();
    if n > CAP {
        return Err(Error::Unsupported(format!("congruence enumeration is capped at order {CAP}")));
    }
    let mut out = Vec::new();
    let mut rgs = Vec::with_capacity(n);
    enumerate_partitions(s, &mut rgs, 0, &mut out);
    Ok(out)
}

fn enumerate_partitions(s: &FiniteSemigroup, rgs: &mut Vec<usize>, max_used: usize, out: &mut Vec<Vec<usize>>) {
    let n = s.order();
    if rgs.len() == n {
        if check_group_congruence(s, rgs).is_ok() {
            out.push(rgs.clone());
        }
        return;
    }
    let limit = if rgs.is_empty() { 0 } else { max_used + 1 };
    for c in 0..=limit {
        rgs.push(c);
        // Prune: products among the assigned prefix must already respect
        // the partial partition.
        if prefix_compatible(s, rgs) {
            enumerate_partitions(s, rgs, max_used.max(c), out);
        }
        rgs.pop();
    }
}

fn prefix_compatible(s: &FiniteSemigroup, rgs: &[usize]) -> bool {
    let m = rgs.len();
    let last = m - 1;
    for a in 0..last {
        if rgs[a] != rgs[last] {
            continue;
        }
        for c in 0..m {
            let pairs = [(s.mul(c, a), s.mul(c, last)), (s.mul(a, c), s.mul(last, c))];
            for (x, y) in pairs {
                if x < m && y < m && rgs[x] != rgs[y] {
                    return false;
                }
            }
        }
    }
    true
}

/// `S⁰`, its order, and `Γ(S⁰)`.
pub struct AdjoinedGamma {
    pub s0: FiniteSemigroup,
    pub order: OrderStructure,
    pub gamma: ZdGraph,
}

pub fn gamma_of_adjoined(s: &FiniteSemigroup) -> Result<AdjoinedGamma> {
    let s0 = adjoin_zero(s)?;
    let order = natural_order(&s0, &verify_inverse(&s0))?;
    let gamma = build_gamma(&s0, &order)?;
    Ok(AdjoinedGamma { s0, order, gamma })
}

/// For all distinct `a, b`: `(a, b) ∉ σ` ⇔ adjacent in `Γ(S⁰)` ⇔
/// `E⁰a ∩ E⁰b = {0}`. Returns the number of pairs checked.
pub fn check_non_sigma_adjacency(s: &FiniteSemigroup, sp: &SigmaPartition) -> Result<usize> {
    let AdjoinedGamma { s0, gamma, .. } = gamma_of_adjoined(s)?;
    let z = s0.zero().ok_or(Error::MissingZero)?;
    let n = s.order();
    let translate = |a: usize| {
        let mut hit = vec![false; s0.order()];
        for &e in s0.idempotents() {
            hit[s0.mul(e, a)] = true;
        }
        hit
    };
    let translates: Vec<Vec<bool>> = (0..n).map(translate).collect();
    let mut checked = 0;
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let not_related = !sp.related(a, b);
            let adjacent = gamma.adjacent_elements(a, b);
            let trivial_meet = translates[a]
                .iter()
                .zip(&translates[b])
                .enumerate()
                .all(|(c, (&x, &y))| !(x && y) || c == z);
            if not_related != adjacent || adjacent != trivial_meet {
                return Err(TheoremViolation::new(
                    "non-sigma pairs are exactly the adjacent pairs of Γ(S⁰)",
                    format!(
                        "({}, {}): not_sigma={not_related} adjacent={adjacent} E0a∩E0b={{0}}:{trivial_meet}",
                        s.name(a),
                        s.name(b)
                    ),
                )
                .into());
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// One complete bipartite block between two σ-classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub left: usize,
    pub right: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteDecomposition {
    pub blocks: Vec<Block>,
    pub gamma: ZdGraph,
}

/// Checks that `Γ(S⁰)` is the union of `K_{C,D}` over distinct classes and
/// that its vertex set is all of `S` (two or more classes) or empty (one
/// class).
pub fn verify_structure_theorem(s: &FiniteSemigroup, sp: &SigmaPartition) -> Result<BipartiteDecomposition> {
    let AdjoinedGamma { gamma, .. } = gamma_of_adjoined(s)?;
    let n = s.order();
    let expected_vertices: Vec<usize> = if sp.num_classes() >= 2 { (0..n).collect() } else { Vec::new() };
    if gamma.vertices != expected_vertices {
        return Err(TheoremViolation::new(
            "vertex set of Γ(S⁰) from |S/σ|",
            format!("{} classes but {} vertices", sp.num_classes(), gamma.vertex_count()),
        )
        .into());
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if gamma.adjacent_elements(a, b) == sp.related(a, b) {
                return Err(TheoremViolation::new(
                    "Γ(S⁰) is the union of cross-class complete bipartite blocks",
                    format!("pair ({}, {})", s.name(a), s.name(b)),
                )
                .into());
            }
        }
    }
    let k = sp.num_classes();
    let mut blocks = Vec::new();
    for left in 0..k {
        for right in (left + 1)..k {
            blocks.push(Block {
                left,
                right,
                edges: sp.classes[left].len() * sp.classes[right].len(),
            });
        }
    }
    let total: usize = blocks.iter().map(|b| b.edges).sum();
    if total != gamma.edge_count() {
        return Err(TheoremViolation::new(
            "Γ(S⁰) is the union of cross-class complete bipartite blocks",
            format!("blocks hold {total} edges, graph has {}", gamma.edge_count()),
        )
        .into());
    }
    Ok(BipartiteDecomposition { blocks, gamma })
}

/// 1 when `|S| > 1` and `σ` is the identity, 2 when there are at least two
/// classes and `σ` is not the identity, undefined with a single class.
pub fn predict_diameter_sigma(s: &FiniteSemigroup, sp: &SigmaPartition) -> Metric {
    if sp.num_classes() < 2 {
        Metric::Undefined
    } else if s.order() > 1 && sp.is_identity {
        Metric::Finite(1)
    } else {
        Metric::Finite(2)
    }
}

/// Infinite for two classes one of which is a singleton, 4 for two classes
/// of size at least two, 3 for three or more classes.
pub fn predict_girth_sigma(sp: &SigmaPartition) -> Metric {
    match sp.num_classes() {
        0 | 1 => Metric::Undefined,
        2 if sp.classes.iter().any(|c| c.len() == 1) => Metric::Infinite,
        2 => Metric::Finite(4),
        _ => Metric::Finite(3),
    }
}

pub fn check_diameter_sigma(s: &FiniteSemigroup, sp: &SigmaPartition, gamma: &ZdGraph) -> Result<Metric> {
    let predicted = predict_diameter_sigma(s, sp);
    if predicted != gamma.diameter {
        return Err(TheoremViolation::new(
            "diameter of Γ(S⁰) from sigma",
            format!("predicted {predicted}, computed {}", gamma.diameter),
        )
        .into());
    }
    Ok(predicted)
}

pub fn check_girth_sigma(sp: &SigmaPartition, gamma: &ZdGraph) -> Result<Metric> {
    let predicted = predict_girth_sigma(sp);
    if predicted != gamma.girth {
        return Err(TheoremViolation::new(
            "girth of Γ(S⁰) from sigma",
            format!("predicted {predicted}, computed {}", gamma.girth),
        )
        .into());
    }
    Ok(predicted)
}

/// `σ` is contained in every group congruence (orders ≤ 6). Returns the
/// number of group congruences found.
pub fn check_sigma_least(s: &FiniteSemigroup, sp: &SigmaPartition) -> Result<usize> {
    let all = group_congruences(s)?;
    for rho in &all {
        for a in 0..s.order() {
            for b in 0..s.order() {
                if sp.related(a, b) && rho[a] != rho[b] {
                    return Err(TheoremViolation::new(
                        "sigma is the least group congruence",
                        format!("({}, {}) in sigma but separated by {:?}", s.name(a), s.name(b), rho),
                    )
                    .into());
                }
            }
        }
    }
    if !all.contains(&sp.class_of) {
        return Err(TheoremViolation::new(
            "sigma is the least group congruence",
            "sigma itself missing from the enumerated group congruences",
        )
        .into());
    }
    Ok(all.len())
}

/// The two readings of the diameter-1 condition: "`|S| > 1` and `σ` is the
/// identity" versus "`S` is a non-trivial group". Returns whether they
/// agree on `s`.
pub fn diameter_one_formulations_agree(s: &FiniteSemigroup, sp: &SigmaPartition) -> bool {
    let by_sigma = s.order() > 1 && sp.is_identity;
    let by_group = s.order() > 1 && s.is_group();
    by_sigma == by_group
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn sig(s: &FiniteSemigroup) -> SigmaPartition {
        sigma(s, &verify_inverse(s)).unwrap()
    }

    fn class_names(s: &FiniteSemigroup, sp: &SigmaPartition) -> Vec<Vec<String>> {
        sp.classes
            .iter()
            .map(|c| c.iter().map(|&a| s.name(a).to_string()).collect())
            .collect()
    }

    #[test]
    fn z2_sigma_is_identity() {
        let z2 = generators::cyclic_group(2);
        let sp = sig(&z2);
        assert!(sp.is_identity);
        assert_eq!(sp.num_classes(), 2);
        assert_eq!(check_non_sigma_adjacency(&z2, &sp).unwrap(), 2);
    }

    #[test]
    fn clifford_c1_classes() {
        let c1 = generators::clifford_c1();
        let sp = sig(&c1);
        assert_eq!(class_names(&c1, &sp), [vec!["a0", "b0"], vec!["b1"]]);
        let AdjoinedGamma { gamma, .. } = gamma_of_adjoined(&c1).unwrap();
        // e σ f and they are not adjacent
        assert!(!gamma.adjacent_elements(0, 1));
        check_non_sigma_adjacency(&c1, &sp).unwrap();
        let dec = verify_structure_theorem(&c1, &sp).unwrap();
        assert_eq!(dec.blocks, [Block { left: 0, right: 1, edges: 2 }]);
        assert!(dec.gamma.graph.is_star());
        assert_eq!(check_diameter_sigma(&c1, &sp, &dec.gamma).unwrap(), Metric::Finite(2));
        assert_eq!(check_girth_sigma(&sp, &dec.gamma).unwrap(), Metric::Infinite);
    }

    #[test]
    fn z2_times_chain_classes() {
        let s = generators::z2_times_chain2();
        let sp = sig(&s);
        assert_eq!(class_names(&s, &sp), [vec!["a0", "b0"], vec!["a1", "b1"]]);
        let dec = verify_structure_theorem(&s, &sp).unwrap();
        assert_eq!(dec.gamma.edge_count(), 4);
        assert_eq!(predict_diameter_sigma(&s, &sp), Metric::Finite(2));
        assert_eq!(predict_girth_sigma(&sp), Metric::Finite(4));
        check_girth_sigma(&sp, &dec.gamma).unwrap();
    }

    #[test]
    fn z3_and_trivial_group() {
        let z3 = generators::cyclic_group(3);
        let sp = sig(&z3);
        assert_eq!(predict_diameter_sigma(&z3, &sp), Metric::Finite(1));
        assert_eq!(predict_girth_sigma(&sp), Metric::Finite(3));

        let one = generators::cyclic_group(1);
        let sp1 = sig(&one);
        assert_eq!(sp1.num_classes(), 1);
        assert_eq!(predict_diameter_sigma(&one, &sp1), Metric::Undefined);
        let dec = verify_structure_theorem(&one, &sp1).unwrap();
        assert_eq!(dec.gamma.vertex_count(), 0);
        assert!(dec.blocks.is_empty());
    }

    #[test]
    fn refuses_semigroups_with_zero() {
        let b2 = generators::b2();
        let v = verify_inverse(&b2);
        assert_eq!(sigma(&b2, &v), Err(Error::HasZero));
        let universal = sigma_allow_zero(&b2, &v).unwrap();
        assert_eq!(universal.num_classes(), 1);
    }

    #[test]
    fn leastness_on_small_orders() {
        for s in [
            generators::cyclic_group(4),
            generators::cyclic_group(6),
            generators::symmetric_group_s3(),
            generators::clifford_c1(),
            generators::z2_times_chain2(),
        ] {
            let sp = sig(&s);
            assert!(check_sigma_least(&s, &sp).unwrap() >= 1);
        }
        // Z6 has one group congruence per subgroup: 4.
        assert_eq!(group_congruences(&generators::cyclic_group(6)).unwrap().len(), 4);
        // S3 has three normal subgroups.
        assert_eq!(group_congruences(&generators::symmetric_group_s3()).unwrap().len(), 3);
    }
}
