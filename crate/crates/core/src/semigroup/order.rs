use super::FiniteSemigroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseViolation {
    /// No `b` with `a = aba` and `b = bab`.
    NoInverse(usize),
    /// Two idempotents with `ef != fe`.
    NonCommutingIdempotents(usize, usize),
}

impl InverseViolation {
    pub fn describe(&self, s: &FiniteSemigroup) -> String {
        match *self {
            Self::NoInverse(a) => format!("element {} has no inverse", s.name(a)),
            Self::NonCommutingIdempotents(e, f) => {
                format!("idempotents {} and {} do not commute", s.name(e), s.name(f))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseVerdict {
    pub is_inverse: bool,
    pub witness: Option<InverseViolation>,
    /// `inverse_map[a]` is the unique inverse of `a`; empty unless `is_inverse`.
    pub inverse_map: Vec<usize>,
}

impl InverseVerdict {
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse_map[a]
    }

    pub fn require(&self, s: &FiniteSemigroup) -> Result<()> {
        match self.witness {
            Some(w) if !self.is_inverse => Err(Error::NotInverse(w.describe(s))),
            _ => Ok(()),
        }
    }
}

/// Decides whether an (associative) table is an inverse semigroup using the
/// characterization "regular with commuting idempotents".
pub fn verify_inverse(s: &FiniteSemigroup) -> InverseVerdict {
    let n = s.order();
    let fail = |w| InverseVerdict {
        is_inverse: false,
        witness: Some(w),
        inverse_map: Vec::new(),
    };
    let mut inverse_map = Vec::with_capacity(n);
    for a in 0..n {
        let found = (0..n).find(|&b| s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b);
        match found {
            Some(b) => inverse_map.push(b),
            None => return fail(InverseViolation::NoInverse(a)),
        }
    }
    let es = s.idempotents();
    for (i, &e) in es.iter().enumerate() {
        for &f in &es[i + 1..] {
            if s.mul(e, f) != s.mul(f, e) {
                return fail(InverseViolation::NonCommutingIdempotents(e, f));
            }
        }
    }
    InverseVerdict {
        is_inverse: true,
        witness: None,
        inverse_map,
    }
}

/// The natural partial order of an inverse semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderStructure {
    n: usize,
    leq: Vec<bool>,
    down_sets: Vec<Vec<usize>>,
}

impl OrderStructure {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    /// `ω(a) = {x : x ≤ a}`, sorted.
    pub fn down_set(&self, a: usize) -> &[usize] {
        &self.down_sets[a]
    }

    /// `ω(a, b) = ω(a) ∩ ω(b)`, sorted.
    pub fn meet_set(&self, a: usize, b: usize) -> Vec<usize> {
        self.down_sets[a]
            .iter()
            .copied()
            .filter(|&c| self.leq(c, b))
            .collect()
    }

    /// True when `ω(a, b) = {zero}`.
    pub fn meets_only_at(&self, a: usize, b: usize, zero: usize) -> bool {
        let mut saw_zero = false;
        for &c in &self.down_sets[a] {
            if self.leq(c, b) {
                if c != zero {
                    return false;
                }
                saw_zero = true;
            }
        }
        saw_zero
    }

    /// The least element, if the order has one.
    pub fn least_element(&self) -> Option<usize> {
        (0..self.n).find(|&a| (0..self.n).all(|b| self.leq(a, b)))
    }

    /// Reflexivity, antisymmetry and transitivity, checked exhaustively.
    /// Returns the first failing triple (or pair, padded with its first
    /// entry).
    pub fn check_partial_order(&self) -> std::result::Result<(), (usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            if !self.leq(a, a) {
                return Err((a, a, a));
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err((a, b, a));
                }
                if !self.leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.leq(b, c) && !self.leq(a, c) {
                        return Err((a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    fn from_matrix(n: usize, leq: Vec<bool>) -> Self {
        let down_sets = (0..n)
            .map(|b| (0..n).filter(|&a| leq[a * n + b]).collect())
            .collect();
        Self { n, leq, down_sets }
    }
}

/// `a ≤ b` iff `a = eb` for an idempotent `e`. The right-handed form
/// `a = bf` is computed as well and the two relations must coincide.
pub fn natural_order(s: &FiniteSemigroup, verdict: &InverseVerdict) -> Result<OrderStructure> {
    verdict.require(s)?;
    if !verdict.is_inverse {
        return Err(Error::NotInverse("verdict is negative".into()));
    }
    let n = s.order();
    let mut left = vec![false; n * n];
    let mut right = vec![false; n * n];
    for b in 0..n {
        for &e in s.idempotents() {
            left[s.mul(e, b) * n + b] = true;
            right[s.mul(b, e) * n + b] = true;
        }
    }
    if let Some(pos) = (0..n * n).find(|&i| left[i] != right[i]) {
        return Err(crate::error::TheoremViolation::new(
            "natural order left/right forms",
            format!(
                "Eb and bE disagree on ({}, {})",
                s.name(pos / n),
                s.name(pos % n)
            ),
        )
        .into());
    }
    Ok(OrderStructure::from_matrix(n, left))
}

/// An element is the least element of the natural order iff it is
/// absorbing. Both directions are checked against [`find_zero`].
///
/// [`find_zero`]: crate::semigroup::find_zero
pub fn check_least_is_zero(s: &FiniteSemigroup, ord: &OrderStructure) -> Result<()> {
    let least = ord.least_element();
    let zero = crate::semigroup::find_zero(s);
    if least != zero {
        let show = |x: Option<usize>| x.map_or("none".to_string(), |a| s.name(a).to_string());
        return Err(crate::error::TheoremViolation::new(
            "least element of the natural order is the zero",
            format!("least {}, absorbing {}", show(least), show(zero)),
        )
        .into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::semigroup::FiniteSemigroup;

    fn idx(s: &FiniteSemigroup, names: &[&str]) -> Vec<usize> {
        let mut v: Vec<usize> = names.iter().map(|n| s.index_of(n).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn b2_inverse_map() {
        let b2 = generators::b2();
        let v = verify_inverse(&b2);
        assert!(v.is_inverse);
        let name_of_inv = |x: &str| b2.name(v.inverse(b2.index_of(x).unwrap())).to_string();
        assert_eq!(name_of_inv("a"), "b");
        assert_eq!(name_of_inv("b"), "a");
        assert_eq!(name_of_inv("e"), "e");
        assert_eq!(name_of_inv("0"), "0");
    }

    #[test]
    fn left_zero_semigroup_is_not_inverse() {
        let lz = FiniteSemigroup::from_fn(vec!["x".into(), "y".into()], |a, _| a);
        let v = verify_inverse(&lz);
        assert!(!v.is_inverse);
        assert_eq!(v.witness, Some(InverseViolation::NonCommutingIdempotents(0, 1)));
        assert!(natural_order(&lz, &v).is_err());
    }

    #[test]
    fn group_inverse_map_is_group_inverse() {
        let z5 = generators::cyclic_group(5);
        let v = verify_inverse(&z5);
        assert!(v.is_inverse);
        for a in 0..5 {
            assert_eq!(z5.mul(a, v.inverse(a)), 0);
        }
    }

    #[test]
    fn b2_down_sets_and_meets() {
        let b2 = generators::b2();
        let ord = natural_order(&b2, &verify_inverse(&b2)).unwrap();
        let a = b2.index_of("a").unwrap();
        let b = b2.index_of("b").unwrap();
        let e = b2.index_of("e").unwrap();
        assert_eq!(ord.down_set(a), idx(&b2, &["0", "a"]));
        assert_eq!(ord.down_set(e), idx(&b2, &["0", "e"]));
        assert_eq!(ord.meet_set(a, b), idx(&b2, &["0"]));
        assert_eq!(ord.meet_set(e, a), idx(&b2, &["0"]));
        assert_eq!(ord.meet_set(a, a), ord.down_set(a));
        assert!(ord.meets_only_at(a, b, 0));
        assert!(!ord.meets_only_at(a, a, 0));
        assert_eq!(ord.least_element(), Some(0));
        check_least_is_zero(&b2, &ord).unwrap();
        assert_eq!(ord.check_partial_order(), Ok(()));
    }

    #[test]
    fn group_order_is_identity() {
        let s3 = generators::symmetric_group_s3();
        let ord = natural_order(&s3, &verify_inverse(&s3)).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(ord.leq(a, b), a == b);
            }
        }
        assert_eq!(ord.least_element(), None);
    }
}
