use super::{DirectedGraph, GPath};

/// An element of `I(G)`: the zero, or `pq⁻¹` with `r(p) = r(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IgElement {
    Zero,
    Pair { p: GPath, q: GPath },
}

impl IgElement {
    /// `pq⁻¹`; `None` when the ranges differ.
    pub fn pair(p: GPath, q: GPath) -> Option<Self> {
        (p.range() == q.range()).then_some(Self::Pair { p, q })
    }

    /// The path `p` viewed as `p · r(p)⁻¹`.
    pub fn path(p: GPath) -> Self {
        let q = GPath::vertex(p.range());
        Self::Pair { p, q }
    }

    /// `pp⁻¹`.
    pub fn idempotent(p: GPath) -> Self {
        Self::Pair { q: p.clone(), p }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Zero)
    }

    pub fn parts(&self) -> Option<(&GPath, &GPath)> {
        match self {
            Self::Zero => None,
            Self::Pair { p, q } => Some((p, q)),
        }
    }

    /// Length of the longer of `p` and `q`; 0 for the zero.
    pub fn max_len(&self) -> usize {
        self.parts().map_or(0, |(p, q)| p.len().max(q.len()))
    }

    pub fn is_idempotent(&self) -> bool {
        match self {
            Self::Zero => true,
            Self::Pair { p, q } => p == q,
        }
    }

    /// Element of `Path(G) ∪ Path(G)⁻¹`: `p` or `q` is empty.
    pub fn is_path_or_inverse_path(&self) -> bool {
        self.parts().is_some_and(|(p, q)| p.is_empty() || q.is_empty())
    }

    /// `e`, `e^-1`, `ee^-1`, `w1`, `e(fg)^-1`, ...
    pub fn label(&self, g: &DirectedGraph) -> String {
        let Self::Pair { p, q } = self else {
            return "0".to_string();
        };
        match (p.is_empty(), q.is_empty()) {
            (true, true) => p.label(g),
            (false, true) => p.label(g),
            (_, false) => {
                let q_label = q.label(g);
                let inv = if q.len() == 1 {
                    format!("{q_label}^-1")
                } else {
                    format!("({q_label})^-1")
                };
                if p.is_empty() {
                    inv
                } else {
                    format!("{}{inv}", p.label(g))
                }
            }
        }
    }
}

/// The product in `I(G)`:
/// `(pq⁻¹)(rs⁻¹) = p t s⁻¹` if `r = qt`, `p (st)⁻¹` if `q = rt`, else `0`.
pub fn ig_multiply(x: &IgElement, y: &IgElement) -> IgElement {
    let (Some((p, q)), Some((r, s))) = (x.parts(), y.parts()) else {
        return IgElement::Zero;
    };
    if let Some(t) = r.strip_prefix(q) {
        let pt = p.concat(&t).expect("r(p) = r(q) = s(t)");
        return IgElement::Pair { p: pt, q: s.clone() };
    }
    if let Some(t) = q.strip_prefix(r) {
        let st = s.concat(&t).expect("r(s) = r(r) = s(t)");
        return IgElement::Pair { p: p.clone(), q: st };
    }
    IgElement::Zero
}

/// `(pq⁻¹)⁻¹ = qp⁻¹`.
pub fn ig_inverse(x: &IgElement) -> IgElement {
    match x {
        IgElement::Zero => IgElement::Zero,
        IgElement::Pair { p, q } => IgElement::Pair { p: q.clone(), q: p.clone() },
    }
}

/// Natural order in closed form: `pq⁻¹ ≤ rs⁻¹` iff `p = rt` and `q = st`
/// for one path `t`.
pub fn ig_leq(x: &IgElement, y: &IgElement) -> bool {
    match (x.parts(), y.parts()) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some((p, q)), Some((r, s))) => match (p.strip_prefix(r), q.strip_prefix(s)) {
            (Some(t1), Some(t2)) => t1 == t2,
            _ => false,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_inverse::parse_graph;

    fn g3() -> DirectedGraph {
        parse_graph("vertices: w1 w2\nedges:\ne: w1 -> w2\n").unwrap()
    }

    #[test]
    fn g3_products() {
        let g = g3();
        let w1 = IgElement::path(GPath::vertex(0));
        let w2 = IgElement::path(GPath::vertex(1));
        let e = IgElement::path(GPath::from_edges(&g, vec![0]).unwrap());
        let e_inv = ig_inverse(&e);
        let ee = IgElement::idempotent(GPath::from_edges(&g, vec![0]).unwrap());
        assert_eq!(ig_multiply(&e_inv, &e), w2);
        assert_eq!(ig_multiply(&e, &e_inv), ee);
        assert_eq!(ig_multiply(&w1, &w2), IgElement::Zero);
        assert_eq!(ig_multiply(&ee, &ee), ee);
        assert_eq!(ig_multiply(&w1, &e), e);
        assert_eq!(ig_multiply(&e, &w1), IgElement::Zero);
        assert_eq!(ig_multiply(&IgElement::Zero, &e), IgElement::Zero);
        assert_eq!(ig_inverse(&ee), ee);
        assert_eq!(e_inv.label(&g), "e^-1");
        assert_eq!(ee.label(&g), "ee^-1");
        assert_eq!(w1.label(&g), "w1");
        assert!(ig_leq(&ee, &w1));
        assert!(!ig_leq(&w1, &ee));
        assert!(!ig_leq(&e, &e_inv));
    }

    #[test]
    fn labels_for_longer_paths() {
        let g = parse_graph("vertices: a b c\nedges:\nx: a -> b\ny: b -> c\nz: a -> c\n").unwrap();
        let xy = GPath::from_edges(&g, vec![0, 1]).unwrap();
        let z = GPath::from_edges(&g, vec![2]).unwrap();
        assert_eq!(IgElement::pair(z.clone(), xy.clone()).unwrap().label(&g), "z(xy)^-1");
        assert_eq!(IgElement::pair(xy, z).unwrap().label(&g), "xyz^-1");
        assert!(IgElement::pair(GPath::vertex(0), GPath::vertex(1)).is_none());
    }
}
