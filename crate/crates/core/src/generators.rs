//! Named families of semigroups and digraphs used as fixtures and corpora.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph_inverse::DirectedGraph;
use crate::semigroup::FiniteSemigroup;

/// The five-element Brandt semigroup `{0, e, f, a, b}` with `e = ab`,
/// `f = ba`, `a² = b² = 0`.
pub fn b2() -> FiniteSemigroup {
    const NAMES: [&str; 5] = ["0", "e", "f", "a", "b"];
    const TABLE: [[usize; 5]; 5] = [
        [0, 0, 0, 0, 0],
        [0, 1, 0, 3, 0],
        [0, 0, 2, 0, 4],
        [0, 0, 3, 0, 1],
        [0, 4, 0, 2, 0],
    ];
    FiniteSemigroup::from_fn(NAMES.map(String::from).to_vec(), |a, b| TABLE[a][b])
}

/// The cyclic group of order `n` with elements `1, g, g^2, ...`.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    assert!(n >= 1, "cyclic group needs a positive order");
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    FiniteSemigroup::from_fn(names, |a, b| (a + b) % n)
}

/// The symmetric group on three points; elements are one-line notations and
/// products compose left to right.
pub fn symmetric_group_s3() -> FiniteSemigroup {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let names = perms
        .iter()
        .map(|p| p.iter().map(|x| char::from(b'1' + *x as u8)).collect())
        .collect();
    FiniteSemigroup::from_fn(names, |a, b| {
        let (p, q) = (perms[a], perms[b]);
        let composed = [q[p[0]], q[p[1]], q[p[2]]];
        perms.iter().position(|r| *r == composed).unwrap()
    })
}

/// A partial injection on `{1, ..., n}`; `map[i]` is the image of `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialInjection {
    map: Vec<Option<u8>>,
}

impl PartialInjection {
    pub fn empty(n: usize) -> Self {
        Self { map: vec![None; n] }
    }

    pub fn rank(&self) -> usize {
        self.map.iter().flatten().count()
    }

    /// `(x)(a·b) = ((x)a)b`.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            map: self
                .map
                .iter()
                .map(|img| img.and_then(|y| other.map[y as usize]))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![None; self.map.len()];
        for (x, img) in self.map.iter().enumerate() {
            if let Some(y) = img {
                map[*y as usize] = Some(x as u8);
            }
        }
        Self { map }
    }

    fn pairs(&self) -> Vec<(u8, u8)> {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(x, img)| img.map(|y| (x as u8, y)))
            .collect()
    }

    fn sort_key(&self) -> (usize, Vec<(u8, u8)>) {
        (self.rank(), self.pairs())
    }

    /// Rendered as `[1>2,3>1]`; the empty map is `[]`.
    pub fn name(&self) -> String {
        let body: Vec<String> = self
            .pairs()
            .iter()
            .map(|(x, y)| format!("{}>{}", x + 1, y + 1))
            .collect();
        format!("[{}]", body.join(","))
    }
}

/// Every partial injection on `n` points in canonical order: by rank, then
/// lexicographically by the sorted list of `(point, image)` pairs.
pub fn partial_injections(n: usize) -> Vec<PartialInjection> {
    fn extend(i: usize, n: usize, used: &mut Vec<bool>, cur: &mut Vec<Option<u8>>, out: &mut Vec<PartialInjection>) {
        if i == n {
            out.push(PartialInjection { map: cur.clone() });
            return;
        }
        cur.push(None);
        extend(i + 1, n, used, cur, out);
        cur.pop();
        for y in 0..n {
            if !used[y] {
                used[y] = true;
                cur.push(Some(y as u8));
                extend(i + 1, n, used, cur, out);
                cur.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(0, n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out.sort_by_key(PartialInjection::sort_key);
    out
}

/// Cayley table of a set of partial injections closed under composition,
/// listed in canonical order.
pub fn injections_semigroup(mut maps: Vec<PartialInjection>) -> FiniteSemigroup {
    maps.sort_by_key(PartialInjection::sort_key);
    maps.dedup();
    let names = maps.iter().map(PartialInjection::name).collect();
    FiniteSemigroup::from_fn(names, |a, b| {
        let c = maps[a].then(&maps[b]);
        maps.iter()
            .position(|m| *m == c)
            .expect("set of maps is not closed under composition")
    })
}

/// The symmetric inverse monoid `I_n` for `n ≤ 3`.
pub fn symmetric_inverse_monoid(n: usize) -> Result<FiniteSemigroup> {
    if !(1..=3).contains(&n) {
        return Err(Error::Unsupported(format!("I_{n}: only 1 <= n <= 3 is generated")));
    }
    Ok(injections_semigroup(partial_injections(n)))
}

/// Closure of `generators ∪ {∅}` under composition and inversion.
pub fn inverse_closure(n: usize, generators: &[PartialInjection]) -> FiniteSemigroup {
    let mut set: BTreeSet<(usize, Vec<(u8, u8)>)> = BTreeSet::new();
    let mut elems: Vec<PartialInjection> = Vec::new();
    let mut push = |m: PartialInjection, elems: &mut Vec<PartialInjection>| {
        if set.insert(m.sort_key()) {
            elems.push(m);
        }
    };
    push(PartialInjection::empty(n), &mut elems);
    for g in generators {
        push(g.clone(), &mut elems);
        push(g.inverse(), &mut elems);
    }
    let mut done = 0;
    while done < elems.len() {
        let len = elems.len();
        for i in 0..len {
            for j in 0..len {
                if i < done && j < done {
                    continue;
                }
                let c = elems[i].then(&elems[j]);
                push(c, &mut elems);
            }
        }
        done = len;
    }
    injections_semigroup(elems)
}

/// A Clifford semigroup over a chain of idempotents.
///
/// `orders[i]` is the order of the cyclic group sitting at level `i` (level 0
/// is the top of the chain). `multipliers[i]` defines the structure map
/// `Z_{orders[i]} -> Z_{orders[i+1]}` as `x ↦ multipliers[i]·x`. Elements are
/// named by level letter and exponent: `a0, a1, b0, ...`.
pub fn clifford_chain(orders: &[usize], multipliers: &[usize]) -> Result<FiniteSemigroup> {
    if orders.is_empty() || orders.len() > 3 {
        return Err(Error::Unsupported("chain length must be 1..=3".into()));
    }
    if orders.iter().any(|&m| m == 0 || m > 9) {
        return Err(Error::Unsupported("group orders must be 1..=9".into()));
    }
    if multipliers.len() + 1 != orders.len() {
        return Err(Error::Unsupported(format!(
            "need {} linking multipliers, got {}",
            orders.len() - 1,
            multipliers.len()
        )));
    }
    for (i, &c) in multipliers.iter().enumerate() {
        if (c * orders[i]) % orders[i + 1] != 0 {
            return Err(Error::Unsupported(format!(
                "x -> {c}x is not a homomorphism Z_{} -> Z_{}",
                orders[i],
                orders[i + 1]
            )));
        }
    }
    let mut levels = Vec::new();
    let mut names = Vec::new();
    for (lvl, &m) in orders.iter().enumerate() {
        for x in 0..m {
            levels.push((lvl, x));
            names.push(format!("{}{}", char::from(b'a' + lvl as u8), x));
        }
    }
    let push_down = |mut lvl: usize, mut x: usize, target: usize| {
        while lvl < target {
            x = (multipliers[lvl] * x) % orders[lvl + 1];
            lvl += 1;
        }
        x
    };
    let offset = |lvl: usize| orders[..lvl].iter().sum::<usize>();
    Ok(FiniteSemigroup::from_fn(names, |a, b| {
        let ((la, xa), (lb, xb)) = (levels[a], levels[b]);
        let l = la.max(lb);
        let x = (push_down(la, xa, l) + push_down(lb, xb, l)) % orders[l];
        offset(l) + x
    }))
}

/// `C1`: trivial group over `Z_2`, i.e. `{e > f}` with `Z_2 = {f, g}` at the
/// bottom.
pub fn clifford_c1() -> FiniteSemigroup {
    clifford_chain(&[1, 2], &[0]).expect("valid parameters")
}

/// `Z_2 × {e > f}` as a Clifford semigroup with identity linking map.
pub fn z2_times_chain2() -> FiniteSemigroup {
    clifford_chain(&[2, 2], &[1]).expect("valid parameters")
}

/// The three digraphs `G1`, `G2`, `G3`: two isolated vertices, three isolated
/// vertices, and a single edge `e: w1 -> w2`.
pub fn example_digraph(which: &str) -> Result<DirectedGraph> {
    let text = match which {
        "g1" => "vertices: u1 u2\nedges:\n",
        "g2" => "vertices: v1 v2 v3\nedges:\n",
        "g3" => "vertices: w1 w2\nedges:\ne: w1 -> w2\n",
        other => return Err(Error::Unsupported(format!("unknown example digraph `{other}`"))),
    };
    Ok(crate::graph_inverse::parse_graph(text)?)
}
