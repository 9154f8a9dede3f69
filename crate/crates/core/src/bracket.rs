//! Kauffman bracket state sum, normalized bracket and Jones polynomial.
//!
//! Virtual crossings never appear in a code, so a state's loops are counted
//! directly on the reconnected code.

use std::collections::BTreeMap;

use crate::codes::{DiagramCode, Endpoint, Pos, Role, Sign};
use crate::diagram::{ArrowDiagram, Diagram, UnionFind};
use crate::poly::{LaurentA, QuarterLaurentT};

/// Loop value `-A^2 - A^-2`.
pub fn delta() -> LaurentA {
    LaurentA::from_terms([(2, -1), (-2, -1)])
}

/// Which arc ends a smoothing glues together at one crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothing {
    /// `in(o)-out(u)`, `in(u)-out(o)`
    Oriented,
    /// `in(o)-in(u)`, `out(o)-out(u)`
    Unoriented,
}

/// The A-smoothing of a crossing: oriented when positive, unoriented when negative.
pub fn a_smoothing(sign: Sign) -> Smoothing {
    match sign {
        Sign::Plus => Smoothing::Oriented,
        Sign::Minus => Smoothing::Unoriented,
    }
}

pub(crate) struct Arcs {
    offsets: Vec<usize>,
    pub nodes: usize,
    pub empty_components: usize,
}

impl Arcs {
    pub fn new(code: &DiagramCode) -> Self {
        let mut offsets = Vec::with_capacity(code.num_components());
        let mut acc = 0;
        for c in code.components() {
            offsets.push(acc);
            acc += c.len();
        }
        let empty_components = code.components().iter().filter(|c| c.is_empty()).count();
        Arcs { offsets, nodes: 2 * acc, empty_components }
    }

    pub fn input(&self, p: Pos) -> usize {
        2 * (self.offsets[p.comp] + p.idx)
    }

    pub fn output(&self, p: Pos) -> usize {
        2 * (self.offsets[p.comp] + p.idx) + 1
    }

    /// Union-find with every arc `out(p) -> in(next p)` already joined.
    pub fn joined(&self, code: &DiagramCode) -> UnionFind {
        let mut uf = UnionFind::new(self.nodes);
        for p in code.positions() {
            uf.union(self.output(p), self.input(code.next(p)));
        }
        uf
    }

    pub fn smooth(&self, uf: &mut UnionFind, over: Pos, under: Pos, s: Smoothing) {
        match s {
            Smoothing::Oriented => {
                uf.union(self.input(over), self.output(under));
                uf.union(self.input(under), self.output(over));
            }
            Smoothing::Unoriented => {
                uf.union(self.input(over), self.input(under));
                uf.union(self.output(over), self.output(under));
            }
        }
    }
}

/// `<K>` as the sum over all `2^n` states of `A^(#A - #B) δ^(loops - 1)`.
pub fn kauffman_bracket(ad: &ArrowDiagram) -> LaurentA {
    let code = ad.code();
    let n = code.num_chords();
    let arcs = Arcs::new(code);
    let base = arcs.joined(code);
    let crossings: Vec<(Pos, Pos, Sign)> = (0..n).map(|c| (ad.base(c), ad.tip(c), ad.crossing_sign(c))).collect();

    // (A-exponent, loops) -> number of states
    let mut tally: BTreeMap<(i64, usize), i64> = BTreeMap::new();
    for state in 0u64..(1u64 << n) {
        let mut uf = base.clone();
        let mut exponent = 0i64;
        for (k, &(o, u, sign)) in crossings.iter().enumerate() {
            let a = a_smoothing(sign);
            let s = if state >> k & 1 == 0 {
                exponent += 1;
                a
            } else {
                exponent -= 1;
                other(a)
            };
            arcs.smooth(&mut uf, o, u, s);
        }
        *tally.entry((exponent, uf.sets() + arcs.empty_components)).or_insert(0) += 1;
    }

    let d = delta();
    let mut out = LaurentA::zero();
    for ((e, loops), count) in tally {
        out += &(&LaurentA::mono(count, e) * &d.pow(loops as u32 - 1));
    }
    out
}

fn other(s: Smoothing) -> Smoothing {
    match s {
        Smoothing::Oriented => Smoothing::Unoriented,
        Smoothing::Unoriented => Smoothing::Oriented,
    }
}

/// `f_K(A) = (-A^3)^(-w) <K>`.
pub fn f_polynomial(ad: &ArrowDiagram) -> LaurentA {
    let w = ad.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    kauffman_bracket(ad).shift(-3 * w).scale(sign)
}

/// `V_K(t) = f_K(t^(-1/4))`.
pub fn jones(ad: &ArrowDiagram) -> QuarterLaurentT {
    QuarterLaurentT::from_a(&f_polynomial(ad))
}

/// Switches every crossing. Orientation signs are local data of the
/// underlying chord diagram and stay put; only the arrow direction changes,
/// so every crossing sign is negated.
pub fn mirror(ad: &ArrowDiagram) -> ArrowDiagram {
    let (kind, components, names) = ad.code().clone().into_parts();
    let components = components
        .into_iter()
        .map(|c| c.into_iter().map(|e| Endpoint { role: e.role.map(Role::other), ..e }).collect())
        .collect();
    ArrowDiagram::from_code_unchecked(DiagramCode::from_parts_unchecked(kind, components, names))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ad(s: &str) -> ArrowDiagram {
        ArrowDiagram::parse(s).unwrap()
    }

    #[test]
    fn vhopf() {
        let h = ad("A+o | A-u");
        assert_eq!(kauffman_bracket(&h), LaurentA::from_terms([(1, 1), (-1, 1)]));
        assert_eq!(f_polynomial(&h).to_string(), "-A^-2 - A^-4");
        assert_eq!(f_polynomial(&mirror(&h)).to_string(), "-A^4 - A^2");
        assert_eq!(jones(&h).to_string(), "-t - t^(1/2)");
    }

    #[test]
    fn unknots() {
        assert_eq!(kauffman_bracket(&ArrowDiagram::empty()), LaurentA::one());
        assert_eq!(kauffman_bracket(&ad(" | ")), delta());
        assert_eq!(kauffman_bracket(&ad("A+o A-u")), LaurentA::mono(-1, 3));
        assert_eq!(f_polynomial(&ad("A+o A-u")), LaurentA::one());
        assert_eq!(f_polynomial(&ad("A-o A+u")), LaurentA::one());
        assert_eq!(f_polynomial(&ad("A+u A-o")), LaurentA::one());
    }

    #[test]
    fn mirror_is_involution() {
        let k = ad("A+o B-u C+o A-u B+o C-u");
        assert_eq!(mirror(&mirror(&k)), k);
        assert_eq!(mirror(&k).writhe(), -k.writhe());
    }
}
