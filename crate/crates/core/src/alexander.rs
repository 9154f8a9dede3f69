//! Alexander biquandle relations and the generalized Alexander polynomial `G(s, t)`.
//!
//! Labels change on both strands at a crossing, so every classical endpoint
//! starts a new arc: a diagram with `n` crossings has `2n` arcs and `2n`
//! relations.

use serde::Serialize;

use crate::codes::{Pos, Sign};
use crate::diagram::{ArrowDiagram, Diagram};
use crate::error::Result;
use crate::poly::{LaurentST, STMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CrossingMatrix {
    A,
    AHat,
    B,
    BHat,
    C,
    CHat,
    D,
    DHat,
    V,
}

fn st(terms: &[((i64, i64), i64)]) -> LaurentST {
    LaurentST::from_terms(terms.iter().copied())
}

/// The 2x2 tangle matrices of the Alexander biquandle.
pub fn crossing_matrix(kind: CrossingMatrix) -> STMatrix {
    use CrossingMatrix::*;
    let zero = LaurentST::zero;
    let one_minus_st = st(&[((0, 0), 1), ((1, 1), -1)]);
    let one_minus_inv_st = st(&[((0, 0), 1), ((-1, -1), -1)]);
    let rows = match kind {
        A => vec![vec![one_minus_st, st(&[((0, 1), 1)])], vec![st(&[((1, 0), 1)]), zero()]],
        AHat => vec![vec![zero(), st(&[((1, 0), 1)])], vec![st(&[((0, 1), 1)]), one_minus_st]],
        B => vec![vec![zero(), st(&[((-1, 0), 1)])], vec![st(&[((0, -1), 1)]), one_minus_inv_st]],
        BHat => vec![vec![one_minus_inv_st, st(&[((0, -1), 1)])], vec![st(&[((-1, 0), 1)]), zero()]],
        C => vec![
            vec![zero(), st(&[((-1, 0), 1)])],
            vec![st(&[((0, 1), 1)]), st(&[((-1, 0), 1), ((0, 1), -1)])],
        ],
        CHat => vec![
            vec![st(&[((-1, 0), 1), ((0, 1), -1)]), st(&[((0, 1), 1)])],
            vec![st(&[((-1, 0), 1)]), zero()],
        ],
        D => vec![
            vec![zero(), st(&[((1, 0), 1)])],
            vec![st(&[((0, -1), 1)]), st(&[((1, 0), 1), ((0, -1), -1)])],
        ],
        DHat => vec![
            vec![st(&[((1, 0), 1), ((0, -1), -1)]), st(&[((0, -1), 1)])],
            vec![st(&[((1, 0), 1)]), zero()],
        ],
        V => vec![vec![zero(), LaurentST::one()], vec![LaurentST::one(), zero()]],
    };
    STMatrix::from_rows(rows)
}

/// Relation matrix: columns are arcs (arc `k` leaves the `k`-th endpoint in
/// reading order), rows are two relations per crossing. At a positive crossing
///
/// ```text
/// over_out  = s over_in
/// under_out = t under_in + (1 - st) over_in
/// ```
///
/// and at a negative one `s, t` are replaced by `s^-1, t^-1`.
pub fn relation_matrix(ad: &ArrowDiagram) -> STMatrix {
    let code = ad.code();
    let n = code.num_chords();
    let mut offsets = Vec::new();
    let mut acc = 0;
    for c in code.components() {
        offsets.push(acc);
        acc += c.len();
    }
    let arc = |p: Pos| offsets[p.comp] + p.idx;
    let mut m = STMatrix::zeros(2 * n, 2 * n);
    for c in 0..n {
        let (o, u) = (ad.base(c), ad.tip(c));
        let e = match ad.crossing_sign(c) {
            Sign::Plus => 1,
            Sign::Minus => -1,
        };
        let (over_in, over_out) = (arc(code.prev(o)), arc(o));
        let (under_in, under_out) = (arc(code.prev(u)), arc(u));
        let (r1, r2) = (2 * c, 2 * c + 1);
        m[(r1, over_out)] += &LaurentST::one();
        m[(r1, over_in)] += &LaurentST::mono(-1, e, 0);
        m[(r2, under_out)] += &LaurentST::one();
        m[(r2, under_in)] += &LaurentST::mono(-1, 0, e);
        m[(r2, over_in)] += &st(&[((0, 0), -1), ((e, e), 1)]);
    }
    m
}

/// `G(s, t)`, normalized up to units. Zero for a crossingless diagram.
pub fn g_polynomial(ad: &ArrowDiagram) -> Result<LaurentST> {
    if ad.num_chords() == 0 {
        return Ok(LaurentST::zero());
    }
    Ok(relation_matrix(ad).det()?.normalize_units())
}

pub fn normalize_units(p: &LaurentST) -> LaurentST {
    p.normalize_units()
}

/// `C^n` by repeated multiplication.
pub fn power_c(n: u32) -> STMatrix {
    crossing_matrix(CrossingMatrix::C).pow(n)
}

fn minus_t_pow(n: u32) -> LaurentST {
    LaurentST::mono(if n.is_multiple_of(2) { 1 } else { -1 }, 0, n as i64)
}

/// `(st + 1) C^n` from its closed form.
pub fn closed_form_cn(n: u32) -> STMatrix {
    let ni = n as i64;
    let mt = minus_t_pow(n);
    let s_neg_n = LaurentST::mono(1, -ni, 0);
    let e00 = &mt + &LaurentST::mono(1, 1 - ni, 1);
    let e01 = &(-&mt) + &s_neg_n;
    let e10 = &(-&mt).shift(1, 1) + &LaurentST::mono(1, 1 - ni, 1);
    let e11 = &mt.shift(1, 1) + &s_neg_n;
    STMatrix::from_rows(vec![vec![e00, e01], vec![e10, e11]])
}

pub fn st_plus_one() -> LaurentST {
    st(&[((1, 1), 1), ((0, 0), 1)])
}

/// The closed-form `G(K_n)`, normalized.
pub fn g_closed_form_kn(n: u32) -> Result<LaurentST> {
    let ni = n as i64;
    let head = if n.is_multiple_of(2) {
        // s^n (s^2 t + 1)(1 - t)
        &st(&[((ni + 2, 1), 1), ((ni, 0), 1)]) * &st(&[((0, 0), 1), ((0, 1), -1)])
    } else {
        // s^(n+1) (1 - t^2)
        st(&[((ni + 1, 0), 1), ((ni + 1, 2), -1)])
    };
    let tail = st(&[((2, 2), 1), ((0, 0), -1), ((0, 1 - ni), 1), ((2, 1 - ni), -1)]);
    Ok((&head + &tail).div_exact(&st_plus_one())?.normalize_units())
}

/// `G(K_n)` from the 4x4 tangle model with `X_n = V C^n` (even) or `C^n` (odd).
pub fn g_tangle_model_kn(n: u32) -> Result<LaurentST> {
    let cn = power_c(n);
    let x = if n.is_multiple_of(2) { &crossing_matrix(CrossingMatrix::V) * &cn } else { cn };
    let z = LaurentST::zero;
    let one = LaurentST::one;
    let m = STMatrix::from_rows(vec![
        vec![st(&[((0, 0), 1), ((1, 1), -1)]), LaurentST::t(), -one(), z()],
        vec![LaurentST::s(), z(), z(), -one()],
        vec![-one(), x[(0, 0)].clone(), x[(0, 1)].clone(), z()],
        vec![z(), x[(1, 0)].clone(), x[(1, 1)].clone(), -one()],
    ]);
    Ok(m.det()?.normalize_units())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ad(s: &str) -> ArrowDiagram {
        ArrowDiagram::parse(s).unwrap()
    }

    #[test]
    fn kink_matrix() {
        let m = relation_matrix(&ad("A+o A-u"));
        assert_eq!(m.row(0), [LaurentST::one(), LaurentST::mono(-1, 1, 0)]);
        assert_eq!(m.row(1), [LaurentST::mono(-1, 0, 1), LaurentST::mono(1, 1, 1)]);
        assert!(g_polynomial(&ad("A+o A-u")).unwrap().is_zero());
        assert!(g_polynomial(&ad("A-o A+u")).unwrap().is_zero());
    }

    #[test]
    fn vhopf() {
        let g = g_polynomial(&ad("A+o | A-u")).unwrap();
        assert_eq!(g, (&LaurentST::one() - &LaurentST::s()) * (&LaurentST::one() - &LaurentST::t()));
    }

    #[test]
    fn v_squared() {
        let v = crossing_matrix(CrossingMatrix::V);
        assert_eq!(&v * &v, STMatrix::identity(2));
    }

    #[test]
    fn c_closed_form_small() {
        let k = st_plus_one();
        for n in 0..4 {
            assert_eq!(&k * &power_c(n), closed_form_cn(n), "n = {n}");
        }
    }

    #[test]
    fn closed_form_low_cases_vanish() {
        assert!(g_closed_form_kn(0).unwrap().is_zero());
        assert!(g_closed_form_kn(1).unwrap().is_zero());
        assert!(!g_closed_form_kn(2).unwrap().is_zero());
    }

    #[test]
    fn tangle_model_matches_closed_form() {
        for n in 0..6 {
            assert_eq!(g_tangle_model_kn(n).unwrap(), g_closed_form_kn(n).unwrap(), "n = {n}");
        }
    }
}
