use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::laurent::{power_str, write_terms};
use crate::error::{Error, Result};

/// Laurent polynomial in `s, t` with integer coefficients, keyed by `(i, j)` for `s^i t^j`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentST {
    terms: BTreeMap<(i64, i64), i64>,
}

impl LaurentST {
    pub fn zero() -> Self {
        LaurentST { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::mono(1, 0, 0)
    }

    /// `c * s^i * t^j`
    pub fn mono(c: i64, i: i64, j: i64) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn s() -> Self {
        Self::mono(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::mono(1, 0, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i64, i64), i64)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, k: (i64, i64), c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(k).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: i64, j: i64) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Terms in ascending lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((i64, i64), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms().map(|(k, a)| (k, a * c)))
    }

    pub fn shift(&self, di: i64, dj: i64) -> Self {
        Self::from_terms(self.terms().map(|((i, j), c)| ((i + di, j + dj), c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    fn bounds(&self) -> Option<((i64, i64), (i64, i64))> {
        let mut it = self.terms.keys();
        let &(i0, j0) = it.next()?;
        let mut b = ((i0, i0), (j0, j0));
        for &(i, j) in it {
            b.0 = (b.0 .0.min(i), b.0 .1.max(i));
            b.1 = (b.1 .0.min(j), b.1 .1.max(j));
        }
        Some(b)
    }

    /// Exact quotient `self / d`; fails unless the remainder is zero.
    pub fn div_exact(&self, d: &LaurentST) -> Result<LaurentST> {
        let Some(((dimin, dimax), (djmin, djmax))) = d.bounds() else {
            return Err(Error::InexactDivision("division by zero".into()));
        };
        let Some(((nimin, nimax), (njmin, njmax))) = self.bounds() else {
            return Ok(LaurentST::zero());
        };
        // quotient exponents are confined to this box
        let (qi, qj) = ((nimin - dimin, nimax - dimax), (njmin - djmin, njmax - djmax));
        let (&lead_k, &lead_c) = d.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentST::zero();
        while let Some((&(ri, rj), &rc)) = rem.terms.iter().next_back() {
            let (mi, mj) = (ri - lead_k.0, rj - lead_k.1);
            if rc % lead_c != 0 || mi < qi.0 || mi > qi.1 || mj < qj.0 || mj > qj.1 {
                return Err(Error::InexactDivision(format!("({self}) / ({d})")));
            }
            let m = rc / lead_c;
            for ((i, j), c) in d.terms() {
                rem.add_term((i + mi, j + mj), -m * c);
            }
            quot.add_term((mi, mj), m);
        }
        Ok(quot)
    }

    /// Representative of `{± s^i t^j · self}`: minimal exponents 0 and the
    /// lexicographically least term positive.
    pub fn normalize_units(&self) -> LaurentST {
        let Some(((imin, _), (jmin, _))) = self.bounds() else {
            return LaurentST::zero();
        };
        let shifted = self.shift(-imin, -jmin);
        let (_, c) = shifted.terms().next().unwrap();
        if c < 0 {
            -shifted
        } else {
            shifted
        }
    }

    /// Substitutes `s -> s^-1, t -> t^-1`.
    pub fn invert_variables(&self) -> LaurentST {
        Self::from_terms(self.terms().map(|((i, j), c)| ((-i, -j), c)))
    }
}

impl Add for &LaurentST {
    type Output = LaurentST;
    fn add(self, rhs: Self) -> LaurentST {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentST {
    type Output = LaurentST;
    fn add(self, rhs: Self) -> LaurentST {
        &self + &rhs
    }
}

impl AddAssign<&LaurentST> for LaurentST {
    fn add_assign(&mut self, rhs: &LaurentST) {
        for (k, c) in rhs.terms() {
            self.add_term(k, c);
        }
    }
}

impl Neg for &LaurentST {
    type Output = LaurentST;
    fn neg(self) -> LaurentST {
        self.scale(-1)
    }
}

impl Neg for LaurentST {
    type Output = LaurentST;
    fn neg(self) -> LaurentST {
        self.scale(-1)
    }
}

impl Sub for &LaurentST {
    type Output = LaurentST;
    fn sub(self, rhs: Self) -> LaurentST {
        self + &(-rhs)
    }
}

impl Sub for LaurentST {
    type Output = LaurentST;
    fn sub(self, rhs: Self) -> LaurentST {
        &self - &rhs
    }
}

impl Mul for &LaurentST {
    type Output = LaurentST;
    fn mul(self, rhs: Self) -> LaurentST {
        let mut out = LaurentST::zero();
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in rhs.terms() {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentST {
    type Output = LaurentST;
    fn mul(self, rhs: Self) -> LaurentST {
        &self * &rhs
    }
}

impl From<i64> for LaurentST {
    fn from(c: i64) -> Self {
        Self::mono(c, 0, 0)
    }
}

impl fmt::Display for LaurentST {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().rev().map(|((i, j), c)| {
            let mono = [power_str("s", i), power_str("t", j)]
                .into_iter()
                .filter(|p| !p.is_empty())
                .collect::<Vec<_>>()
                .join(" ");
            (c, mono)
        });
        write_terms(f, terms)
    }
}

impl fmt::Debug for LaurentST {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sorted `[i, j, coefficient]` triples.
impl Serialize for LaurentST {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for ((i, j), c) in self.terms() {
            seq.serialize_element(&(i, j, c))?;
        }
        seq.end()
    }
}
