use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Laurent polynomial in one variable named `X` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<const X: char> {
    terms: BTreeMap<i64, i64>,
}

pub type LaurentA = Laurent<'A'>;
pub type LaurentS = Laurent<'s'>;

impl<const X: char> Laurent<X> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::mono(1, 0)
    }

    /// `c * X^e`
    pub fn mono(c: i64, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn var() -> Self {
        Self::mono(1, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `X -> X^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Substitutes `X -> X^-1`.
    pub fn invert_variable(&self) -> Self {
        self.substitute_power(-1)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, a)| (e, a * c)))
    }

    pub fn shift(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + k, c)))
    }
}

impl<const X: char> Add for &Laurent<X> {
    type Output = Laurent<X>;
    fn add(self, rhs: Self) -> Laurent<X> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<const X: char> Add for Laurent<X> {
    type Output = Laurent<X>;
    fn add(self, rhs: Self) -> Laurent<X> {
        &self + &rhs
    }
}

impl<const X: char> AddAssign<&Laurent<X>> for Laurent<X> {
    fn add_assign(&mut self, rhs: &Laurent<X>) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl<const X: char> Neg for &Laurent<X> {
    type Output = Laurent<X>;
    fn neg(self) -> Laurent<X> {
        self.scale(-1)
    }
}

impl<const X: char> Neg for Laurent<X> {
    type Output = Laurent<X>;
    fn neg(self) -> Laurent<X> {
        self.scale(-1)
    }
}

impl<const X: char> Sub for &Laurent<X> {
    type Output = Laurent<X>;
    fn sub(self, rhs: Self) -> Laurent<X> {
        self + &(-rhs)
    }
}

impl<const X: char> Sub for Laurent<X> {
    type Output = Laurent<X>;
    fn sub(self, rhs: Self) -> Laurent<X> {
        &self - &rhs
    }
}

impl<const X: char> Mul for &Laurent<X> {
    type Output = Laurent<X>;
    fn mul(self, rhs: Self) -> Laurent<X> {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl<const X: char> Mul for Laurent<X> {
    type Output = Laurent<X>;
    fn mul(self, rhs: Self) -> Laurent<X> {
        &self * &rhs
    }
}

impl<const X: char> From<i64> for Laurent<X> {
    fn from(c: i64) -> Self {
        Self::mono(c, 0)
    }
}

/// Writes signed terms, highest exponent first: `-A^-2 - A^-4`.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let abs = c.unsigned_abs();
        if first {
            if c < 0 {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c < 0 { " - " } else { " + " })?;
        }
        first = false;
        match (abs, mono.is_empty()) {
            (_, true) => write!(f, "{abs}")?,
            (1, false) => f.write_str(&mono)?,
            (_, false) => write!(f, "{abs}{mono}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn power_str(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl<const X: char> fmt::Display for Laurent<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = X.to_string();
        write_terms(f, self.terms().rev().map(|(e, c)| (c, power_str(&var, e))))
    }
}

impl<const X: char> fmt::Debug for Laurent<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sorted `[exponent, coefficient]` pairs.
impl<const X: char> Serialize for Laurent<X> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}

/// Laurent polynomial in `t^(1/4)`; exponents are stored as numerators over 4.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuarterLaurentT {
    quarters: Laurent<'q'>,
}

impl QuarterLaurentT {
    pub fn from_quarters(p: Laurent<'q'>) -> Self {
        QuarterLaurentT { quarters: p }
    }

    /// Substitutes `A = t^(-1/4)`.
    pub fn from_a(p: &LaurentA) -> Self {
        Self::from_quarters(Laurent::from_terms(p.terms().map(|(e, c)| (-e, c))))
    }

    /// Terms as `(numerator over 4, coefficient)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.quarters.terms()
    }

    pub fn is_integral(&self) -> bool {
        self.terms().all(|(e, _)| e % 4 == 0)
    }
}

fn quarter_exponent(num: i64) -> String {
    if num % 4 == 0 {
        return power_str("t", num / 4);
    }
    let g = if num % 2 == 0 { 2 } else { 1 };
    format!("t^({}/{})", num / g, 4 / g)
}

impl fmt::Display for QuarterLaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms().rev().map(|(e, c)| (c, quarter_exponent(e))))
    }
}

impl fmt::Debug for QuarterLaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for QuarterLaurentT {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term {
            num: i64,
            den: i64,
            coeff: i64,
        }
        let mut seq = s.serialize_seq(None)?;
        for (num, coeff) in self.terms() {
            seq.serialize_element(&Term { num, den: 4, coeff })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = LaurentA::var();
        let delta = -(a.pow(2)) - LaurentA::mono(1, -2);
        assert_eq!((&delta * &delta).to_string(), "A^4 + 2 + A^-4");
        assert!((&delta - &delta).is_zero());
    }

    #[test]
    fn display() {
        let p = LaurentA::from_terms([(-2, -1), (-4, -1)]);
        assert_eq!(p.to_string(), "-A^-2 - A^-4");
        assert_eq!(LaurentA::zero().to_string(), "0");
        assert_eq!(LaurentA::from_terms([(1, 3), (0, -2)]).to_string(), "3A - 2");
    }

    #[test]
    fn jones_substitution() {
        let f = LaurentA::from_terms([(-2, -1), (-4, -1)]);
        let v = QuarterLaurentT::from_a(&f);
        assert_eq!(v.to_string(), "-t - t^(1/2)");
        assert!(!v.is_integral());
    }

    #[test]
    fn json() {
        let p = LaurentA::from_terms([(-2, -1), (3, 2)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[-2,-1],[3,2]]");
        let q = QuarterLaurentT::from_a(&LaurentA::mono(1, -2));
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"[{"num":2,"den":4,"coeff":1}]"#);
    }
}
