//! Pairings, filaments and filamentations of single-component oriented chord diagrams.
//!
//! A filament runs inside the disk bounded by the diagram circle, from a
//! negative endpoint to a positive one. Two filaments with distinct
//! endpoints cross an odd number of times exactly when their endpoints
//! interleave on the circle, so the oriented intersection number only
//! depends on the cyclic order of the four endpoints.

use std::fmt;

use serde::Serialize;

use crate::codes::{DiagramCode, Sign};
use crate::diagram::{Diagram, OrientedChordDiagram};
use crate::error::{Error, Result};

/// An involution on the chords, stored as unordered pairs `(x, y)` with
/// `x` not after `y` in name order. Self-pairs have `x == y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pairing {
    pairs: Vec<(usize, usize)>,
}

impl Pairing {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn display<'a>(&'a self, code: &'a DiagramCode) -> impl fmt::Display + 'a {
        PairingDisplay { pairing: self, code }
    }

    /// Index of the pair containing the chords named `x` and `y`.
    pub fn find(&self, code: &DiagramCode, x: &str, y: &str) -> Result<usize> {
        let missing = || Error::PairNotFound(x.into(), y.into());
        let a = code.chord_index(x).ok_or_else(missing)?;
        let b = code.chord_index(y).ok_or_else(missing)?;
        self.pairs
            .iter()
            .position(|&(p, q)| (p, q) == (a, b) || (p, q) == (b, a))
            .ok_or_else(missing)
    }
}

struct PairingDisplay<'a> {
    pairing: &'a Pairing,
    code: &'a DiagramCode,
}

impl fmt::Display for PairingDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairing
            .pairs
            .iter()
            .map(|&(x, y)| format!("({},{})", self.code.name(x), self.code.name(y)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A filament from the negative endpoint at index `start` to the positive
/// endpoint at index `end`; `owner` indexes the pair in its pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Filament {
    pub start: usize,
    pub end: usize,
    pub owner: usize,
}

fn single_component(d: &OrientedChordDiagram) -> Result<&DiagramCode> {
    if d.num_components() != 1 {
        return Err(Error::MultiComponent("filamentations"));
    }
    Ok(d.code())
}

fn chords_by_name(code: &DiagramCode) -> Vec<usize> {
    let mut order: Vec<usize> = (0..code.num_chords()).collect();
    order.sort_by(|&a, &b| code.name(a).cmp(code.name(b)));
    order
}

/// All pairings, in lexicographic order of their sorted pair lists.
pub fn enumerate_pairings(d: &OrientedChordDiagram) -> Result<Vec<Pairing>> {
    let code = single_component(d)?;
    let order = chords_by_name(code);
    let mut out = Vec::new();
    let mut used = vec![false; order.len()];
    let mut current = Vec::new();
    involutions(&order, &mut used, &mut current, &mut out);
    Ok(out)
}

fn involutions(order: &[usize], used: &mut [bool], current: &mut Vec<(usize, usize)>, out: &mut Vec<Pairing>) {
    let Some(first) = (0..order.len()).find(|&i| !used[i]) else {
        out.push(Pairing { pairs: current.clone() });
        return;
    };
    used[first] = true;
    for partner in first..order.len() {
        if partner != first && used[partner] {
            continue;
        }
        used[partner] = true;
        current.push((order[first], order[partner]));
        involutions(order, used, current, out);
        current.pop();
        if partner != first {
            used[partner] = false;
        }
    }
    used[first] = false;
}

/// The filaments of every pair: `X- -> X+` for a self-pair, and the dual
/// bifilaments `Y- -> X+`, `X- -> Y+` for a pair `(x, y)`.
pub fn filaments(code: &DiagramCode, p: &Pairing) -> Vec<Filament> {
    let at = |chord: usize, sign: Sign| code.signed_position(chord, sign).idx;
    let mut out = Vec::with_capacity(2 * p.len());
    for (owner, &(x, y)) in p.pairs.iter().enumerate() {
        if x == y {
            out.push(Filament { start: at(x, Sign::Minus), end: at(x, Sign::Plus), owner });
        } else {
            out.push(Filament { start: at(y, Sign::Minus), end: at(x, Sign::Plus), owner });
            out.push(Filament { start: at(x, Sign::Minus), end: at(y, Sign::Plus), owner });
        }
    }
    out
}

/// Oriented intersection of two filaments whose endpoints sit at indices
/// `0..m` counterclockwise on the circle: `+1` when `g` crosses `f` from
/// right to left, `-1` from left to right, `0` when they are disjoint.
pub fn oriented_intersection(m: usize, f: &Filament, g: &Filament) -> i64 {
    let span = (f.end + m - f.start) % m;
    // the counterclockwise arc from f.start to f.end lies to the right of f
    let right = |q: usize| {
        let k = (q + m - f.start) % m;
        k > 0 && k < span
    };
    match (right(g.start), right(g.end)) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

/// Intersection number of every pair, in pairing order.
pub fn pair_numbers(d: &OrientedChordDiagram, p: &Pairing) -> Result<Vec<i64>> {
    let code = single_component(d)?;
    Ok(numbers(code, p))
}

fn numbers(code: &DiagramCode, p: &Pairing) -> Vec<i64> {
    let m = code.components()[0].len();
    let fs = filaments(code, p);
    let mut out = vec![0i64; p.len()];
    for f in &fs {
        for g in fs.iter().filter(|g| g.owner != f.owner) {
            out[f.owner] += oriented_intersection(m, f, g);
        }
    }
    out
}

/// Intersection number of the pair `(x, y)` of `p`.
pub fn pair_intersection_number(d: &OrientedChordDiagram, p: &Pairing, x: &str, y: &str) -> Result<i64> {
    let code = single_component(d)?;
    let k = p.find(code, x, y)?;
    Ok(numbers(code, p)[k])
}

pub fn is_filamentation(d: &OrientedChordDiagram, p: &Pairing) -> Result<bool> {
    Ok(pair_numbers(d, p)?.iter().all(|&n| n == 0))
}

/// The first pairing, in enumeration order, whose pairs all have intersection number zero.
pub fn find_filamentation(d: &OrientedChordDiagram) -> Result<Option<Pairing>> {
    let code = d.code();
    Ok(enumerate_pairings(d)?.into_iter().find(|p| numbers(code, p).iter().all(|&n| n == 0)))
}

/// Serializable record of a pairing and its pair intersection numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub pairs: Vec<PairRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub pair: (String, String),
    pub number: i64,
}

impl Witness {
    pub fn new(d: &OrientedChordDiagram, p: &Pairing) -> Result<Self> {
        let ns = pair_numbers(d, p)?;
        let code = d.code();
        let pairs = p
            .pairs
            .iter()
            .zip(ns)
            .map(|(&(x, y), number)| PairRecord { pair: (code.name(x).into(), code.name(y).into()), number })
            .collect();
        Ok(Witness { pairs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ocd(s: &str) -> OrientedChordDiagram {
        OrientedChordDiagram::parse(s).unwrap()
    }

    fn shown(d: &OrientedChordDiagram, p: &Pairing) -> String {
        p.display(d.code()).to_string()
    }

    #[test]
    fn pairing_counts() {
        assert_eq!(enumerate_pairings(&ocd("A+ A-")).unwrap().len(), 1);
        assert_eq!(enumerate_pairings(&ocd("A+ B+ C- A- C+ B-")).unwrap().len(), 4);
        assert_eq!(enumerate_pairings(&ocd("A+ B+ C- D+ A- C+ B- D-")).unwrap().len(), 10);
        assert_eq!(enumerate_pairings(&ocd("")).unwrap(), vec![Pairing { pairs: vec![] }]);
    }

    #[test]
    fn lexicographic_order() {
        let d = ocd("C+ B+ A- C- A+ B-");
        let all: Vec<String> = enumerate_pairings(&d).unwrap().iter().map(|p| shown(&d, p)).collect();
        assert_eq!(all, ["{(A,A), (B,B), (C,C)}", "{(A,A), (B,C)}", "{(A,B), (C,C)}", "{(A,C), (B,B)}"]);
    }

    #[test]
    fn paper_example_has_filamentation() {
        let d = ocd("A+ B+ C- A- C+ B-");
        let p = find_filamentation(&d).unwrap().unwrap();
        assert_eq!(shown(&d, &p), "{(A,A), (B,C)}");
        assert_eq!(pair_numbers(&d, &p).unwrap(), vec![0, 0]);
    }

    #[test]
    fn multi_component_rejected() {
        assert!(matches!(find_filamentation(&ocd("A+ | A-")), Err(Error::MultiComponent(_))));
    }

    #[test]
    fn disjoint_filaments() {
        let f = Filament { start: 0, end: 1, owner: 0 };
        let g = Filament { start: 2, end: 3, owner: 1 };
        assert_eq!(oriented_intersection(4, &f, &g), 0);
        let h = Filament { start: 1, end: 3, owner: 1 };
        let k = Filament { start: 0, end: 2, owner: 0 };
        assert_eq!(oriented_intersection(4, &k, &h), -oriented_intersection(4, &h, &k));
        assert_ne!(oriented_intersection(4, &k, &h), 0);
    }

    #[test]
    fn missing_pair() {
        let d = ocd("A+ B+ C- A- C+ B-");
        let p = &enumerate_pairings(&d).unwrap()[0];
        assert!(matches!(pair_intersection_number(&d, p, "A", "B"), Err(Error::PairNotFound(..))));
    }
}
