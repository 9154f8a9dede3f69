//! The families `D_n`, `K_n` and a corpus of named diagrams.

use std::fmt;

use crate::codes::{CodeKind, DiagramCode, Endpoint, Role, Sign};
use crate::diagram::{ArrowDiagram, Diagram, OrientedChordDiagram};
use crate::error::{Error, Result};

const CORPUS: &str = include_str!("../data/corpus.txt");

/// `X- Yn- ... Y1- X+ Y1+ ... Yn+`: a vertical chord `X` crossed by `n`
/// horizontal chords `Y1..Yn`.
pub fn make_dn(n: usize) -> OrientedChordDiagram {
    OrientedChordDiagram::from_code_unchecked(dn_code(n, |_, _| None))
}

/// `D_n` with arrows: `X` is based at `X+`, and `Yi` is based at its
/// negative endpoint when `n - i` is even and at its positive one otherwise.
pub fn make_kn(n: usize) -> ArrowDiagram {
    ArrowDiagram::from_code_unchecked(dn_code(n, |chord, sign| {
        let base_sign = match chord {
            0 => Sign::Plus,
            i if (n - i).is_multiple_of(2) => Sign::Minus,
            _ => Sign::Plus,
        };
        Some(if sign == base_sign { Role::Over } else { Role::Under })
    }))
}

/// Chord 0 is `X`, chord `i` is `Yi`.
fn dn_code(n: usize, role: impl Fn(usize, Sign) -> Option<Role>) -> DiagramCode {
    let ep = |chord, sign| Endpoint { chord, sign, role: role(chord, sign) };
    let mut comp = vec![ep(0, Sign::Minus)];
    comp.extend((1..=n).rev().map(|i| ep(i, Sign::Minus)));
    comp.push(ep(0, Sign::Plus));
    comp.extend((1..=n).map(|i| ep(i, Sign::Plus)));
    let mut names = vec!["X".to_string()];
    names.extend((1..=n).map(|i| format!("Y{i}")));
    let kind = if role(0, Sign::Plus).is_some() { CodeKind::Arrow } else { CodeKind::Ocd };
    DiagramCode::from_parts_unchecked(kind, vec![comp], names)
}

/// A named entry of the corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Named {
    Arrow(ArrowDiagram),
    Ocd(OrientedChordDiagram),
}

impl Named {
    pub fn code(&self) -> &DiagramCode {
        match self {
            Named::Arrow(d) => d.code(),
            Named::Ocd(d) => d.code(),
        }
    }

    pub fn as_arrow(&self) -> Option<&ArrowDiagram> {
        match self {
            Named::Arrow(d) => Some(d),
            Named::Ocd(_) => None,
        }
    }

    /// The diagram itself, or the universe of an arrow diagram.
    pub fn ocd(&self) -> OrientedChordDiagram {
        match self {
            Named::Arrow(d) => d.underlying_ocd(),
            Named::Ocd(d) => d.clone(),
        }
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.code().fmt(f)
    }
}

/// `(name, kind, code)` for every corpus line.
pub fn corpus_entries() -> impl Iterator<Item = (&'static str, CodeKind, &'static str)> {
    CORPUS.lines().filter_map(|line| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        let (name, rest) = line.split_once(char::is_whitespace)?;
        let (kind, code) = rest.trim_start().split_once(char::is_whitespace)?;
        let kind = match kind {
            "arrow" => CodeKind::Arrow,
            _ => CodeKind::Ocd,
        };
        Some((name, kind, code.trim()))
    })
}

pub fn example_names() -> Vec<&'static str> {
    corpus_entries().map(|(n, _, _)| n).collect()
}

pub fn named_example(name: &str) -> Result<Named> {
    let (_, kind, code) = corpus_entries()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| Error::UnknownExample(name.into()))?;
    Ok(match kind {
        CodeKind::Arrow => Named::Arrow(ArrowDiagram::parse(code)?),
        CodeKind::Ocd => Named::Ocd(OrientedChordDiagram::parse(code)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dn_codes() {
        assert_eq!(make_dn(0).to_string(), "X- X+");
        assert_eq!(make_dn(2).to_string(), "X- Y2- Y1- X+ Y1+ Y2+");
    }

    #[test]
    fn kn_codes() {
        assert_eq!(make_kn(0).to_string(), "X-u X+o");
        assert_eq!(make_kn(1).to_string(), "X-u Y1-o X+o Y1+u");
        assert_eq!(make_kn(2).to_string(), "X-u Y2-o Y1-u X+o Y1+o Y2+u");
        assert_eq!(make_kn(3).to_string(), "X-u Y3-o Y2-u Y1-o X+o Y1+u Y2+o Y3+u");
    }

    #[test]
    fn kn_over_dn() {
        for n in 0..=10 {
            assert_eq!(make_kn(n).underlying_ocd(), make_dn(n));
        }
    }

    #[test]
    fn corpus_parses() {
        let names = example_names();
        assert_eq!(names.len(), 9);
        for name in names {
            named_example(name).unwrap();
        }
        assert!(matches!(named_example("nope"), Err(Error::UnknownExample(_))));
    }

    #[test]
    fn fixed_codes() {
        assert_eq!(named_example("vhopf_plus").unwrap().to_string(), "A+o | A-u");
        assert_eq!(named_example("paper_ocd_example").unwrap().to_string(), "A+ B+ C- A- C+ B-");
    }
}
