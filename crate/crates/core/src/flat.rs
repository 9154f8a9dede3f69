//! Parity and the flat biquandle of flat virtual links.

use serde::Serialize;

use crate::codes::Sign;
use crate::diagram::{Diagram, OrientedChordDiagram};
use crate::error::{Error, Result};
use crate::poly::LaurentS;

fn require_link(d: &OrientedChordDiagram, what: &'static str) -> Result<()> {
    if d.num_components() < 2 {
        return Err(Error::SingleComponent(what));
    }
    Ok(())
}

/// Number of chords joining distinct components, mod 2.
pub fn parity(d: &OrientedChordDiagram) -> Result<u8> {
    require_link(d, "parity")?;
    let mixed = d.code().chord_positions().iter().filter(|[p, q]| p.comp != q.comp).count();
    Ok((mixed % 2) as u8)
}

/// The relation `(s^exponent - 1) g = 0` on the generator of one component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub generator: String,
    pub exponent: i64,
}

impl Relation {
    pub fn coefficient(&self) -> LaurentS {
        &LaurentS::mono(1, self.exponent) - &LaurentS::one()
    }
}

fn generator_name(k: usize) -> String {
    let letter = (b'a' + (k % 26) as u8) as char;
    match k / 26 {
        0 => letter.to_string(),
        n => format!("{letter}{n}"),
    }
}

/// One relation per component. Walking a component, each passage through a
/// crossing multiplies the running label by `s` at a positive endpoint and
/// by `s^-1` at a negative one; closing the component up gives `s^e g = g`.
pub fn flat_relations(d: &OrientedChordDiagram) -> Vec<Relation> {
    d.code()
        .components()
        .iter()
        .enumerate()
        .map(|(k, comp)| Relation {
            generator: generator_name(k),
            exponent: comp
                .iter()
                .map(|e| if e.sign == Sign::Plus { 1 } else { -1 })
                .sum(),
        })
        .collect()
}

/// True when some component carries a nontrivial relation, so the flat
/// biquandle is not free on the component generators.
pub fn is_flat_detected(d: &OrientedChordDiagram) -> Result<bool> {
    require_link(d, "the flat biquandle test")?;
    Ok(flat_relations(d).iter().any(|r| r.exponent != 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ocd(s: &str) -> OrientedChordDiagram {
        OrientedChordDiagram::parse(s).unwrap()
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity(&ocd("A+ | A-")).unwrap(), 1);
        assert_eq!(parity(&ocd(" | ")).unwrap(), 0);
        assert_eq!(parity(&ocd("A+ B- | A- B+")).unwrap(), 0);
        assert!(matches!(parity(&ocd("A+ A-")), Err(Error::SingleComponent(_))));
    }

    #[test]
    fn l_prime() {
        let rel = flat_relations(&ocd("A+ B+ | A- B-"));
        assert_eq!(rel.len(), 2);
        assert_eq!((rel[0].generator.as_str(), rel[0].exponent), ("a", 2));
        assert_eq!((rel[1].generator.as_str(), rel[1].exponent), ("b", -2));
        assert_eq!(rel[0].coefficient().to_string(), "s^2 - 1");
        assert_eq!(rel[1].coefficient().to_string(), "-1 + s^-2");
        assert!(is_flat_detected(&ocd("A+ B+ | A- B-")).unwrap());
    }

    #[test]
    fn undetected() {
        assert!(!is_flat_detected(&ocd(" | ")).unwrap());
        assert!(!is_flat_detected(&ocd("A+ B- | A- B+")).unwrap());
        assert!(is_flat_detected(&ocd("A+ | A-")).unwrap());
    }
}
