//! Oriented chord diagrams (knot universes) and arrow diagrams (virtual knots).

use std::fmt;

use crate::codes::{CodeKind, DiagramCode, Pos, Role, Sign};
use crate::error::{Error, Result};

/// Common interface of the two diagram types, used by the move engine.
pub trait Diagram: Clone + fmt::Display {
    const KIND: CodeKind;

    fn code(&self) -> &DiagramCode;

    fn from_code_unchecked(code: DiagramCode) -> Self;

    fn parse(text: &str) -> Result<Self> {
        DiagramCode::parse(text, Self::KIND).map(Self::from_code_unchecked)
    }

    fn canonical_form(&self) -> String {
        self.code().canonical_form()
    }

    fn num_chords(&self) -> usize {
        self.code().num_chords()
    }

    fn num_components(&self) -> usize {
        self.code().num_components()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedChordDiagram {
    code: DiagramCode,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrowDiagram {
    code: DiagramCode,
}

impl Diagram for OrientedChordDiagram {
    const KIND: CodeKind = CodeKind::Ocd;

    fn code(&self) -> &DiagramCode {
        &self.code
    }

    fn from_code_unchecked(code: DiagramCode) -> Self {
        OrientedChordDiagram { code }
    }
}

impl Diagram for ArrowDiagram {
    const KIND: CodeKind = CodeKind::Arrow;

    fn code(&self) -> &DiagramCode {
        &self.code
    }

    fn from_code_unchecked(code: DiagramCode) -> Self {
        ArrowDiagram { code }
    }
}

impl OrientedChordDiagram {
    pub fn new(code: DiagramCode) -> Result<Self> {
        code.kind().expect(CodeKind::Ocd)?;
        Ok(OrientedChordDiagram { code })
    }

    pub fn empty() -> Self {
        OrientedChordDiagram { code: DiagramCode::empty(CodeKind::Ocd, 1) }
    }

    /// Genus of the closed oriented surface carrying the diagram as a
    /// 4-valent ribbon graph, summed over connected pieces.
    pub fn genus(&self) -> usize {
        genus(&self.code)
    }

    pub fn is_classical_realizable(&self) -> bool {
        self.genus() == 0
    }
}

impl ArrowDiagram {
    pub fn new(code: DiagramCode) -> Result<Self> {
        code.kind().expect(CodeKind::Arrow)?;
        Ok(ArrowDiagram { code })
    }

    pub fn empty() -> Self {
        ArrowDiagram { code: DiagramCode::empty(CodeKind::Arrow, 1) }
    }

    pub fn underlying_ocd(&self) -> OrientedChordDiagram {
        OrientedChordDiagram { code: self.code.without_roles() }
    }

    /// Position of the over-base endpoint of `chord`.
    pub fn base(&self, chord: usize) -> Pos {
        let [p, q] = self.code.chord_positions()[chord];
        if self.code.at(p).role == Some(Role::Over) {
            p
        } else {
            q
        }
    }

    pub fn tip(&self, chord: usize) -> Pos {
        let [p, q] = self.code.chord_positions()[chord];
        if self.code.at(p).role == Some(Role::Under) {
            p
        } else {
            q
        }
    }

    /// Classical crossing sign: the orientation sign at the over-base.
    pub fn crossing_sign(&self, chord: usize) -> Sign {
        self.code.at(self.base(chord)).sign
    }

    pub fn crossing_sign_of(&self, name: &str) -> Result<Sign> {
        let c = self.code.chord_index(name).ok_or_else(|| Error::UnknownChord(name.into()))?;
        Ok(self.crossing_sign(c))
    }

    pub fn writhe(&self) -> i64 {
        self.code
            .positions()
            .map(|p| self.code.at(p))
            .filter(|e| e.role == Some(Role::Over))
            .map(|e| e.sign.value())
            .sum()
    }

    pub fn genus(&self) -> usize {
        genus(&self.code)
    }
}

impl fmt::Display for OrientedChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.code.fmt(f)
    }
}

impl fmt::Display for ArrowDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.code.fmt(f)
    }
}

/// Disjoint-set forest with path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), sets: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.sets -= 1;
        }
    }

    pub fn sets(&self) -> usize {
        self.sets
    }
}

/// Face tracing on the ribbon graph. Half-edges are `in(p)`, `out(p)` for
/// every endpoint `p`; around a crossing whose endpoint `p` is positive the
/// counterclockwise order is `in p, in q, out p, out q`.
fn genus(code: &DiagramCode) -> usize {
    let n = code.num_chords();
    if n == 0 {
        return 0;
    }
    let offsets: Vec<usize> = code
        .components()
        .iter()
        .scan(0, |acc, c| {
            let o = *acc;
            *acc += c.len();
            Some(o)
        })
        .collect();
    let flat = |p: Pos| offsets[p.comp] + p.idx;
    let half_in = |p: Pos| 2 * flat(p);
    let half_out = |p: Pos| 2 * flat(p) + 1;
    let h = 4 * n;

    let mut sigma = vec![0usize; h];
    for [p, q] in code.chord_positions() {
        let (p, q) = if code.at(p).sign == Sign::Plus { (p, q) } else { (q, p) };
        let cycle = [half_in(p), half_in(q), half_out(p), half_out(q)];
        for k in 0..4 {
            sigma[cycle[k]] = cycle[(k + 1) % 4];
        }
    }
    let mut alpha = vec![0usize; h];
    for p in code.positions() {
        let nx = code.next(p);
        alpha[half_out(p)] = half_in(nx);
        alpha[half_in(nx)] = half_out(p);
    }

    let mut seen = vec![false; h];
    let mut faces = 0;
    for start in 0..h {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = sigma[alpha[x]];
        }
    }

    let mut pieces = UnionFind::new(code.num_components());
    for [p, q] in code.chord_positions() {
        pieces.union(p.comp, q.comp);
    }
    let empty = code.components().iter().filter(|c| c.is_empty()).count();
    let k = pieces.sets() - empty;
    (2 * k + n - faces) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ad(s: &str) -> ArrowDiagram {
        ArrowDiagram::parse(s).unwrap()
    }

    #[test]
    fn underlying() {
        assert_eq!(ad("A+o A-u").underlying_ocd().to_string(), "A+ A-");
        assert_eq!(ad("A+o B+u C-u A-u C+o B-o").underlying_ocd().to_string(), "A+ B+ C- A- C+ B-");
        assert_eq!(ArrowDiagram::empty().underlying_ocd().to_string(), "");
    }

    #[test]
    fn signs_and_writhe() {
        assert_eq!(ad("A+o A-u").crossing_sign_of("A").unwrap(), Sign::Plus);
        assert_eq!(ad("A-o A+u").crossing_sign_of("A").unwrap(), Sign::Minus);
        assert_eq!(ad("A+o | A-u").crossing_sign_of("A").unwrap(), Sign::Plus);
        assert!(ad("A+o A-u").crossing_sign_of("B").is_err());
        assert_eq!(ad("A+o | A-u").writhe(), 1);
        assert_eq!(ArrowDiagram::empty().writhe(), 0);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(ad("A+o A-u").genus(), 0);
        assert_eq!(ad("A+o | A-u").genus(), 1);
        assert_eq!(ad("A+o B+o A-u B-u").genus(), 1);
        assert_eq!(ad("A+o B-u C+o A-u B+o C-u").genus(), 0);
        assert_eq!(ArrowDiagram::empty().genus(), 0);
        assert_eq!(OrientedChordDiagram::parse(" | ").unwrap().genus(), 0);
    }
}
