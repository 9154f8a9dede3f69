//! Textual codes for oriented chord diagrams and arrow diagrams.
//!
//! A code lists, for every component, the chord endpoints met while walking
//! the component counterclockwise. Each endpoint carries the chord name, its
//! local orientation sign and, for arrow codes, whether it is the over-base
//! (`o`) or the under-tip (`u`) of the arrow:
//!
//! ```text
//! A+ B+ C- A- C+ B-          oriented chord diagram, one component
//! A+o | A-u                  arrow diagram, two components
//! ```

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Which end of an arrow an endpoint is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    /// Arrow basepoint, on the overcrossing strand.
    #[serde(rename = "o")]
    Over,
    /// Arrow tip, on the undercrossing strand.
    #[serde(rename = "u")]
    Under,
}

impl Role {
    pub fn as_char(self) -> char {
        match self {
            Role::Over => 'o',
            Role::Under => 'u',
        }
    }

    pub fn other(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeKind {
    #[serde(rename = "ocd")]
    Ocd,
    #[serde(rename = "arrow")]
    Arrow,
}

impl CodeKind {
    fn describe(self) -> &'static str {
        match self {
            CodeKind::Ocd => "oriented chord diagram",
            CodeKind::Arrow => "arrow diagram",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub chord: usize,
    pub sign: Sign,
    pub role: Option<Role>,
}

/// Location of an endpoint: component index and index inside the component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pos {
    pub comp: usize,
    pub idx: usize,
}

impl Pos {
    pub fn new(comp: usize, idx: usize) -> Self {
        Pos { comp, idx }
    }
}

/// A validated multi-component code.
///
/// Chords are numbered `0..num_chords()`; `names()[i]` is the spelling of chord `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramCode {
    kind: CodeKind,
    components: Vec<Vec<Endpoint>>,
    names: Vec<String>,
}

impl DiagramCode {
    /// Builds a code and checks every structural invariant.
    pub fn new(kind: CodeKind, components: Vec<Vec<Endpoint>>, names: Vec<String>) -> Result<Self> {
        let components = if components.is_empty() { vec![vec![]] } else { components };
        let mut seen: Vec<Vec<Endpoint>> = vec![vec![]; names.len()];
        for e in components.iter().flatten() {
            let slot = seen.get_mut(e.chord).ok_or_else(|| Error::UnknownChord(format!("#{}", e.chord)))?;
            slot.push(*e);
        }
        for (i, ends) in seen.iter().enumerate() {
            if ends.len() != 2 {
                return Err(Error::ChordMultiplicity { name: names[i].clone(), count: ends.len() });
            }
            if ends[0].sign == ends[1].sign {
                return Err(Error::EqualSigns(names[i].clone()));
            }
            match kind {
                CodeKind::Ocd => {
                    if ends.iter().any(|e| e.role.is_some()) {
                        return Err(Error::BadRoles(names[i].clone()));
                    }
                }
                CodeKind::Arrow => match (ends[0].role, ends[1].role) {
                    (Some(a), Some(b)) if a != b => {}
                    _ => return Err(Error::BadRoles(names[i].clone())),
                },
            }
        }
        Ok(DiagramCode { kind, components, names })
    }

    pub fn empty(kind: CodeKind, num_components: usize) -> Self {
        DiagramCode { kind, components: vec![vec![]; num_components.max(1)], names: vec![] }
    }

    pub fn parse(text: &str, kind: CodeKind) -> Result<Self> {
        Parser::new(text, kind).parse()
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn components(&self) -> &[Vec<Endpoint>] {
        &self.components
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, chord: usize) -> &str {
        &self.names[chord]
    }

    pub fn num_chords(&self) -> usize {
        self.names.len()
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn chord_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn at(&self, p: Pos) -> &Endpoint {
        &self.components[p.comp][p.idx]
    }

    /// Cyclic successor inside the component.
    pub fn next(&self, p: Pos) -> Pos {
        let m = self.components[p.comp].len();
        Pos::new(p.comp, (p.idx + 1) % m)
    }

    pub fn prev(&self, p: Pos) -> Pos {
        let m = self.components[p.comp].len();
        Pos::new(p.comp, (p.idx + m - 1) % m)
    }

    pub fn positions(&self) -> impl Iterator<Item = Pos> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(c, comp)| (0..comp.len()).map(move |i| Pos::new(c, i)))
    }

    /// The two positions of every chord, in reading order.
    pub fn chord_positions(&self) -> Vec<[Pos; 2]> {
        let mut out: Vec<Vec<Pos>> = vec![Vec::with_capacity(2); self.names.len()];
        for p in self.positions() {
            out[self.at(p).chord].push(p);
        }
        out.into_iter().map(|v| [v[0], v[1]]).collect()
    }

    /// Position of the endpoint of `chord` with the given sign.
    pub fn signed_position(&self, chord: usize, sign: Sign) -> Pos {
        let [p, q] = self.chord_positions()[chord];
        if self.at(p).sign == sign {
            p
        } else {
            q
        }
    }

    pub fn adjacent(&self, p: Pos, q: Pos) -> bool {
        p.comp == q.comp && p != q && (self.next(p) == q || self.next(q) == p)
    }

    /// Copy with every role erased.
    pub fn without_roles(&self) -> DiagramCode {
        let components = self
            .components
            .iter()
            .map(|c| c.iter().map(|e| Endpoint { role: None, ..*e }).collect())
            .collect();
        DiagramCode { kind: CodeKind::Ocd, components, names: self.names.clone() }
    }

    pub(crate) fn from_parts_unchecked(kind: CodeKind, components: Vec<Vec<Endpoint>>, names: Vec<String>) -> Self {
        debug_assert!(DiagramCode::new(kind, components.clone(), names.clone()).is_ok());
        DiagramCode { kind, components, names }
    }

    pub(crate) fn into_parts(self) -> (CodeKind, Vec<Vec<Endpoint>>, Vec<String>) {
        (self.kind, self.components, self.names)
    }

    /// Single-space separated tokens, components joined by `" | "`.
    pub fn serialize(&self) -> String {
        serialize_with(&self.components, |c| self.names[c].clone())
    }

    /// Representative of the code modulo rotation of each component,
    /// permutation of components and renaming of chords.
    ///
    /// The representative is the minimal re-encoding (chords renumbered in
    /// order of first occurrence) under a fixed total order on token
    /// sequences, serialized with generated names `A, B, ...`.
    pub fn canonical_form(&self) -> String {
        let best = self.canonical_components();
        serialize_with(&best, chord_label)
    }

    /// Components of the canonical re-encoding; chord `i` is the `i`-th chord met.
    pub fn canonical_components(&self) -> Vec<Vec<Endpoint>> {
        let k = self.components.len();
        let mut best: Option<(Vec<u32>, Vec<Vec<Endpoint>>)> = None;
        let mut order: Vec<usize> = (0..k).collect();
        permutations(&mut order, 0, &mut |perm| {
            let lens: Vec<usize> = perm.iter().map(|&c| self.components[c].len().max(1)).collect();
            let mut rot = vec![0usize; k];
            loop {
                let (key, comps) = self.encode(perm, &rot);
                if best.as_ref().is_none_or(|(b, _)| key < *b) {
                    best = Some((key, comps));
                }
                // odometer over rotations
                let mut i = 0;
                while i < k {
                    rot[i] += 1;
                    if rot[i] < lens[i] {
                        break;
                    }
                    rot[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        });
        best.map(|(_, c)| c).unwrap_or_default()
    }

    fn encode(&self, perm: &[usize], rot: &[usize]) -> (Vec<u32>, Vec<Vec<Endpoint>>) {
        let mut relabel = vec![u32::MAX; self.names.len()];
        let mut next = 0u32;
        let mut key = Vec::with_capacity(2 * self.names.len() + perm.len());
        let mut comps = Vec::with_capacity(perm.len());
        for (slot, &c) in perm.iter().enumerate() {
            let comp = &self.components[c];
            let m = comp.len();
            let mut out = Vec::with_capacity(m);
            for j in 0..m {
                let e = comp[(j + rot[slot]) % m];
                if relabel[e.chord] == u32::MAX {
                    relabel[e.chord] = next;
                    next += 1;
                }
                let id = relabel[e.chord];
                let sign = matches!(e.sign, Sign::Minus) as u32;
                let role = match e.role {
                    None => 0,
                    Some(Role::Over) => 1,
                    Some(Role::Under) => 2,
                };
                key.push(1 + id * 6 + sign * 3 + role);
                out.push(Endpoint { chord: id as usize, ..e });
            }
            key.push(0);
            comps.push(out);
        }
        (key, comps)
    }

    /// Converts the common `O1+ U1+` notation (over/under passage, crossing
    /// number, crossing sign) into an arrow code. Chords are renamed `A, B, ...`
    /// in order of first appearance.
    pub fn from_standard_gauss(text: &str) -> Result<Self> {
        struct Passage {
            over: bool,
            sign: Sign,
        }
        let mut components: Vec<Vec<(usize, Passage)>> = vec![vec![]];
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut labels: Vec<String> = vec![];
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() {
                i += 1;
                continue;
            }
            if c == b'|' {
                components.push(vec![]);
                i += 1;
                continue;
            }
            let over = match c.to_ascii_uppercase() {
                b'O' => true,
                b'U' => false,
                _ => return Err(Error::Syntax { pos: i, msg: "expected O or U".into() }),
            };
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            if start == i {
                return Err(Error::Syntax { pos: i, msg: "expected crossing label".into() });
            }
            let label = &text[start..i];
            let (sign, len) = read_sign(&text[i..]).ok_or(Error::Syntax { pos: i, msg: "expected + or -".into() })?;
            i += len;
            let id = *ids.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                labels.len() - 1
            });
            components.last_mut().unwrap().push((id, Passage { over, sign }));
        }

        let mut per_crossing: Vec<Vec<&Passage>> = vec![vec![]; labels.len()];
        for (id, p) in components.iter().flatten() {
            per_crossing[*id].push(p);
        }
        for (id, ps) in per_crossing.iter().enumerate() {
            let overs = ps.iter().filter(|p| p.over).count();
            if ps.len() != 2 || overs != 1 {
                return Err(Error::BadGaussCrossing(labels[id].clone(), "needs exactly one O and one U passage".into()));
            }
            if ps[0].sign != ps[1].sign {
                return Err(Error::BadGaussCrossing(labels[id].clone(), "mismatched crossing signs".into()));
            }
        }

        let comps = components
            .into_iter()
            .map(|comp| {
                comp.into_iter()
                    .map(|(id, p)| Endpoint {
                        chord: id,
                        sign: if p.over { p.sign } else { -p.sign },
                        role: Some(if p.over { Role::Over } else { Role::Under }),
                    })
                    .collect()
            })
            .collect();
        let names = (0..labels.len()).map(chord_label).collect();
        DiagramCode::new(CodeKind::Arrow, comps, names)
    }
}

impl fmt::Display for DiagramCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Generated chord names: `A`..`Z`, then `A1`..`Z1`, `A2`, ...
pub fn chord_label(i: usize) -> String {
    let letter = (b'A' + (i % 26) as u8) as char;
    match i / 26 {
        0 => letter.to_string(),
        k => format!("{letter}{k}"),
    }
}

fn serialize_with(components: &[Vec<Endpoint>], name: impl Fn(usize) -> String) -> String {
    components
        .iter()
        .map(|comp| {
            comp.iter()
                .map(|e| {
                    let mut s = name(e.chord);
                    s.push(e.sign.as_char());
                    if let Some(r) = e.role {
                        s.push(r.as_char());
                    }
                    s
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn permutations(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

fn read_sign(s: &str) -> Option<(Sign, usize)> {
    let c = s.chars().next()?;
    match c {
        '+' => Some((Sign::Plus, 1)),
        '-' => Some((Sign::Minus, 1)),
        '\u{2212}' => Some((Sign::Minus, c.len_utf8())),
        _ => None,
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    kind: CodeKind,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, kind: CodeKind) -> Self {
        Parser { text, pos: 0, kind }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn parse(mut self) -> Result<DiagramCode> {
        let mut ids: HashMap<&'a str, usize> = HashMap::new();
        let mut names: Vec<String> = vec![];
        let mut components: Vec<Vec<Endpoint>> = vec![vec![]];

        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
                continue;
            }
            if c == '|' {
                components.push(vec![]);
                self.pos += 1;
                continue;
            }
            let name = self.name()?;
            let (sign, len) = read_sign(&self.text[self.pos..]).ok_or_else(|| self.err("expected + or -"))?;
            self.pos += len;
            let role = match self.kind {
                CodeKind::Arrow => match self.peek() {
                    Some('o') => Some(Role::Over),
                    Some('u') => Some(Role::Under),
                    _ => return Err(self.err(format!("endpoint {name} needs a role suffix o or u"))),
                },
                CodeKind::Ocd => {
                    let rest = &self.text[self.pos..];
                    let mut it = rest.chars();
                    if matches!(it.next(), Some('o' | 'u')) && it.next().is_none_or(|c| c.is_whitespace() || c == '|') {
                        return Err(self.err("role suffixes are not allowed in an oriented chord diagram code"));
                    }
                    None
                }
            };
            if role.is_some() {
                self.pos += 1;
            }
            let id = *ids.entry(name).or_insert_with(|| {
                names.push(name.to_string());
                names.len() - 1
            });
            components.last_mut().unwrap().push(Endpoint { chord: id, sign, role });
        }
        DiagramCode::new(self.kind, components, names)
    }

    fn name(&mut self) -> Result<&'a str> {
        let start = self.pos;
        let bytes = self.text.as_bytes();
        match bytes.get(start) {
            Some(b) if b.is_ascii_alphabetic() => {
                let mut i = start + 1;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                self.pos = i;
            }
            Some(b) if b.is_ascii_digit() => {
                let mut i = start + 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                self.pos = i;
            }
            _ => return Err(self.err("expected chord name")),
        }
        Ok(&self.text[start..self.pos])
    }
}

impl CodeKind {
    pub(crate) fn expect(self, want: CodeKind) -> Result<()> {
        if self == want {
            Ok(())
        } else {
            Err(Error::WrongKind { expected: want.describe() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ocd(s: &str) -> DiagramCode {
        DiagramCode::parse(s, CodeKind::Ocd).unwrap()
    }

    fn arrow(s: &str) -> DiagramCode {
        DiagramCode::parse(s, CodeKind::Arrow).unwrap()
    }

    #[test]
    fn parses_paper_example() {
        let c = ocd("A+ B+ C- A- C+ B-");
        assert_eq!(c.num_components(), 1);
        assert_eq!(c.num_chords(), 3);
        assert_eq!(c.serialize(), "A+ B+ C- A- C+ B-");
    }

    #[test]
    fn parses_without_whitespace() {
        assert_eq!(ocd("A+B+C-A-C+B-").serialize(), "A+ B+ C- A- C+ B-");
        assert_eq!(arrow("A+oB+uC-uA-uC+oB-o").serialize(), "A+o B+u C-u A-u C+o B-o");
    }

    #[test]
    fn empty_code() {
        let c = ocd("");
        assert_eq!(c.num_components(), 1);
        assert_eq!(c.num_chords(), 0);
        assert_eq!(c.serialize(), "");
        let two = ocd(" | ");
        assert_eq!(two.num_components(), 2);
        assert_eq!(DiagramCode::parse(&two.serialize(), CodeKind::Ocd).unwrap(), two);
    }

    #[test]
    fn rejects_equal_signs() {
        assert_eq!(DiagramCode::parse("A+ A+", CodeKind::Ocd), Err(Error::EqualSigns("A".into())));
    }

    #[test]
    fn rejects_bad_multiplicity() {
        assert!(matches!(
            DiagramCode::parse("A+ B- A-", CodeKind::Ocd),
            Err(Error::ChordMultiplicity { count: 1, .. })
        ));
        assert!(matches!(
            DiagramCode::parse("A+ A- A+", CodeKind::Ocd),
            Err(Error::ChordMultiplicity { count: 3, .. })
        ));
    }

    #[test]
    fn rejects_bad_roles() {
        assert_eq!(DiagramCode::parse("A+o A-o", CodeKind::Arrow), Err(Error::BadRoles("A".into())));
        assert!(matches!(DiagramCode::parse("A+o A-", CodeKind::Arrow), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(DiagramCode::parse("A+o A-u", CodeKind::Ocd), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn syntax_error_position() {
        match DiagramCode::parse("A+ B? A- B+", CodeKind::Ocd) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn numeric_names() {
        let c = ocd("12+ 7- 12- 7+");
        assert_eq!(c.names(), ["12", "7"]);
    }

    #[test]
    fn vhopf_serializes() {
        assert_eq!(arrow("A+o|A-u").serialize(), "A+o | A-u");
    }

    #[test]
    fn canonical_rotation_and_renaming() {
        assert_eq!(ocd("C- A- C+ B- A+ B+").canonical_form(), ocd("A+ B+ C- A- C+ B-").canonical_form());
        assert_eq!(ocd("A+ C+ B- A- B+ C-").canonical_form(), ocd("A+ B+ C- A- C+ B-").canonical_form());
        assert_eq!(ocd("A+ A-").canonical_form(), ocd("Z+ Z-").canonical_form());
        // rotating by three and renaming maps one onto the other
        assert_eq!(ocd("A+ B+ A- B-").canonical_form(), ocd("A+ B- A- B+").canonical_form());
        assert_ne!(ocd("A+ B+ A- B-").canonical_form(), ocd("A+ A- B+ B-").canonical_form());
        assert_ne!(ocd("A+ B+ A- B-").canonical_form(), ocd("A+ B- A- B+ | ").canonical_form());
    }

    #[test]
    fn canonical_component_permutation() {
        assert_eq!(arrow("A+o B-u | A-u B+o").canonical_form(), arrow("Q+o P-u | P+o Q-u").canonical_form());
    }

    #[test]
    fn canonical_is_a_valid_code() {
        let c = arrow("A+o B+u C-u A-u C+o B-o");
        let canon = c.canonical_form();
        let back = DiagramCode::parse(&canon, CodeKind::Arrow).unwrap();
        assert_eq!(back.canonical_form(), canon);
    }

    #[test]
    fn standard_gauss() {
        assert_eq!(DiagramCode::from_standard_gauss("O1+ U1+").unwrap().serialize(), "A+o A-u");
        assert_eq!(
            DiagramCode::from_standard_gauss("O1+ O2+ U1+ U2+").unwrap().serialize(),
            "A+o B+o A-u B-u"
        );
        assert!(matches!(DiagramCode::from_standard_gauss("O1+ U1-"), Err(Error::BadGaussCrossing(..))));
        assert!(matches!(DiagramCode::from_standard_gauss("O1+ O1+"), Err(Error::BadGaussCrossing(..))));
    }

    #[test]
    fn chord_labels() {
        assert_eq!(chord_label(0), "A");
        assert_eq!(chord_label(25), "Z");
        assert_eq!(chord_label(26), "A1");
    }
}
