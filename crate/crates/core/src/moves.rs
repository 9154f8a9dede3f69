//! Reidemeister moves on codes: the arrow diagram moves AD1-AD3, the flat
//! moves FLAT1-FLAT3, the bracket-preserving arrow flip, and a bounded
//! breadth-first reduction search.
//!
//! Virtual moves do not change a code, so they have no representation here.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::codes::{chord_label, CodeKind, DiagramCode, Endpoint, Pos, Role, Sign};
use crate::diagram::{ArrowDiagram, Diagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    #[serde(rename = "AD1-add")]
    Ad1Add,
    #[serde(rename = "AD1-remove")]
    Ad1Remove,
    #[serde(rename = "AD2-add")]
    Ad2Add,
    #[serde(rename = "AD2-remove")]
    Ad2Remove,
    #[serde(rename = "AD3")]
    Ad3,
    #[serde(rename = "FLIP")]
    Flip,
    #[serde(rename = "FLAT1-add")]
    Flat1Add,
    #[serde(rename = "FLAT1-remove")]
    Flat1Remove,
    #[serde(rename = "FLAT2-add")]
    Flat2Add,
    #[serde(rename = "FLAT2-remove")]
    Flat2Remove,
    #[serde(rename = "FLAT3")]
    Flat3,
}

impl MoveKind {
    pub const ALL: [MoveKind; 11] = [
        MoveKind::Ad1Add,
        MoveKind::Ad1Remove,
        MoveKind::Ad2Add,
        MoveKind::Ad2Remove,
        MoveKind::Ad3,
        MoveKind::Flip,
        MoveKind::Flat1Add,
        MoveKind::Flat1Remove,
        MoveKind::Flat2Add,
        MoveKind::Flat2Remove,
        MoveKind::Flat3,
    ];

    /// Reidemeister moves for arrow diagrams. The flip is excluded: it can change the knot.
    pub const AD: [MoveKind; 5] =
        [MoveKind::Ad1Add, MoveKind::Ad1Remove, MoveKind::Ad2Add, MoveKind::Ad2Remove, MoveKind::Ad3];

    pub const FLAT: [MoveKind; 5] =
        [MoveKind::Flat1Add, MoveKind::Flat1Remove, MoveKind::Flat2Add, MoveKind::Flat2Remove, MoveKind::Flat3];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Ad1Add => "AD1-add",
            MoveKind::Ad1Remove => "AD1-remove",
            MoveKind::Ad2Add => "AD2-add",
            MoveKind::Ad2Remove => "AD2-remove",
            MoveKind::Ad3 => "AD3",
            MoveKind::Flip => "FLIP",
            MoveKind::Flat1Add => "FLAT1-add",
            MoveKind::Flat1Remove => "FLAT1-remove",
            MoveKind::Flat2Add => "FLAT2-add",
            MoveKind::Flat2Remove => "FLAT2-remove",
            MoveKind::Flat3 => "FLAT3",
        }
    }

    pub fn applies_to(self, kind: CodeKind) -> bool {
        let arrow = matches!(
            self,
            MoveKind::Ad1Add | MoveKind::Ad1Remove | MoveKind::Ad2Add | MoveKind::Ad2Remove | MoveKind::Ad3 | MoveKind::Flip
        );
        arrow == (kind == CodeKind::Arrow)
    }

    /// Reidemeister moves available for a diagram kind.
    pub fn reidemeister(kind: CodeKind) -> &'static [MoveKind] {
        match kind {
            CodeKind::Arrow => &Self::AD,
            CodeKind::Ocd => &Self::FLAT,
        }
    }

    fn chords_added(self) -> usize {
        match self {
            MoveKind::Ad1Add | MoveKind::Flat1Add => 1,
            MoveKind::Ad2Add | MoveKind::Flat2Add => 2,
            _ => 0,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadRecord(format!("unknown move kind {s}")))
    }
}

/// An insertion point: before endpoint `gap` of component `comp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gap {
    pub comp: usize,
    pub gap: usize,
}

/// Which AD3 configuration a triangle move matches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ad3Variant {
    /// `A-u B-u … C+o A+o … C-u B+o`
    First,
    /// the first variant with the crossing of `B` switched
    Second,
}

/// A located move. Chord fields index the diagram the move is applied to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MoveInstance {
    /// Remove a chord with adjacent endpoints.
    RemoveKink { flat: bool, chord: usize },
    /// Insert two adjacent endpoints of a new chord; the first carries `first_sign`.
    /// For arrows `first_role` says whether the base comes first.
    AddKink { at: Gap, first_sign: Sign, first_role: Option<Role> },
    /// Remove two chords forming a bigon.
    RemoveBigon { flat: bool, chords: (usize, usize) },
    /// Insert `[a^eps, b^-eps]` at `first` (the arrow bases) and `[a^-eps, b^eps]`
    /// at `second` (the tips), the latter reversed when `reversed`. When both gaps
    /// coincide, `second_first` puts the second pair in front.
    AddBigon { arrows: bool, first: Gap, second: Gap, eps: Sign, reversed: bool, second_first: bool },
    /// Swap the three adjacent endpoint pairs of a triangle on chords `(A, B, C)`.
    /// `forward` is true when the diagram shows the unswapped side of the template.
    Triangle { variant: Option<Ad3Variant>, chords: [usize; 3], forward: bool },
    /// Reverse an arrow and negate both of its endpoint signs.
    Flip { chord: usize },
}

impl MoveInstance {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveInstance::RemoveKink { flat: false, .. } => MoveKind::Ad1Remove,
            MoveInstance::RemoveKink { flat: true, .. } => MoveKind::Flat1Remove,
            MoveInstance::AddKink { first_role: Some(_), .. } => MoveKind::Ad1Add,
            MoveInstance::AddKink { first_role: None, .. } => MoveKind::Flat1Add,
            MoveInstance::RemoveBigon { flat: false, .. } => MoveKind::Ad2Remove,
            MoveInstance::RemoveBigon { flat: true, .. } => MoveKind::Flat2Remove,
            MoveInstance::AddBigon { arrows: true, .. } => MoveKind::Ad2Add,
            MoveInstance::AddBigon { arrows: false, .. } => MoveKind::Flat2Add,
            MoveInstance::Triangle { variant: Some(_), .. } => MoveKind::Ad3,
            MoveInstance::Triangle { variant: None, .. } => MoveKind::Flat3,
            MoveInstance::Flip { .. } => MoveKind::Flip,
        }
    }
}

// Triangle templates: three ordered adjacent pairs of (chord slot, sign, role).
type Token = (usize, Sign, Option<Role>);
type Template = [[Token; 2]; 3];

const M: Sign = Sign::Minus;
const P: Sign = Sign::Plus;
const O: Option<Role> = Some(Role::Over);
const U: Option<Role> = Some(Role::Under);

const AD3_FIRST: Template = [[(0, M, U), (1, M, U)], [(2, P, O), (0, P, O)], [(2, M, U), (1, P, O)]];
const AD3_SECOND: Template = [[(0, M, U), (1, M, O)], [(2, P, O), (0, P, O)], [(2, M, U), (1, P, U)]];
const FLAT3: Template = [[(0, M, None), (1, M, None)], [(2, P, None), (0, P, None)], [(2, M, None), (1, P, None)]];

fn template(variant: Option<Ad3Variant>) -> &'static Template {
    match variant {
        Some(Ad3Variant::First) => &AD3_FIRST,
        Some(Ad3Variant::Second) => &AD3_SECOND,
        None => &FLAT3,
    }
}

struct View<'a> {
    code: &'a DiagramCode,
    cp: Vec<[Pos; 2]>,
}

impl<'a> View<'a> {
    fn new(code: &'a DiagramCode) -> Self {
        View { code, cp: code.chord_positions() }
    }

    fn pos(&self, chord: usize, sign: Sign) -> Pos {
        let [p, q] = self.cp[chord];
        if self.code.at(p).sign == sign {
            p
        } else {
            q
        }
    }

    fn role_pos(&self, chord: usize, role: Role) -> Pos {
        let [p, q] = self.cp[chord];
        if self.code.at(p).role == Some(role) {
            p
        } else {
            q
        }
    }

    fn is_kink(&self, chord: usize) -> bool {
        let [p, q] = self.cp[chord];
        self.code.adjacent(p, q)
    }

    fn is_bigon(&self, a: usize, b: usize) -> bool {
        if a == b {
            return false;
        }
        let flat_ok = self.code.adjacent(self.pos(a, P), self.pos(b, M)) && self.code.adjacent(self.pos(a, M), self.pos(b, P));
        if self.code.kind() == CodeKind::Ocd {
            return flat_ok;
        }
        let sign = |c| self.code.at(self.role_pos(c, Role::Over)).sign;
        sign(a) != sign(b)
            && self.code.adjacent(self.role_pos(a, Role::Over), self.role_pos(b, Role::Over))
            && self.code.adjacent(self.role_pos(a, Role::Under), self.role_pos(b, Role::Under))
    }

    /// Whether the triangle template (or its swapped side) sits at `chords`.
    fn matches(&self, t: &Template, chords: [usize; 3], forward: bool) -> bool {
        t.iter().all(|pair| {
            let (x, y) = if forward { (pair[0], pair[1]) } else { (pair[1], pair[0]) };
            let p = self.pos(chords[x.0], x.1);
            let q = self.pos(chords[y.0], y.1);
            p.comp == q.comp
                && self.code.next(p) == q
                && p != q
                && self.code.at(p).role == x.2
                && self.code.at(q).role == y.2
        })
    }
}

fn gaps(code: &DiagramCode) -> impl Iterator<Item = Gap> + '_ {
    code.components()
        .iter()
        .enumerate()
        .flat_map(|(comp, c)| (0..c.len().max(1)).map(move |gap| Gap { comp, gap }))
}

fn gap_valid(code: &DiagramCode, g: Gap) -> bool {
    g.comp < code.num_components() && g.gap < code.components()[g.comp].len().max(1)
}

/// Every applicable instance of the requested kinds. Kinds that do not apply
/// to the diagram's code kind contribute nothing.
pub fn enumerate_moves<D: Diagram>(d: &D, kinds: &[MoveKind]) -> Vec<MoveInstance> {
    enumerate_code_moves(d.code(), kinds)
}

fn enumerate_code_moves(code: &DiagramCode, kinds: &[MoveKind]) -> Vec<MoveInstance> {
    let view = View::new(code);
    let n = code.num_chords();
    let flat = code.kind() == CodeKind::Ocd;
    let mut out = Vec::new();
    for &kind in kinds {
        if !kind.applies_to(code.kind()) {
            continue;
        }
        match kind {
            MoveKind::Ad1Remove | MoveKind::Flat1Remove => {
                out.extend((0..n).filter(|&c| view.is_kink(c)).map(|chord| MoveInstance::RemoveKink { flat, chord }));
            }
            MoveKind::Ad1Add | MoveKind::Flat1Add => {
                let roles: &[Option<Role>] = if flat { &[None] } else { &[O, U] };
                for at in gaps(code) {
                    for first_sign in Sign::both() {
                        for &first_role in roles {
                            out.push(MoveInstance::AddKink { at, first_sign, first_role });
                        }
                    }
                }
            }
            MoveKind::Ad2Remove | MoveKind::Flat2Remove => {
                for a in 0..n {
                    for b in a + 1..n {
                        if view.is_bigon(a, b) {
                            out.push(MoveInstance::RemoveBigon { flat, chords: (a, b) });
                        }
                    }
                }
            }
            MoveKind::Ad2Add | MoveKind::Flat2Add => {
                let all: Vec<Gap> = gaps(code).collect();
                for &first in &all {
                    for &second in &all {
                        for eps in Sign::both() {
                            for reversed in [false, true] {
                                let orders: &[bool] = if first == second { &[false, true] } else { &[false] };
                                for &second_first in orders {
                                    out.push(MoveInstance::AddBigon { arrows: !flat, first, second, eps, reversed, second_first });
                                }
                            }
                        }
                    }
                }
            }
            MoveKind::Ad3 | MoveKind::Flat3 => {
                let variants: &[Option<Ad3Variant>] =
                    if flat { &[None] } else { &[Some(Ad3Variant::First), Some(Ad3Variant::Second)] };
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            if a == b || b == c || a == c {
                                continue;
                            }
                            for &variant in variants {
                                for forward in [true, false] {
                                    if view.matches(template(variant), [a, b, c], forward) {
                                        out.push(MoveInstance::Triangle { variant, chords: [a, b, c], forward });
                                    }
                                }
                            }
                        }
                    }
                }
            }
            MoveKind::Flip => out.extend((0..n).map(|chord| MoveInstance::Flip { chord })),
        }
    }
    out
}

fn check_applicable(code: &DiagramCode, m: &MoveInstance) -> Result<()> {
    let inapplicable = || Error::InapplicableMove(format!("{} on {}", m.kind(), code));
    if !m.kind().applies_to(code.kind()) {
        return Err(inapplicable());
    }
    let n = code.num_chords();
    let view = View::new(code);
    let ok = match *m {
        MoveInstance::RemoveKink { chord, .. } => chord < n && view.is_kink(chord),
        MoveInstance::AddKink { at, .. } => gap_valid(code, at),
        MoveInstance::RemoveBigon { chords: (a, b), .. } => a < n && b < n && view.is_bigon(a, b),
        MoveInstance::AddBigon { first, second, second_first, .. } => {
            gap_valid(code, first) && gap_valid(code, second) && (!second_first || first == second)
        }
        MoveInstance::Triangle { variant, chords, forward } => {
            chords.iter().all(|&c| c < n)
                && chords[0] != chords[1]
                && chords[1] != chords[2]
                && chords[0] != chords[2]
                && view.matches(template(variant), chords, forward)
        }
        MoveInstance::Flip { chord } => chord < n,
    };
    if ok {
        Ok(())
    } else {
        Err(inapplicable())
    }
}

/// Applies a move. Removed chords are dropped and the remaining ones
/// renumbered in order; added chords get the first unused names `A, B, ...`.
pub fn apply_move<D: Diagram>(d: &D, m: &MoveInstance) -> Result<D> {
    check_applicable(d.code(), m)?;
    Ok(D::from_code_unchecked(apply_unchecked(d.code(), m)))
}

fn apply_unchecked(code: &DiagramCode, m: &MoveInstance) -> DiagramCode {
    let n = code.num_chords();
    let ep = |chord, sign, role| Endpoint { chord, sign, role };
    match *m {
        MoveInstance::RemoveKink { chord, .. } => remove_chords(code, &[chord]),
        MoveInstance::RemoveBigon { chords: (a, b), .. } => remove_chords(code, &[a, b]),
        MoveInstance::AddKink { at, first_sign, first_role } => {
            let pair = vec![ep(n, first_sign, first_role), ep(n, -first_sign, first_role.map(Role::other))];
            insert(code, vec![(at, pair)], 1)
        }
        MoveInstance::AddBigon { arrows, first, second, eps, reversed, second_first } => {
            let (base, tip) = if arrows { (O, U) } else { (None, None) };
            let (a, b) = (n, n + 1);
            let p1 = vec![ep(a, eps, base), ep(b, -eps, base)];
            let mut p2 = vec![ep(a, -eps, tip), ep(b, eps, tip)];
            if reversed {
                p2.reverse();
            }
            let inserts = if second_first { vec![(second, p2), (first, p1)] } else { vec![(first, p1), (second, p2)] };
            insert(code, inserts, 2)
        }
        MoveInstance::Triangle { variant, chords, forward } => {
            let view = View::new(code);
            let (kind, mut comps, names) = code.clone().into_parts();
            for pair in template(variant) {
                let x = if forward { pair[0] } else { pair[1] };
                let p = view.pos(chords[x.0], x.1);
                let q = code.next(p);
                comps[p.comp].swap(p.idx, q.idx);
            }
            DiagramCode::from_parts_unchecked(kind, comps, names)
        }
        MoveInstance::Flip { chord } => {
            let (kind, comps, names) = code.clone().into_parts();
            let comps = comps
                .into_iter()
                .map(|c| {
                    c.into_iter()
                        .map(|e| {
                            if e.chord == chord {
                                Endpoint { chord, sign: -e.sign, role: e.role.map(Role::other) }
                            } else {
                                e
                            }
                        })
                        .collect()
                })
                .collect();
            DiagramCode::from_parts_unchecked(kind, comps, names)
        }
    }
}

fn remove_chords(code: &DiagramCode, chords: &[usize]) -> DiagramCode {
    let (kind, comps, names) = code.clone().into_parts();
    let mut renumber = vec![usize::MAX; names.len()];
    let mut kept = Vec::new();
    for (i, name) in names.into_iter().enumerate() {
        if !chords.contains(&i) {
            renumber[i] = kept.len();
            kept.push(name);
        }
    }
    let comps = comps
        .into_iter()
        .map(|c| {
            c.into_iter()
                .filter(|e| renumber[e.chord] != usize::MAX)
                .map(|e| Endpoint { chord: renumber[e.chord], ..e })
                .collect()
        })
        .collect();
    DiagramCode::from_parts_unchecked(kind, comps, kept)
}

fn fresh_names(code: &DiagramCode, count: usize) -> Vec<String> {
    (0..)
        .map(chord_label)
        .filter(|name| !code.names().contains(name))
        .take(count)
        .collect()
}

/// Inserts runs of endpoints before the given gaps; runs at the same gap keep their order.
fn insert(code: &DiagramCode, inserts: Vec<(Gap, Vec<Endpoint>)>, new_chords: usize) -> DiagramCode {
    let mut names = code.names().to_vec();
    names.extend(fresh_names(code, new_chords));
    let comps = code
        .components()
        .iter()
        .enumerate()
        .map(|(ci, comp)| {
            let mut out = Vec::with_capacity(comp.len() + 4);
            for i in 0..comp.len().max(1) {
                for (g, run) in &inserts {
                    if g.comp == ci && g.gap == i {
                        out.extend(run.iter().copied());
                    }
                }
                if let Some(e) = comp.get(i) {
                    out.push(*e);
                }
            }
            out
        })
        .collect();
    DiagramCode::from_parts_unchecked(code.kind(), comps, names)
}

/// An instance that undoes `m` on `apply_move(d, m)`, up to canonical form.
pub fn inverse<D: Diagram>(d: &D, m: &MoveInstance) -> Result<MoveInstance> {
    check_applicable(d.code(), m)?;
    let n = d.num_chords();
    Ok(match *m {
        MoveInstance::AddKink { first_role, .. } => MoveInstance::RemoveKink { flat: first_role.is_none(), chord: n },
        MoveInstance::AddBigon { arrows, .. } => MoveInstance::RemoveBigon { flat: !arrows, chords: (n, n + 1) },
        MoveInstance::Triangle { variant, chords, forward } => MoveInstance::Triangle { variant, chords, forward: !forward },
        MoveInstance::Flip { chord } => MoveInstance::Flip { chord },
        MoveInstance::RemoveKink { .. } | MoveInstance::RemoveBigon { .. } => {
            let after = apply_unchecked(d.code(), m);
            let target = d.canonical_form();
            let kind = if m.kind() == MoveKind::Ad1Remove || m.kind() == MoveKind::Flat1Remove {
                if d.code().kind() == CodeKind::Arrow { MoveKind::Ad1Add } else { MoveKind::Flat1Add }
            } else if d.code().kind() == CodeKind::Arrow {
                MoveKind::Ad2Add
            } else {
                MoveKind::Flat2Add
            };
            enumerate_code_moves(&after, &[kind])
                .into_iter()
                .find(|c| apply_unchecked(&after, c).canonical_form() == target)
                .expect("every removal is undone by some insertion")
        }
    })
}

/// Reverses the arrow of `chord` and negates its endpoint signs. The
/// crossing sign and the bracket are preserved; the knot may change.
pub fn jones_flip(ad: &ArrowDiagram, chord: usize) -> Result<ArrowDiagram> {
    if chord >= ad.num_chords() {
        return Err(Error::UnknownChord(format!("#{chord}")));
    }
    apply_move(ad, &MoveInstance::Flip { chord })
}

pub fn jones_flip_named(ad: &ArrowDiagram, name: &str) -> Result<ArrowDiagram> {
    let chord = ad.code().chord_index(name).ok_or_else(|| Error::UnknownChord(name.into()))?;
    jones_flip(ad, chord)
}

/// A move as a `{kind, site, params}` record with chords referred to by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub site: Value,
    pub params: Value,
}

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

impl MoveInstance {
    /// The replayable record of this move on `code`.
    pub fn to_record(&self, code: &DiagramCode) -> MoveRecord {
        let name = |c: usize| code.name(c).to_string();
        let gap = |g: Gap| json!([g.comp, g.gap]);
        let (site, params) = match *self {
            MoveInstance::RemoveKink { chord, .. } => (json!({ "chords": [name(chord)] }), json!({})),
            MoveInstance::RemoveBigon { chords: (a, b), .. } => (json!({ "chords": [name(a), name(b)] }), json!({})),
            MoveInstance::Flip { chord } => (json!({ "chords": [name(chord)] }), json!({})),
            MoveInstance::AddKink { at, first_sign, first_role } => {
                let mut params = json!({ "sign": sign_str(first_sign) });
                if let Some(r) = first_role {
                    params["base_first"] = json!(r == Role::Over);
                }
                (json!({ "gaps": [gap(at)] }), params)
            }
            MoveInstance::AddBigon { first, second, eps, reversed, second_first, .. } => (
                json!({ "gaps": [gap(first), gap(second)] }),
                json!({ "eps": sign_str(eps), "reversed": reversed, "second_first": second_first }),
            ),
            MoveInstance::Triangle { variant, chords, forward } => {
                let mut params = json!({ "forward": forward });
                if let Some(v) = variant {
                    params["variant"] = json!(if v == Ad3Variant::First { 1 } else { 2 });
                }
                (json!({ "chords": chords.map(name) }), params)
            }
        };
        MoveRecord { kind: self.kind(), site, params }
    }

    /// Resolves a record against `code`.
    pub fn from_record(code: &DiagramCode, r: &MoveRecord) -> Result<MoveInstance> {
        let bad = |what: &str| Error::BadRecord(format!("{}: {what}", r.kind));
        let chords = || -> Result<Vec<usize>> {
            r.site["chords"]
                .as_array()
                .ok_or_else(|| bad("missing site.chords"))?
                .iter()
                .map(|v| {
                    let s = v.as_str().ok_or_else(|| bad("chord names must be strings"))?;
                    code.chord_index(s).ok_or_else(|| Error::UnknownChord(s.into()))
                })
                .collect()
        };
        let gaps = || -> Result<Vec<Gap>> {
            r.site["gaps"]
                .as_array()
                .ok_or_else(|| bad("missing site.gaps"))?
                .iter()
                .map(|v| {
                    let pair = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("gap must be [comp, index]"))?;
                    let num = |x: &Value| x.as_u64().map(|u| u as usize).ok_or_else(|| bad("gap entries must be integers"));
                    Ok(Gap { comp: num(&pair[0])?, gap: num(&pair[1])? })
                })
                .collect()
        };
        let sign = |key: &str| match r.params[key].as_str() {
            Some("+") => Ok(Sign::Plus),
            Some("-") => Ok(Sign::Minus),
            _ => Err(bad(&format!("params.{key} must be \"+\" or \"-\""))),
        };
        let flag = |key: &str| r.params[key].as_bool().ok_or_else(|| bad(&format!("params.{key} must be a boolean")));
        let flat = !r.kind.applies_to(CodeKind::Arrow);
        let m = match r.kind {
            MoveKind::Ad1Remove | MoveKind::Flat1Remove => match chords()?[..] {
                [chord] => MoveInstance::RemoveKink { flat, chord },
                _ => return Err(bad("expected one chord")),
            },
            MoveKind::Flip => match chords()?[..] {
                [chord] => MoveInstance::Flip { chord },
                _ => return Err(bad("expected one chord")),
            },
            MoveKind::Ad2Remove | MoveKind::Flat2Remove => match chords()?[..] {
                [a, b] => MoveInstance::RemoveBigon { flat, chords: (a, b) },
                _ => return Err(bad("expected two chords")),
            },
            MoveKind::Ad1Add | MoveKind::Flat1Add => match gaps()?[..] {
                [at] => MoveInstance::AddKink {
                    at,
                    first_sign: sign("sign")?,
                    first_role: if flat {
                        None
                    } else if flag("base_first")? {
                        O
                    } else {
                        U
                    },
                },
                _ => return Err(bad("expected one gap")),
            },
            MoveKind::Ad2Add | MoveKind::Flat2Add => match gaps()?[..] {
                [first, second] => MoveInstance::AddBigon {
                    arrows: !flat,
                    first,
                    second,
                    eps: sign("eps")?,
                    reversed: flag("reversed")?,
                    second_first: flag("second_first")?,
                },
                _ => return Err(bad("expected two gaps")),
            },
            MoveKind::Ad3 | MoveKind::Flat3 => match chords()?[..] {
                [a, b, c] => MoveInstance::Triangle {
                    variant: match (flat, r.params["variant"].as_u64()) {
                        (true, _) => None,
                        (false, Some(1)) => Some(Ad3Variant::First),
                        (false, Some(2)) => Some(Ad3Variant::Second),
                        _ => return Err(bad("params.variant must be 1 or 2")),
                    },
                    chords: [a, b, c],
                    forward: flag("forward")?,
                },
                _ => return Err(bad("expected three chords")),
            },
        };
        Ok(m)
    }
}

/// Replays a certified move path.
pub fn replay<D: Diagram>(d: &D, records: &[MoveRecord]) -> Result<D> {
    let mut cur = d.clone();
    for r in records {
        let m = MoveInstance::from_record(cur.code(), r)?;
        cur = apply_move(&cur, &m)?;
    }
    Ok(cur)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStatus {
    /// At least one reduction was found.
    Reduced,
    /// Every diagram within the chord bound was visited without finding a reduction.
    Irreducible,
    /// The step budget ran out before any reduction was found.
    Exhausted,
}

#[derive(Clone, Debug)]
pub struct ReduceOutcome<D> {
    pub status: SearchStatus,
    pub diagram: D,
    /// Moves leading from the input to `diagram`, as replayable records.
    pub path: Vec<MoveRecord>,
    /// Diagrams expanded in total.
    pub steps: usize,
    /// Whether the last round stopped on the budget rather than by exhausting the space.
    pub budget_exhausted: bool,
}

enum Round<D> {
    Found(D, Vec<MoveRecord>),
    Irreducible,
    Exhausted,
}

/// Repeated breadth-first search for a diagram with fewer chords, using the
/// Reidemeister moves of the diagram's kind. Intermediate diagrams never
/// exceed `max_chords`; `max_steps` bounds the total number of expanded
/// diagrams. Exhaustion is not a proof of irreducibility.
pub fn reduce_search<D: Diagram>(d: &D, max_chords: usize, max_steps: usize) -> ReduceOutcome<D> {
    let kinds = MoveKind::reidemeister(D::KIND);
    let mut current = d.clone();
    let mut path = Vec::new();
    let mut steps = 0;
    let mut budget_exhausted = false;
    while current.num_chords() > 0 {
        match bfs_round(&current, kinds, max_chords, max_steps, &mut steps) {
            Round::Found(next, moves) => {
                path.extend(moves);
                current = next;
            }
            Round::Irreducible => break,
            Round::Exhausted => {
                budget_exhausted = true;
                break;
            }
        }
    }
    let status = if current.num_chords() < d.num_chords() {
        SearchStatus::Reduced
    } else if budget_exhausted {
        SearchStatus::Exhausted
    } else {
        SearchStatus::Irreducible
    };
    ReduceOutcome { status, diagram: current, path, steps, budget_exhausted }
}

fn bfs_round<D: Diagram>(start: &D, kinds: &[MoveKind], max_chords: usize, max_steps: usize, steps: &mut usize) -> Round<D> {
    struct Node<D> {
        diagram: D,
        parent: usize,
        record: Option<MoveRecord>,
    }
    let target = start.num_chords();
    let mut nodes = vec![Node { diagram: start.clone(), parent: 0, record: None }];
    let mut seen: HashSet<String> = HashSet::from([start.canonical_form()]);
    let mut queue = VecDeque::from([0usize]);

    while let Some(i) = queue.pop_front() {
        if *steps >= max_steps {
            return Round::Exhausted;
        }
        *steps += 1;
        let room = max_chords.saturating_sub(nodes[i].diagram.num_chords());
        let allowed: Vec<MoveKind> = kinds.iter().copied().filter(|k| k.chords_added() <= room).collect();
        for m in enumerate_moves(&nodes[i].diagram, &allowed) {
            let code = nodes[i].diagram.code();
            let child = D::from_code_unchecked(apply_unchecked(code, &m));
            if !seen.insert(child.canonical_form()) {
                continue;
            }
            let record = Some(m.to_record(code));
            let found = child.num_chords() < target;
            nodes.push(Node { diagram: child, parent: i, record });
            let idx = nodes.len() - 1;
            if found {
                let mut path = Vec::new();
                let mut k = idx;
                while k != 0 {
                    path.push(nodes[k].record.clone().unwrap());
                    k = nodes[k].parent;
                }
                path.reverse();
                return Round::Found(nodes.swap_remove(idx).diagram, path);
            }
            queue.push_back(idx);
        }
    }
    Round::Irreducible
}
