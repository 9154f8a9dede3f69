//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use vknot::bracket::{a_smoothing, Smoothing};
use vknot::codes::{chord_label, CodeKind, DiagramCode, Endpoint, Pos, Role, Sign};
use vknot::moves::{apply_move, enumerate_moves, MoveInstance, MoveKind};
use vknot::poly::{LaurentA, LaurentST, STMatrix};
use vknot::{ArrowDiagram, Diagram};

/// A random valid code with `n` chords spread over `components` circles.
pub fn random_code(rng: &mut impl Rng, kind: CodeKind, n: usize, components: usize) -> DiagramCode {
    let mut slots: Vec<(usize, bool)> = (0..n).flat_map(|c| [(c, false), (c, true)]).collect();
    slots.shuffle(rng);
    let signs: Vec<Sign> = (0..n).map(|_| if rng.gen() { Sign::Plus } else { Sign::Minus }).collect();
    let over_first: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let mut comps = vec![Vec::new(); components.max(1)];
    for (chord, second) in slots {
        let sign = if second { -signs[chord] } else { signs[chord] };
        let role = match kind {
            CodeKind::Ocd => None,
            CodeKind::Arrow => Some(if second ^ over_first[chord] { Role::Over } else { Role::Under }),
        };
        let k = rng.gen_range(0..comps.len());
        comps[k].push(Endpoint { chord, sign, role });
    }
    DiagramCode::new(kind, comps, (0..n).map(chord_label).collect()).unwrap()
}

/// A random re-encoding: rotated components, shuffled components, renamed chords.
pub fn random_reencoding(rng: &mut impl Rng, code: &DiagramCode) -> DiagramCode {
    let n = code.num_chords();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut comps: Vec<Vec<Endpoint>> = code
        .components()
        .iter()
        .map(|c| {
            let mut c: Vec<Endpoint> = c.iter().map(|e| Endpoint { chord: perm[e.chord], ..*e }).collect();
            if !c.is_empty() {
                let r = rng.gen_range(0..c.len());
                c.rotate_left(r);
            }
            c
        })
        .collect();
    comps.shuffle(rng);
    let names = (0..n).map(|i| format!("N{}", n - i)).collect();
    DiagramCode::new(code.kind(), comps, names).unwrap()
}

/// Orbit membership by brute force: tries every component matching and
/// rotation, building the chord bijection as it goes.
pub fn same_orbit(x: &DiagramCode, y: &DiagramCode) -> bool {
    if x.num_components() != y.num_components() || x.num_chords() != y.num_chords() || x.kind() != y.kind() {
        return false;
    }
    let k = x.num_components();
    let mut used = vec![false; k];
    let mut map = vec![usize::MAX; x.num_chords()];
    let mut inv = vec![usize::MAX; x.num_chords()];
    assign(x, y, 0, &mut used, &mut map, &mut inv)
}

fn assign(x: &DiagramCode, y: &DiagramCode, i: usize, used: &mut [bool], map: &mut Vec<usize>, inv: &mut Vec<usize>) -> bool {
    if i == x.num_components() {
        return true;
    }
    let cx = &x.components()[i];
    for j in 0..y.num_components() {
        if used[j] || y.components()[j].len() != cx.len() {
            continue;
        }
        let cy = &y.components()[j];
        for r in 0..cx.len().max(1) {
            let (saved_map, saved_inv) = (map.clone(), inv.clone());
            let mut ok = true;
            for (t, ex) in cx.iter().enumerate() {
                let ey = cy[(t + r) % cy.len()];
                if ex.sign != ey.sign || ex.role != ey.role {
                    ok = false;
                    break;
                }
                match (map[ex.chord], inv[ey.chord]) {
                    (usize::MAX, usize::MAX) => {
                        map[ex.chord] = ey.chord;
                        inv[ey.chord] = ex.chord;
                    }
                    (a, b) if a == ey.chord && b == ex.chord => {}
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                used[j] = true;
                if assign(x, y, i + 1, used, map, inv) {
                    return true;
                }
                used[j] = false;
            }
            *map = saved_map;
            *inv = saved_inv;
        }
    }
    false
}

/// The bracket by recursive skein expansion, one crossing at a time, with
/// loops counted by walking the final 2-regular port graph.
pub fn skein_bracket(ad: &ArrowDiagram) -> LaurentA {
    let code = ad.code();
    let ports: Vec<Pos> = code.positions().collect();
    let index = |p: Pos| ports.iter().position(|&q| q == p).unwrap();
    // port 2i is the incoming end at endpoint i, 2i+1 the outgoing end
    let mut strand = vec![usize::MAX; 2 * ports.len()];
    for (i, &p) in ports.iter().enumerate() {
        let j = index(code.next(p));
        strand[2 * i + 1] = 2 * j;
        strand[2 * j] = 2 * i + 1;
    }
    let crossings: Vec<(usize, usize, Sign)> = (0..code.num_chords())
        .map(|c| (index(ad.base(c)), index(ad.tip(c)), ad.crossing_sign(c)))
        .collect();
    let empty = code.components().iter().filter(|c| c.is_empty()).count();
    let mut joins = vec![usize::MAX; strand.len()];
    expand(&crossings, 0, &strand, &mut joins, empty)
}

fn expand(crossings: &[(usize, usize, Sign)], k: usize, strand: &[usize], joins: &mut Vec<usize>, empty: usize) -> LaurentA {
    if k == crossings.len() {
        let loops = count_loops(strand, joins) + empty;
        let delta = LaurentA::from_terms([(2, -1), (-2, -1)]);
        return delta.pow(loops as u32 - 1);
    }
    let (o, u, sign) = crossings[k];
    let a = a_smoothing(sign);
    let b = if a == Smoothing::Oriented { Smoothing::Unoriented } else { Smoothing::Oriented };
    let mut total = LaurentA::zero();
    for (smoothing, weight) in [(a, 1), (b, -1)] {
        let (p1, p2) = match smoothing {
            Smoothing::Oriented => ((2 * o, 2 * u + 1), (2 * u, 2 * o + 1)),
            Smoothing::Unoriented => ((2 * o, 2 * u), (2 * o + 1, 2 * u + 1)),
        };
        for (x, y) in [p1, p2] {
            joins[x] = y;
            joins[y] = x;
        }
        let sub = expand(crossings, k + 1, strand, joins, empty);
        total += &(&LaurentA::mono(1, weight) * &sub);
    }
    total
}

fn count_loops(strand: &[usize], joins: &[usize]) -> usize {
    let mut seen = vec![false; strand.len()];
    let mut loops = 0;
    for start in 0..strand.len() {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut x = start;
        loop {
            seen[x] = true;
            let y = strand[x];
            seen[y] = true;
            x = joins[y];
            if x == start {
                break;
            }
        }
    }
    loops
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &STMatrix) -> LaurentST {
    let n = m.rows();
    let rows: Vec<Vec<LaurentST>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let cols: Vec<usize> = (0..n).collect();
    laplace(&rows, 0, &cols)
}

fn laplace(rows: &[Vec<LaurentST>], r: usize, cols: &[usize]) -> LaurentST {
    if cols.is_empty() {
        return LaurentST::one();
    }
    let mut total = LaurentST::zero();
    for (k, &c) in cols.iter().enumerate() {
        if rows[r][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &rows[r][c] * &laplace(rows, r + 1, &rest);
        total += &if k % 2 == 0 { term } else { -term };
    }
    total
}

/// Oriented intersection of two straight chords between points on the unit
/// circle, from the sign of the cross product of their directions.
pub fn geometric_intersection(m: usize, f: (usize, usize), g: (usize, usize)) -> i64 {
    let pt = |k: usize| {
        let a = std::f64::consts::TAU * k as f64 / m as f64;
        (a.cos(), a.sin())
    };
    let (p1, p2, q1, q2) = (pt(f.0), pt(f.1), pt(g.0), pt(g.1));
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let d1 = cross(p1, p2, q1);
    let d2 = cross(p1, p2, q2);
    let d3 = cross(q1, q2, p1);
    let d4 = cross(q1, q2, p2);
    if d1 * d2 >= 0.0 || d3 * d4 >= 0.0 {
        return 0;
    }
    let df = (p2.0 - p1.0, p2.1 - p1.1);
    let dg = (q2.0 - q1.0, q2.1 - q1.1);
    let z = df.0 * dg.1 - df.1 * dg.0;
    if z > 0.0 {
        1
    } else {
        -1
    }
}

/// One random Reidemeister move of the diagram's kind: a kind is drawn
/// uniformly among the applicable ones, then an instance uniformly.
pub fn random_move<D: Diagram>(rng: &mut impl Rng, d: &D, max_chords: usize) -> Option<(MoveInstance, D)> {
    let kinds = MoveKind::reidemeister(D::KIND);
    let mut options: Vec<Vec<MoveInstance>> = kinds
        .iter()
        .filter(|k| {
            let adds = matches!(k, MoveKind::Ad1Add | MoveKind::Flat1Add) as usize
                + 2 * matches!(k, MoveKind::Ad2Add | MoveKind::Flat2Add) as usize;
            d.num_chords() + adds <= max_chords
        })
        .map(|k| enumerate_moves(d, &[*k]))
        .filter(|v| !v.is_empty())
        .collect();
    if options.is_empty() {
        return None;
    }
    let i = rng.gen_range(0..options.len());
    let list = options.swap_remove(i);
    let m = list.choose(rng)?.clone();
    let next = apply_move(d, &m).expect("enumerated moves apply");
    Some((m, next))
}
