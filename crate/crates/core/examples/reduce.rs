//! Move enumeration and breadth-first reduction.

use vknot::families::{make_dn, make_kn};
use vknot::moves::{enumerate_moves, reduce_search, replay, MoveKind};
use vknot::{ArrowDiagram, Diagram};

fn main() {
    let d = ArrowDiagram::parse("A-u B-u C+o A+o C-u B+o").unwrap();
    for m in enumerate_moves(&d, &[MoveKind::Ad3, MoveKind::Ad2Remove]) {
        let r = m.to_record(d.code());
        println!("{d}: {} {} {}", r.kind.name(), r.site, r.params);
    }

    let k = make_kn(2);
    let out = reduce_search(&k, 6, 10_000);
    println!("K_2 = {k}: {:?} to \"{}\" in {} steps", out.status, out.diagram, out.steps);
    let replayed = replay(&k, &out.path).unwrap();
    assert_eq!(replayed.canonical_form(), out.diagram.canonical_form());

    let dn = make_dn(2);
    let out = reduce_search(&dn, 6, 10_000);
    println!("D_2 = {dn}: {:?} after {} steps", out.status, out.steps);
}
