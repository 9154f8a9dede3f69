//! Searching for filamentations, and the obstruction on `D_n`.

use vknot::families::make_dn;
use vknot::filamentation::{enumerate_pairings, find_filamentation, pair_numbers};
use vknot::{Diagram, OrientedChordDiagram};

fn main() {
    let d = OrientedChordDiagram::parse("A+ B+ C- A- C+ B-").unwrap();
    for p in enumerate_pairings(&d).unwrap() {
        println!("{d}: {} -> {:?}", p.display(d.code()), pair_numbers(&d, &p).unwrap());
    }

    for n in 2..=5 {
        let dn = make_dn(n);
        let found = find_filamentation(&dn).unwrap();
        println!("D_{n} = {dn}: {}", if found.is_some() { "filamentation found" } else { "none" });
    }
}
