//! Parity and the flat biquandle on two-component flat links.

use vknot::flat::{flat_relations, is_flat_detected, parity};
use vknot::{Diagram, OrientedChordDiagram};

fn main() {
    for code in ["A+ | A-", "A+ B+ | A- B-", "A+ B- | A- B+", " | "] {
        let d = OrientedChordDiagram::parse(code).unwrap();
        println!("{code:16} parity {}", parity(&d).unwrap());
        for r in flat_relations(&d) {
            println!("  ({}) {} = 0", r.coefficient(), r.generator);
        }
        println!("  detected: {}", is_flat_detected(&d).unwrap());
    }
}
