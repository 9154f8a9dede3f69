//! Bracket, normalized bracket and Jones polynomial for the corpus knots.

use vknot::bracket::{f_polynomial, jones, kauffman_bracket};
use vknot::families::{example_names, named_example};

fn main() {
    for name in example_names() {
        let named = named_example(name).unwrap();
        let Some(d) = named.as_arrow() else { continue };
        println!("{name:16} {d}");
        println!("  <K> = {}", kauffman_bracket(d));
        println!("  f   = {}", f_polynomial(d));
        println!("  V   = {}", jones(d));
    }
}
