//! The generalized Alexander polynomial separates the family `K_n`, which the
//! Jones polynomial cannot see.

use vknot::alexander::{g_closed_form_kn, g_polynomial};
use vknot::bracket::f_polynomial;
use vknot::families::make_kn;

fn main() {
    for n in 1..=6 {
        let k = make_kn(n);
        let g = g_polynomial(&k).unwrap();
        assert_eq!(g, g_closed_form_kn(n as u32).unwrap());
        println!("K_{n}: {k}");
        println!("  f = {}", f_polynomial(&k));
        println!("  G = {g}");
    }
}
