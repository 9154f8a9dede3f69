//! The families `D_n` and `K_n`, with genus and writhe.

use vknot::families::{make_dn, make_kn};

fn main() {
    for n in 0..=5 {
        let d = make_dn(n);
        let k = make_kn(n);
        println!("D_{n} = {d} (genus {})", d.genus());
        println!("K_{n} = {k} (genus {}, writhe {})", k.genus(), k.writhe());
    }
}
