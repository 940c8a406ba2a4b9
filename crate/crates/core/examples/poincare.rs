//! Betti numbers of the real toric manifold by both routes: the sum over all
//! even collections, and 1 + t times the a-polynomials of the graphs H ⋖ G.
//!
//! cargo run --release --example poincare

use tubings::complex::DEFAULT_FACE_BUDGET as B;
use tubings::fixtures;
use tubings::poincare::{lessdot_polynomials, poincare_brute, poincare_reduced};

fn main() {
    for g in [fixtures::bundled_path(), fixtures::two_bundle_tree(), fixtures::cycle(5), fixtures::complete4_with_bundle(3)] {
        let brute = poincare_brute(&g, B).unwrap();
        let reduced = poincare_reduced(&g, B).unwrap();
        assert_eq!(brute, reduced);
        println!("{g}\n  Poin = {reduced}");
        for (h, a) in lessdot_polynomials(&g, B).unwrap() {
            if !a.is_zero() {
                println!("    a({h}) = {a}");
            }
        }
    }
}
