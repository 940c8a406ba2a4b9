//! Posets of unions of separated tubes of one parity: their order complexes,
//! Möbius functions and a shellability search.
//!
//! cargo run --release --example order_complexes

use tubings::complex::{SimplicialComplex, DEFAULT_FACE_BUDGET as B};
use tubings::fixtures;
use tubings::graph::Collection;
use tubings::homology::betti_reduced;
use tubings::parity::Parity;
use tubings::poset::{s_parity_poset, Exclusion};
use tubings::shelling::{shellable, DEFAULT_SHELLING_BUDGET};

fn main() {
    let g = fixtures::bundled_square();
    let c = Collection::from_compact("1234ab");
    println!("graph {g}, C = {c}");
    for parity in [Parity::Odd, Parity::Even] {
        let p = s_parity_poset(&g, &c, parity, Exclusion::Collection).unwrap();
        let k = p.order_complex();
        println!("{parity:?}: {} elements {:?}", p.len(), p.labels());
        println!("  betti {}, mobius {}", betti_reduced(&k, B).unwrap(), p.mobius());
        println!("  shellable: {:?}", shellable(&k, DEFAULT_SHELLING_BUDGET).unwrap());
    }

    let triangle =
        SimplicialComplex::from_facets(vec!["x".into(), "y".into(), "z".into()], [vec![0, 1], vec![1, 2], vec![0, 2]]);
    println!("boundary of a triangle, shellable: {:?}", shellable(&triangle, DEFAULT_SHELLING_BUDGET).unwrap());
}
