//! Odd subcomplexes for every even collection, and the shrinking chain
//! K^odd ⊇ K′ ⊇ K″ that keeps their homology.
//!
//! cargo run --example parity_subcomplexes

use tubings::complex::DEFAULT_FACE_BUDGET as B;
use tubings::fixtures;
use tubings::homology::betti_reduced;
use tubings::parity::{even_collections, is_admissible, is_even_star, ParityContext};
use tubings::tube::TubingComplex;

fn main() {
    let g = fixtures::double_bundle_path();
    let cx = TubingComplex::new(&g).unwrap();
    println!("graph {g}, {} tubes", cx.len());
    println!("{:<10} {:>6} {:>4} {:>4}  {:<16} {:<6} gamma", "C", "|Kodd|", "|K'|", "|K''|", "betti", "even*");
    for c in even_collections(&g).unwrap() {
        let ctx = ParityContext::new(&cx, &c).unwrap();
        let betti = betti_reduced(&ctx.k_odd(), B).unwrap();
        if betti.is_acyclic() {
            continue;
        }
        let gamma = g.gamma(&c).unwrap();
        let star = is_even_star(&g, &c).unwrap();
        assert_eq!(star, is_admissible(&gamma, &c));
        assert_eq!(betti, betti_reduced(&ctx.k_double_prime(), B).unwrap());
        println!(
            "{:<10} {:>6} {:>4} {:>4}  {:<16} {:<6} {gamma}",
            if c.is_empty() { "∅".to_string() } else { c.to_string() },
            ctx.odd_positions().len(),
            ctx.prime_positions().len(),
            ctx.double_prime_positions().len(),
            betti.to_string(),
            star,
        );
    }
    println!("(collections with acyclic odd complexes omitted)");
}
