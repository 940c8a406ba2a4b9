//! Tubes, compatibility and maximal tubings of a small pseudograph.
//!
//! cargo run --example tubings

use tubings::complex::DEFAULT_FACE_BUDGET;
use tubings::fixtures;
use tubings::tube::TubingComplex;

fn main() {
    let g = fixtures::bundled_path();
    let cx = TubingComplex::new(&g).expect("fixture fits in 64 members");
    println!("graph {g}");
    println!("{} tubes:", cx.len());
    for t in cx.tubes() {
        println!("  {t}");
    }

    let tubes = cx.tubes();
    let (a, b) = (&tubes[0], &tubes[2]);
    println!("{a} and {b} compatible: {}", cx.compatible(a, b).unwrap());

    let max = cx.maximal_tubings(DEFAULT_FACE_BUDGET).unwrap();
    println!("{} maximal tubings, each of size {}:", max.len(), cx.dimension());
    for f in &max {
        let names: Vec<String> = f.iter().map(|&i| tubes[i].to_string()).collect();
        println!("  {{{}}}", names.join(", "));
    }
}
