//! Cross-checks both Poincaré routes and the intermediate statements on
//! every labelled connected pseudograph up to a size given on the command
//! line (nodes, bundles, bundle size; default 3 2 3).
//!
//! cargo run --release --example exhaustive_check -- 4 2 3

use std::time::Instant;

use tubings::complex::DEFAULT_FACE_BUDGET as B;
use tubings::fixtures;
use tubings::poincare::cross_check;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("sizes are integers")).collect();
    let (nodes, bundles, size) = match args.as_slice() {
        [n, b, s] => (*n as u32, *b, *s),
        _ => (3, 2, 3),
    };
    let start = Instant::now();
    let graphs = fixtures::small_connected(nodes, bundles, size);
    let mut failures = 0;
    for g in &graphs {
        let report = cross_check(g, B).unwrap();
        if !report.passed() {
            failures += 1;
            println!("{report:?}");
        }
    }
    println!("{} graphs, {failures} failures, {:.1?}", graphs.len(), start.elapsed());
}
