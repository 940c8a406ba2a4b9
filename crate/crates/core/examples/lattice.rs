//! Lattice data: the normal vectors of the facets, the mod-2 characteristic
//! matrix, the unimodularity check at every vertex, and the Poincaré
//! polynomial recomputed from the row space of the characteristic matrix.
//!
//! cargo run --example lattice

use tubings::complex::DEFAULT_FACE_BUDGET as B;
use tubings::fixtures;
use tubings::lattice::{delzant_check, lambda_matrix, matrix_a, poincare_characteristic, row_space_identification, Designation};
use tubings::tube::TubingComplex;

fn main() {
    let g = fixtures::bundled_path();
    let cx = TubingComplex::new(&g).unwrap();
    let d = Designation::canonical(&g).unwrap();

    let a = matrix_a(&g, &d);
    println!("A, columns {:?}", a.columns);
    for (r, row) in a.rows.iter().zip(&a.entries) {
        println!("  {r:>2} {row:?}");
    }

    let lambda = lambda_matrix(&cx, &d);
    println!("lambda, columns {:?}", lambda.columns);
    for (r, row) in lambda.rows.iter().zip(&lambda.entries) {
        let bits: String = row.iter().map(|&b| if b { '1' } else { '0' }).collect();
        println!("  {r:>2} {bits}");
    }
    println!("rank mod 2: {}", lambda.rank());

    let report = delzant_check(&cx, &d, B).unwrap();
    println!("{} maximal tubings, violations: {}", report.maximal_tubings, report.violations.len());
    println!("row space parametrized by even collections: {}", row_space_identification(&cx, &d).passed());

    for node in g.nodes() {
        for label in ["a", "b"] {
            let d = Designation::new(&g, *node, [label]).unwrap();
            println!("last node {node}, last edge {label}: {}", poincare_characteristic(&cx, &d, B).unwrap());
        }
    }
}
