pub mod complex;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod homology;
pub mod linalg;
pub mod poly;
pub mod shelling;
pub mod tube;
pub mod parity;
pub mod poset;
pub mod poincare;
pub mod lattice;
pub mod io;
pub mod cli;
