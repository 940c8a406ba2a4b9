//! Reading a graph file, naming collections with the comma syntax, and
//! driving the command-line front end in-process.
//!
//! cargo run --example graph_files

use tubings::cli::run_command;
use tubings::io::{parse_collection, parse_graph, serialize_graph};

fn main() {
    let text = "# a path with a doubled first edge\nedge 1 2 a\nedge 1 2 b\nedge 2 3\n";
    let doc = parse_graph(text).unwrap();
    println!("parsed {} (edges on lines {:?})", doc.graph, doc.locations.edges);
    print!("serialized:\n{}", serialize_graph(&doc.graph));
    println!("collection: {}", parse_collection("1,3,a,b", &doc.graph).unwrap());

    match parse_graph("node 1\nnode 2\nedge 1 2\nedge 2 3\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/graphs/bundled_path.graph");
    for args in [vec!["poincare", path, "--json"], vec!["lessdot", path]] {
        let out = run_command(std::iter::once("tubings").chain(args));
        print!("$ tubings ...\n{}", out.stdout);
    }
}
