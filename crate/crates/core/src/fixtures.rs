//! Small named pseudographs used throughout the tests and examples.

use crate::graph::{NodeId, Pseudograph};

fn build(nodes: &[NodeId], edges: &[(NodeId, NodeId, Option<&str>)]) -> Pseudograph {
    Pseudograph::new(nodes.iter().copied(), edges.iter().map(|&(a, b, l)| (a, b, l))).expect("fixture is valid")
}

/// Path 1-2-3 with the edge 1-2 doubled into the bundle `{a, b}`.
pub fn bundled_path() -> Pseudograph {
    build(&[1, 2, 3], &[(1, 2, Some("a")), (1, 2, Some("b")), (2, 3, None)])
}

/// Five nodes: bundle `{a, b}` on 1-2, simple edges 2-3 and 2-4, bundle
/// `{c, d, e}` on 4-5.
pub fn two_bundle_tree() -> Pseudograph {
    build(
        &[1, 2, 3, 4, 5],
        &[
            (1, 2, Some("a")),
            (1, 2, Some("b")),
            (2, 3, None),
            (2, 4, None),
            (4, 5, Some("c")),
            (4, 5, Some("d")),
            (4, 5, Some("e")),
        ],
    )
}

/// Path 3-1-2-4 with bundles `{a, b}` on 1-2 and `{c, d}` on 2-4.
pub fn double_bundle_path() -> Pseudograph {
    build(
        &[1, 2, 3, 4],
        &[(1, 3, None), (1, 2, Some("a")), (1, 2, Some("b")), (2, 4, Some("c")), (2, 4, Some("d"))],
    )
}

/// The 4-cycle 1-2-3-4 with the edge 1-2 doubled into `{a, b}`.
pub fn bundled_square() -> Pseudograph {
    build(&[1, 2, 3, 4], &[(1, 2, Some("a")), (1, 2, Some("b")), (2, 3, None), (3, 4, None), (1, 4, None)])
}

/// The complete graph on 1..=4 whose edge 1-2 is a bundle of `size` edges
/// labelled `a`, `b`, `c`, ...
pub fn complete4_with_bundle(size: usize) -> Pseudograph {
    let labels = ["a", "b", "c", "d", "e", "f"];
    let mut edges: Vec<(NodeId, NodeId, Option<&str>)> = labels[..size].iter().map(|l| (1, 2, Some(*l))).collect();
    edges.extend([(1, 3, None), (1, 4, None), (2, 3, None), (2, 4, None), (3, 4, None)]);
    build(&[1, 2, 3, 4], &edges)
}

/// The bundle `{a, b}` on the two nodes 1 and 2.
pub fn digon() -> Pseudograph {
    build(&[1, 2], &[(1, 2, Some("a")), (1, 2, Some("b"))])
}

/// Simple path 1-2-...-n.
pub fn path(n: NodeId) -> Pseudograph {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1, None)).collect();
    build(&(1..=n).collect::<Vec<_>>(), &edges)
}

/// Simple cycle on 1..=n.
pub fn cycle(n: NodeId) -> Pseudograph {
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1, None)).collect();
    edges.push((1, n, None));
    build(&(1..=n).collect::<Vec<_>>(), &edges)
}

/// Complete simple graph on 1..=n.
pub fn complete(n: NodeId) -> Pseudograph {
    let edges: Vec<_> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j, None))).collect();
    build(&(1..=n).collect::<Vec<_>>(), &edges)
}

/// Isolated nodes 1..=n.
pub fn isolated(n: NodeId) -> Pseudograph {
    build(&(1..=n).collect::<Vec<_>>(), &[])
}

const LETTERS: &str = "abcdefghijklmnopqrstuvwxyz";

/// Connected simple graphs on `1..=n` (labelled), as edge lists.
fn connected_simple(n: NodeId) -> Vec<Vec<(NodeId, NodeId)>> {
    let pairs: Vec<(NodeId, NodeId)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|bits| pairs.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &p)| p).collect::<Vec<_>>())
        .filter(|edges| {
            let g = build(&(1..=n).collect::<Vec<_>>(), &edges.iter().map(|&(a, b)| (a, b, None)).collect::<Vec<_>>());
            g.is_connected()
        })
        .collect()
}

fn with_bundles(n: NodeId, edges: &[(NodeId, NodeId)], sizes: &[(usize, usize)]) -> Pseudograph {
    let mut letters = LETTERS.chars();
    let mut out: Vec<(NodeId, NodeId, Option<String>)> = Vec::new();
    for (k, &(a, b)) in edges.iter().enumerate() {
        match sizes.iter().find(|(e, _)| *e == k) {
            Some(&(_, size)) => {
                out.extend((0..size).map(|_| (a, b, Some(letters.next().expect("enough letters").to_string()))))
            }
            None => out.push((a, b, None)),
        }
    }
    Pseudograph::new(1..=n, out).expect("generated graph is valid")
}

/// Every labelled connected pseudograph on `1..=n` for `n ≤ max_nodes`,
/// with at most `max_bundles` bundles of sizes `2..=max_bundle_size`.
/// Bundle labels are consecutive letters starting at `a`.
pub fn small_connected(max_nodes: NodeId, max_bundles: usize, max_bundle_size: usize) -> Vec<Pseudograph> {
    let mut out = Vec::new();
    for n in 1..=max_nodes {
        for edges in connected_simple(n) {
            let mut choices: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
            for k in 0..edges.len() {
                let mut next = Vec::new();
                for c in &choices {
                    next.push(c.clone());
                    if c.len() < max_bundles {
                        for size in 2..=max_bundle_size {
                            let mut d = c.clone();
                            d.push((k, size));
                            next.push(d);
                        }
                    }
                }
                choices = next;
            }
            out.extend(choices.iter().map(|sizes| with_bundles(n, &edges, sizes)));
        }
    }
    out
}

/// A random connected pseudograph on `1..=n` for some `n` in
/// `1..=max_nodes`: a random spanning tree plus random extra edges, with up
/// to `max_bundles` edges turned into bundles.
pub fn random_connected(
    rng: &mut impl rand::Rng,
    max_nodes: NodeId,
    max_bundles: usize,
    max_bundle_size: usize,
) -> Pseudograph {
    use std::collections::BTreeSet;
    let n = rng.gen_range(1..=max_nodes);
    let mut edges = BTreeSet::new();
    for v in 2..=n {
        edges.insert((rng.gen_range(1..v), v));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(0.3) {
                edges.insert((i, j));
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    let mut sizes = Vec::new();
    if max_bundle_size >= 2 {
        for _ in 0..rng.gen_range(0..=max_bundles.min(edges.len())) {
            let k = rng.gen_range(0..edges.len());
            if sizes.iter().all(|&(e, _)| e != k) {
                sizes.push((k, rng.gen_range(2..=max_bundle_size)));
            }
        }
    }
    with_bundles(n, &edges, &sizes)
}

#[cfg(test)]
pub(crate) fn arb_connected(
    max_nodes: NodeId,
    max_bundles: usize,
    max_bundle_size: usize,
) -> impl proptest::strategy::Strategy<Value = Pseudograph> {
    use proptest::strategy::Strategy;
    use rand::SeedableRng;
    proptest::prelude::any::<u64>().prop_map(move |seed| {
        random_connected(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), max_nodes, max_bundles, max_bundle_size)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_connected_counts() {
        // labelled connected graphs on 1, 2, 3, 4 nodes: 1, 1, 4, 38
        assert_eq!(small_connected(4, 0, 0).len(), 1 + 1 + 4 + 38);
        // one edge: simple, or a bundle of size 2 or 3
        assert_eq!(small_connected(2, 2, 3).len(), 1 + 3);
        assert!(small_connected(4, 2, 3).iter().all(|g| g.is_connected() && g.bundles().len() <= 2));
    }
}
