//! Parity of tubes with respect to a collection, the induced subcomplexes
//! `K^odd`, `K^even`, `K′`, `K″`, even collections and admissibility.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{GraphError, ParityError, TubeError};
use crate::graph::{Collection, Member, Pseudograph};
use crate::tube::{bits, HostIndex, Mask, Tube, TubingComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(count: u32) -> Parity {
        if count % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// Blocks whose intersections with an even collection must all be even:
/// the node set of each component and each bundle.
fn parity_blocks(index: &HostIndex) -> Vec<Mask> {
    index.components.iter().copied().chain(index.bundles.iter().map(|b| b.edges)).collect()
}

fn even_submasks(block: Mask) -> Vec<Mask> {
    let mut out = vec![0];
    out.extend(crate::tube::nonempty_submasks(block).into_iter().filter(|s| s.count_ones() % 2 == 0));
    out
}

/// Masks of every even collection of the indexed host, in a fixed order.
pub(crate) fn even_masks(index: &HostIndex) -> Vec<Mask> {
    let mut out = vec![0];
    for block in parity_blocks(index) {
        let subs = even_submasks(block);
        out = out.iter().flat_map(|&m| subs.iter().map(move |&s| m | s)).collect();
    }
    out
}

pub(crate) fn is_even_mask(index: &HostIndex, c: Mask) -> bool {
    parity_blocks(index).iter().all(|&b| (b & c).count_ones().is_multiple_of(2))
}

/// Every collection meeting each component's node set and each bundle in an
/// even number of elements. For a connected graph there are `2^{|R_G|}`.
pub fn even_collections(g: &Pseudograph) -> Result<Vec<Collection>, GraphError> {
    let index = HostIndex::new(g)?;
    Ok(even_masks(&index).into_iter().map(|m| index.collection_of(m)).collect())
}

pub fn is_even(g: &Pseudograph, c: &Collection) -> Result<bool, GraphError> {
    let index = HostIndex::new(g)?;
    Ok(is_even_mask(&index, index.mask_of(c)?))
}

/// A tubing complex together with a collection of its host.
#[derive(Clone, Debug)]
pub struct ParityContext<'a> {
    complex: &'a TubingComplex,
    collection: Collection,
    mask: Mask,
    /// Node bits of `V_C`.
    touched: Mask,
}

impl<'a> ParityContext<'a> {
    pub fn new(complex: &'a TubingComplex, collection: &Collection) -> Result<Self, GraphError> {
        let mask = complex.index().mask_of(collection)?;
        Ok(Self::from_mask(complex, mask))
    }

    pub(crate) fn from_mask(complex: &'a TubingComplex, mask: Mask) -> Self {
        let index = complex.index();
        let mut touched = mask & index.node_mask;
        for b in &index.bundles {
            if b.edges & mask != 0 {
                touched |= 1 << b.ends.0 | 1 << b.ends.1;
            }
        }
        ParityContext { complex, collection: index.collection_of(mask), mask, touched }
    }

    pub fn complex(&self) -> &TubingComplex {
        self.complex
    }

    pub fn collection(&self) -> &Collection {
        &self.collection
    }

    pub fn parity(&self, t: &Tube) -> Result<Parity, TubeError> {
        let i = self.complex.position(t).ok_or(TubeError::HostMismatch)?;
        if self.complex.tubes()[i] != *t {
            return Err(TubeError::HostMismatch);
        }
        Ok(self.parity_of_mask(self.complex.masks()[i]))
    }

    fn parity_of_mask(&self, m: Mask) -> Parity {
        Parity::of((m & self.mask).count_ones())
    }

    fn positions(&self, keep: impl Fn(Mask) -> bool) -> Vec<usize> {
        let masks = self.complex.masks();
        (0..masks.len()).filter(|&i| keep(masks[i])).collect()
    }

    pub fn odd_positions(&self) -> Vec<usize> {
        self.positions(|m| self.parity_of_mask(m) == Parity::Odd)
    }

    pub fn even_positions(&self) -> Vec<usize> {
        self.positions(|m| self.parity_of_mask(m) == Parity::Even)
    }

    /// Odd tubes lying inside `Γ̃_G(C)`, i.e. whose nodes are all touched by `C`.
    pub fn prime_positions(&self) -> Vec<usize> {
        let nodes = self.complex.index().node_mask;
        self.positions(|m| self.parity_of_mask(m) == Parity::Odd && m & nodes & !self.touched == 0)
    }

    /// Bundles of `Γ̃_G(C)` disjoint from `C`, as (end bits, edge bits).
    fn missing_bundles(&self) -> Vec<(Mask, Mask)> {
        self.complex
            .index()
            .bundles
            .iter()
            .map(|b| (1 << b.ends.0 | 1 << b.ends.1, b.edges))
            .filter(|&(ends, edges)| ends & !self.touched == 0 && edges & self.mask == 0)
            .collect()
    }

    /// `K′` vertices that contain every missing bundle whose ends they contain.
    pub fn double_prime_positions(&self) -> Vec<usize> {
        let missing = self.missing_bundles();
        let masks = self.complex.masks();
        self.prime_positions()
            .into_iter()
            .filter(|&i| missing.iter().all(|&(ends, edges)| masks[i] & ends != ends || masks[i] & edges == edges))
            .collect()
    }

    pub fn k_odd(&self) -> SimplicialComplex {
        self.complex.flag_on(&self.odd_positions())
    }

    pub fn k_even(&self) -> SimplicialComplex {
        self.complex.flag_on(&self.even_positions())
    }

    pub fn k_prime(&self) -> SimplicialComplex {
        self.complex.flag_on(&self.prime_positions())
    }

    pub fn k_double_prime(&self) -> SimplicialComplex {
        self.complex.flag_on(&self.double_prime_positions())
    }

    /// Checks that `J ↦ J̃` (re-expanding collapsed bundles) is an
    /// isomorphism from `K^odd` of `Γ_G(C)` onto `K″`: a bijection on
    /// vertices preserving compatibility in both directions.
    pub fn tilde_isomorphism(&self) -> Result<bool, ParityError> {
        let g = self.complex.graph();
        let gamma = g.gamma(&self.collection)?;
        let small = TubingComplex::new(&gamma)?;
        let small_ctx = ParityContext::new(&small, &self.collection)?;
        let host = self.complex.index();
        let missing = self.missing_bundles();
        let image: Vec<Mask> = small_ctx
            .odd_positions()
            .into_iter()
            .map(|i| {
                let mut m = host.mask_of(&small.index().collection_of(small.masks()[i]))?;
                for &(ends, edges) in &missing {
                    if m & ends == ends {
                        m |= edges;
                    }
                }
                Ok(m)
            })
            .collect::<Result<_, GraphError>>()?;
        let target: BTreeSet<Mask> = self.double_prime_positions().iter().map(|&i| self.complex.masks()[i]).collect();
        let image_set: BTreeSet<Mask> = image.iter().copied().collect();
        if image_set.len() != image.len() || image_set != target {
            return Ok(false);
        }
        let odd = small_ctx.odd_positions();
        for (x, &i) in odd.iter().enumerate() {
            for (y, &j) in odd.iter().enumerate().skip(x + 1) {
                let before = small.index().compatible_masks(small.masks()[i], small.masks()[j]);
                if before != host.compatible_masks(image[x], image[y]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn k_odd(g: &Pseudograph, c: &Collection) -> Result<SimplicialComplex, ParityError> {
    let cx = TubingComplex::new(g)?;
    Ok(ParityContext::new(&cx, c)?.k_odd())
}

pub fn k_even(g: &Pseudograph, c: &Collection) -> Result<SimplicialComplex, ParityError> {
    let cx = TubingComplex::new(g)?;
    Ok(ParityContext::new(&cx, c)?.k_even())
}

pub fn k_prime(g: &Pseudograph, c: &Collection) -> Result<SimplicialComplex, ParityError> {
    let cx = TubingComplex::new(g)?;
    Ok(ParityContext::new(&cx, c)?.k_prime())
}

pub fn k_double_prime(g: &Pseudograph, c: &Collection) -> Result<SimplicialComplex, ParityError> {
    let cx = TubingComplex::new(g)?;
    Ok(ParityContext::new(&cx, c)?.k_double_prime())
}

/// Members of `C_G` inside the component with node set `nodes`.
fn component_members(g: &Pseudograph, nodes: &BTreeSet<u32>) -> BTreeSet<Member> {
    let mut out: BTreeSet<Member> = nodes.iter().map(|&v| Member::Node(v)).collect();
    for b in g.bundles() {
        if nodes.contains(&b.ends.0) {
            out.extend(b.labels.iter().map(|l| Member::Edge(l.clone())));
        }
    }
    out
}

/// Whether every component of `Γ̃_G(C)` meets `C` in an even number of
/// elements. `C` must itself be even.
pub fn is_even_star(g: &Pseudograph, c: &Collection) -> Result<bool, ParityError> {
    if !is_even(g, c)? {
        return Err(ParityError::NotEven(c.to_string()));
    }
    let tilde = g.gamma_tilde(c)?;
    Ok(tilde.component_node_sets().iter().all(|nodes| {
        let members = component_members(&tilde, nodes);
        c.iter().filter(|m| members.contains(m)).count() % 2 == 0
    }))
}

/// Admissibility, tested on each connected component: the part of `C` in the
/// component is even, contains every node that is not a bundle endpoint, and
/// meets every bundle. Collections not contained in `C_H` are not admissible.
pub fn is_admissible(h: &Pseudograph, c: &Collection) -> bool {
    if !c.iter().all(|m| h.contains_member(m)) {
        return false;
    }
    let endpoints: BTreeSet<u32> = h.bundles().iter().flat_map(|b| [b.ends.0, b.ends.1]).collect();
    let nodes_even = h
        .component_node_sets()
        .iter()
        .all(|comp| comp.iter().filter(|&&v| c.contains(&Member::Node(v))).count() % 2 == 0);
    let bundles_ok = h.bundles().iter().all(|b| {
        let k = b.labels.iter().filter(|l| c.contains(&Member::Edge((*l).clone()))).count();
        k > 0 && k % 2 == 0
    });
    let free_nodes_in = h.nodes().iter().filter(|v| !endpoints.contains(v)).all(|&v| c.contains(&Member::Node(v)));
    nodes_even && bundles_ok && free_nodes_in
}

pub(crate) fn admissible_masks(index: &HostIndex) -> Vec<Mask> {
    let g = index.graph();
    let free: Mask = bits(index.node_mask)
        .filter(|&i| index.bundles.iter().all(|b| b.ends.0 != i && b.ends.1 != i))
        .fold(0, |acc, i| acc | 1 << i);
    even_masks(index)
        .into_iter()
        .filter(|&m| m & free == free && index.bundles.iter().all(|b| b.edges & m != 0))
        .inspect(|&m| debug_assert!(is_admissible(g, &index.collection_of(m))))
        .collect()
}

/// All admissible collections of `h`.
pub fn admissible_collections(h: &Pseudograph) -> Result<Vec<Collection>, GraphError> {
    let index = HostIndex::new(h)?;
    Ok(admissible_masks(&index).into_iter().map(|m| index.collection_of(m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::DEFAULT_FACE_BUDGET;
    use crate::fixtures;
    use crate::homology::{betti_reduced, BettiVector};
    use proptest::prelude::*;

    fn c(s: &str) -> Collection {
        Collection::from_compact(s)
    }

    fn vertices(k: &SimplicialComplex) -> BTreeSet<String> {
        k.labels().iter().cloned().collect()
    }

    fn set(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    fn betti(k: &SimplicialComplex) -> BettiVector {
        betti_reduced(k, DEFAULT_FACE_BUDGET).unwrap()
    }

    #[test]
    fn even_collection_counts() {
        let all = even_collections(&fixtures::bundled_path()).unwrap();
        assert_eq!(all.len(), 8);
        assert!(all.contains(&c("13ab")) && all.contains(&c("23ab")) && all.contains(&Collection::empty()));
        assert_eq!(even_collections(&fixtures::path(2)).unwrap(), vec![Collection::empty(), c("12")]);
        assert!(is_even(&fixtures::double_bundle_path(), &c("13ab")).unwrap());
        // componentwise: two separate edges give 2 · 2 collections
        let g = fixtures::path(2).disjoint_union(&fixtures::path(2).map_nodes(|v| v + 2).unwrap()).unwrap();
        assert_eq!(even_collections(&g).unwrap().len(), 4);
        assert!(!is_even(&g, &c("13")).unwrap());
    }

    #[test]
    fn parity_of_tubes() {
        let cx = TubingComplex::new(&fixtures::bundled_path()).unwrap();
        let t = |s: &str| cx.find(&c(s)).unwrap().clone();
        let ctx = ParityContext::new(&cx, &c("23ab")).unwrap();
        assert_eq!(ctx.parity(&t("12a")).unwrap(), Parity::Even);
        assert_eq!(ctx.parity(&t("2")).unwrap(), Parity::Odd);
        let ctx = ParityContext::new(&cx, &c("13ab")).unwrap();
        assert_eq!(ctx.parity(&t("123b")).unwrap(), Parity::Odd);
        let other = TubingComplex::new(&fixtures::path(3)).unwrap();
        assert_eq!(ctx.parity(&other.tubes()[0]), Err(TubeError::HostMismatch));
    }

    #[test]
    fn odd_complexes_of_the_bundled_path() {
        let g = fixtures::bundled_path();
        let k = k_odd(&g, &c("23ab")).unwrap();
        assert_eq!(vertices(&k), set(&["2", "3", "12ab", "123a", "123b"]));
        assert_eq!(betti(&k).as_slice(), &[0, 0, 1]);
        assert!(betti(&k_odd(&g, &c("13ab")).unwrap()).is_acyclic());
        let empty = k_odd(&g, &Collection::empty()).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        let cx = TubingComplex::new(&g).unwrap();
        let ctx = ParityContext::new(&cx, &c("23ab")).unwrap();
        assert_eq!(ctx.odd_positions().len() + ctx.even_positions().len(), cx.len());
    }

    #[test]
    fn house_graph_subcomplexes() {
        let g = fixtures::double_bundle_path();
        let k = k_odd(&g, &c("13ab")).unwrap();
        assert_eq!(k.vertex_count(), 14);
        for v in ["124abc", "124abd", "124abcd", "1234ac"] {
            assert!(vertices(&k).contains(v), "{v}");
        }
        assert_eq!(vertices(&k_prime(&g, &c("13ab")).unwrap()), set(&["1", "3", "12ab", "123a", "123b"]));

        let c2 = c("12cd");
        assert_eq!(
            vertices(&k_prime(&g, &c2).unwrap()),
            set(&["1", "2", "24cd", "124ac", "124bc", "124ad", "124bd", "124abc", "124abd"])
        );
        let dp = k_double_prime(&g, &c2).unwrap();
        assert_eq!(vertices(&dp), set(&["1", "2", "24cd", "124abc", "124abd"]));
        assert_eq!(betti(&dp).as_slice(), &[0, 0, 1]);
        for coll in [c("13ab"), c2] {
            let b = betti(&k_odd(&g, &coll).unwrap());
            assert_eq!(b, betti(&k_prime(&g, &coll).unwrap()));
            assert_eq!(b, betti(&k_double_prime(&g, &coll).unwrap()));
            let gamma = g.gamma(&coll).unwrap();
            assert_eq!(b, betti(&k_odd(&gamma, &coll).unwrap()));
        }
    }

    #[test]
    fn prime_equals_odd_when_everything_is_touched() {
        let g = fixtures::bundled_path();
        let coll = c("13ab");
        assert_eq!(vertices(&k_prime(&g, &coll).unwrap()), vertices(&k_odd(&g, &coll).unwrap()));
        assert_eq!(vertices(&k_double_prime(&g, &coll).unwrap()), vertices(&k_odd(&g, &coll).unwrap()));
    }

    #[test]
    fn even_star() {
        let g = fixtures::double_bundle_path();
        assert!(is_even_star(&g, &c("13ab")).unwrap());
        assert!(is_even_star(&g, &Collection::empty()).unwrap());
        assert!(matches!(is_even_star(&g, &c("1")), Err(ParityError::NotEven(_))));

        // Γ̃ has components {1,2,3} and {5}: the first meets C in 1,2,3 and
        // no label, the second in 5, c, d
        let g = fixtures::two_bundle_tree();
        let coll = Collection::new([1, 2, 3, 5].map(Member::Node).into_iter().chain(["c", "d"].map(Member::edge)));
        assert!(is_even(&g, &coll).unwrap());
        let tilde = g.gamma_tilde(&coll).unwrap();
        let brute = tilde.component_node_sets().iter().all(|nodes| {
            let sub = tilde.induced_subgraph(nodes).unwrap();
            coll.restrict_to(&sub).len().is_multiple_of(2)
        });
        assert_eq!(is_even_star(&g, &coll).unwrap(), brute);
    }

    #[test]
    fn admissible_collections_of_small_graphs() {
        let g = fixtures::bundled_path();
        let adm: BTreeSet<Collection> = admissible_collections(&g).unwrap().into_iter().collect();
        assert_eq!(adm, [c("23ab"), c("13ab")].into_iter().collect());
        for bad in ["123ab", "3ab", "23b"] {
            assert!(!is_admissible(&g, &c(bad)), "{bad}");
        }
        let adm: BTreeSet<Collection> = admissible_collections(&fixtures::digon()).unwrap().into_iter().collect();
        assert_eq!(adm, [c("12ab"), c("ab")].into_iter().collect());
        assert!(!is_admissible(&fixtures::digon(), &c("3")));
        assert!(admissible_collections(&fixtures::path(3)).unwrap().is_empty());
    }

    #[test]
    fn tilde_map_on_the_house_graph() {
        let g = fixtures::double_bundle_path();
        let cx = TubingComplex::new(&g).unwrap();
        for coll in [c("12cd"), c("13ab")] {
            assert!(ParityContext::new(&cx, &coll).unwrap().tilde_isomorphism().unwrap());
        }
    }

    fn per_collection(g: &Pseudograph, mut check: impl FnMut(&ParityContext, &Pseudograph)) {
        let cx = TubingComplex::new(g).unwrap();
        for m in even_masks(cx.index()) {
            let ctx = ParityContext::from_mask(&cx, m);
            check(&ctx, g);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn subcomplex_chain_has_equal_betti(g in fixtures::arb_connected(4, 2, 3)) {
            per_collection(&g, |ctx, _| {
                let b = betti(&ctx.k_odd());
                assert_eq!(b, betti(&ctx.k_prime()), "C = {}", ctx.collection());
                assert_eq!(b, betti(&ctx.k_double_prime()), "C = {}", ctx.collection());
            });
        }

        #[test]
        fn even_star_collections(g in fixtures::arb_connected(4, 2, 3)) {
            per_collection(&g, |ctx, g| {
                let coll = ctx.collection();
                let star = is_even_star(g, coll).unwrap();
                let gamma = g.gamma(coll).unwrap();
                // even* exactly when C is admissible to Γ_G(C)
                assert_eq!(star, is_admissible(&gamma, coll), "C = {coll}");
                if star {
                    assert!(ctx.tilde_isomorphism().unwrap(), "C = {coll}");
                } else {
                    // an odd component of Γ̃ makes K″ acyclic
                    assert!(betti(&ctx.k_double_prime()).is_acyclic(), "C = {coll}");
                }
            });
        }

        #[test]
        fn double_prime_is_a_join_over_components(g in fixtures::arb_connected(4, 2, 3)) {
            per_collection(&g, |ctx, g| {
                let coll = ctx.collection();
                let tilde = g.gamma_tilde(coll).unwrap();
                let comps = tilde.component_node_sets();
                if comps.len() < 2 {
                    return;
                }
                let cx = ctx.complex();
                let dp = ctx.double_prime_positions();
                let mut joined = SimplicialComplex::empty();
                let mut product = BettiVector::new(vec![1]);
                for nodes in &comps {
                    let part: Vec<usize> =
                        dp.iter().copied().filter(|&i| cx.tubes()[i].nodes().iter().all(|v| nodes.contains(v))).collect();
                    let k = cx.flag_on(&part);
                    product = product.join(&betti(&k));
                    joined = joined.join(&k, DEFAULT_FACE_BUDGET).unwrap();
                }
                let whole = ctx.k_double_prime();
                assert_eq!(
                    whole.labelled_faces(DEFAULT_FACE_BUDGET).unwrap(),
                    joined.labelled_faces(DEFAULT_FACE_BUDGET).unwrap(),
                    "C = {coll}"
                );
                assert_eq!(betti(&whole), product, "C = {coll}");
            });
        }

        #[test]
        fn admissible_determines_gamma(g in fixtures::arb_connected(4, 2, 2)) {
            for h in g.enumerate_lessdot() {
                for coll in admissible_collections(&h).unwrap() {
                    prop_assert_eq!(g.gamma(&coll).unwrap(), h.clone());
                }
            }
        }
    }
}
