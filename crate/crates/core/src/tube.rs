//! Tubes, compatibility, and the tubing complex (the simplicial complex dual
//! to the boundary of the pseudograph associahedron).
//!
//! Internally every subgraph of a host is a bit mask over the host's `C_G`
//! (nodes first, then bundle edges). A semi-induced subgraph is determined by
//! that set: its simple edges are forced by its node set.

use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use crate::complex::SimplicialComplex;
use crate::error::{ComplexError, GraphError, TubeError};
use crate::graph::{Collection, Member, NodeId, Pseudograph, SetRepr};

pub type Mask = u64;

pub(crate) fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

#[derive(Clone, Debug)]
pub(crate) struct BundleBits {
    pub ends: (usize, usize),
    pub edges: Mask,
}

/// Bit-level view of a host graph.
#[derive(Clone, Debug)]
pub struct HostIndex {
    graph: Pseudograph,
    universe: Vec<Member>,
    pub(crate) node_mask: Mask,
    /// Per node position: neighbouring node bits.
    pub(crate) adjacency: Vec<Mask>,
    pub(crate) bundles: Vec<BundleBits>,
    pub(crate) components: Vec<Mask>,
    compact: bool,
    id: u64,
}

impl HostIndex {
    pub fn new(graph: &Pseudograph) -> Result<Self, GraphError> {
        let universe = graph.members();
        if universe.len() > 64 {
            return Err(GraphError::TooLarge(universe.len()));
        }
        let n = graph.nodes().len();
        let pos = |v: NodeId| graph.nodes().binary_search(&v).expect("node of graph");
        let mut adjacency = vec![0; n];
        for (a, b) in graph.adjacent_pairs() {
            adjacency[pos(a)] |= 1 << pos(b);
            adjacency[pos(b)] |= 1 << pos(a);
        }
        let bundles = graph
            .bundles()
            .iter()
            .map(|b| BundleBits {
                ends: (pos(b.ends.0), pos(b.ends.1)),
                edges: b
                    .labels
                    .iter()
                    .map(|l| 1 << universe.iter().position(|m| *m == Member::Edge(l.clone())).unwrap())
                    .fold(0, |acc, x| acc | x),
            })
            .collect();
        let components = graph
            .component_node_sets()
            .iter()
            .map(|s| s.iter().fold(0, |acc, &v| acc | 1 << pos(v)))
            .collect();
        let mut hasher = std::collections::hash_map::DefaultHasher::new();
        graph.hash(&mut hasher);
        Ok(HostIndex {
            graph: graph.clone(),
            universe,
            node_mask: if n == 64 { !0 } else { (1 << n) - 1 },
            adjacency,
            bundles,
            components,
            compact: graph.compact_names(),
            id: hasher.finish(),
        })
    }

    pub fn graph(&self) -> &Pseudograph {
        &self.graph
    }

    pub fn universe(&self) -> &[Member] {
        &self.universe
    }

    /// Mask of a collection; members outside `C_G` are an error.
    pub fn mask_of(&self, c: &Collection) -> Result<Mask, GraphError> {
        let mut m = 0;
        for x in c.iter() {
            match self.universe.iter().position(|u| u == x) {
                Some(i) => m |= 1 << i,
                None => return Err(GraphError::UnknownMember(x.to_string())),
            }
        }
        Ok(m)
    }

    pub fn collection_of(&self, mask: Mask) -> Collection {
        bits(mask).map(|i| self.universe[i].clone()).collect()
    }

    pub fn repr_of(&self, mask: Mask) -> SetRepr {
        SetRepr::from_members(bits(mask).map(|i| self.universe[i].clone()))
    }

    /// Name of a subgraph, concatenated or comma-separated as decided once
    /// for the whole host.
    pub fn name_of(&self, mask: Mask) -> String {
        self.repr_of(mask).name(self.compact)
    }

    pub(crate) fn neighborhood(&self, nodes: Mask) -> Mask {
        bits(nodes).fold(0, |acc, i| acc | self.adjacency[i])
    }

    /// Node sets are disjoint and no edge joins them.
    pub(crate) fn separated(&self, a: Mask, b: Mask) -> bool {
        let (na, nb) = (a & self.node_mask, b & self.node_mask);
        na & nb == 0 && self.neighborhood(na) & nb == 0
    }

    pub(crate) fn compatible_masks(&self, a: Mask, b: Mask) -> bool {
        let nested = a != b && (a & !b == 0 || b & !a == 0);
        nested || self.separated(a, b)
    }

    /// Connected components of the subgraph with the given set representation.
    #[cfg(test)]
    pub(crate) fn split_components(&self, mask: Mask) -> Vec<Mask> {
        let mut rest = mask & self.node_mask;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            loop {
                let grown = comp | (self.neighborhood(comp) & rest);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            rest &= !comp;
            let edges = self
                .bundles
                .iter()
                .filter(|b| comp >> b.ends.0 & 1 == 1)
                .fold(0, |acc, b| acc | (b.edges & mask));
            out.push(comp | edges);
        }
        out
    }

    /// Connected node subsets of `within`, grown from their smallest node.
    pub(crate) fn connected_subsets(&self, within: Mask) -> Vec<Mask> {
        let mut out = Vec::new();
        for v in bits(within) {
            let below = ((1u64 << v) - 1) | (1u64 << v);
            let allowed = within & !below;
            self.grow(1 << v, self.adjacency[v] & allowed, allowed, &mut out);
        }
        out
    }

    fn grow(&self, set: Mask, extension: Mask, allowed: Mask, out: &mut Vec<Mask>) {
        out.push(set);
        let mut ext = extension;
        let mut allowed = allowed;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            let wb = 1 << w;
            ext &= !wb;
            allowed &= !wb;
            let next = (ext | self.adjacency[w]) & allowed & !set;
            self.grow(set | wb, next, allowed, out);
        }
    }

    /// All tubes as masks, in canonical order.
    pub(crate) fn tube_masks(&self) -> Vec<Mask> {
        let mut out = Vec::new();
        for &comp in &self.components {
            let full_edges = self
                .bundles
                .iter()
                .filter(|b| comp >> b.ends.0 & 1 == 1)
                .fold(0, |acc, b| acc | b.edges);
            for nodes in self.connected_subsets(comp) {
                let inside: Vec<Mask> = self
                    .bundles
                    .iter()
                    .filter(|b| nodes >> b.ends.0 & 1 == 1 && nodes >> b.ends.1 & 1 == 1)
                    .map(|b| b.edges)
                    .collect();
                let mut choices = vec![nodes];
                for edges in inside {
                    let subsets = nonempty_submasks(edges);
                    choices = choices.iter().flat_map(|&c| subsets.iter().map(move |&s| c | s)).collect();
                }
                out.extend(choices.into_iter().filter(|&m| m != comp | full_edges));
            }
        }
        out.sort_by_key(|&m| self.sort_key(m));
        out
    }

    pub(crate) fn sort_key(&self, m: Mask) -> (u32, SetRepr) {
        ((m & self.node_mask).count_ones(), self.repr_of(m))
    }

    pub fn id(&self) -> u64 {
        self.id
    }
}

pub(crate) fn nonempty_submasks(m: Mask) -> Vec<Mask> {
    let mut out = Vec::new();
    let mut s = m;
    while s != 0 {
        out.push(s);
        s = (s - 1) & m;
    }
    out.reverse();
    out
}

/// A proper connected semi-induced subgraph of a connected component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tube {
    mask: Mask,
    repr: SetRepr,
    host: u64,
    compact: bool,
}

impl Tube {
    pub fn repr(&self) -> &SetRepr {
        &self.repr
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.repr.nodes
    }

    pub fn members(&self) -> Vec<Member> {
        self.repr.members()
    }

    /// `L_I`: the tube together with every bundle it does not touch.
    pub fn label_set(&self, host: &Pseudograph) -> Collection {
        let mut out: BTreeSet<Member> = self.members().into_iter().collect();
        for b in host.bundles() {
            if !b.labels.iter().any(|l| self.repr.labels.contains(l)) {
                out.extend(b.labels.iter().map(|l| Member::Edge(l.clone())));
            }
        }
        Collection::new(out)
    }
}

impl std::fmt::Display for Tube {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.repr.name(self.compact))
    }
}

/// Every tube of `g` in canonical order: by node count, then set
/// representation.
pub fn enumerate_tubes(g: &Pseudograph) -> Result<Vec<Tube>, GraphError> {
    Ok(TubingComplex::new(g)?.tubes)
}

/// The flag complex whose vertices are tubes and whose faces are tubings.
#[derive(Clone, Debug)]
pub struct TubingComplex {
    index: HostIndex,
    tubes: Vec<Tube>,
    masks: Vec<Mask>,
}

impl TubingComplex {
    pub fn new(g: &Pseudograph) -> Result<Self, GraphError> {
        let index = HostIndex::new(g)?;
        let masks = index.tube_masks();
        let tubes = masks.iter().map(|&m| Tube { mask: m, repr: index.repr_of(m), host: index.id, compact: index.compact }).collect();
        Ok(TubingComplex { index, tubes, masks })
    }

    pub fn graph(&self) -> &Pseudograph {
        self.index.graph()
    }

    pub fn index(&self) -> &HostIndex {
        &self.index
    }

    pub fn tubes(&self) -> &[Tube] {
        &self.tubes
    }

    pub(crate) fn masks(&self) -> &[Mask] {
        &self.masks
    }

    pub fn len(&self) -> usize {
        self.tubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tubes.is_empty()
    }

    pub fn position(&self, t: &Tube) -> Option<usize> {
        self.masks.iter().position(|&m| m == t.mask)
    }

    /// Looks a tube up by its set representation.
    pub fn find(&self, members: &Collection) -> Option<&Tube> {
        let m = self.index.mask_of(members).ok()?;
        self.masks.iter().position(|&x| x == m).map(|i| &self.tubes[i])
    }

    fn check(&self, t: &Tube) -> Result<(), TubeError> {
        if t.host == self.index.id {
            Ok(())
        } else {
            Err(TubeError::HostMismatch)
        }
    }

    /// Tubes meet by inclusion (one properly contains the other) or by
    /// separation (disjoint node sets with no edge between them).
    pub fn compatible(&self, a: &Tube, b: &Tube) -> Result<bool, TubeError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.index.compatible_masks(a.mask, b.mask))
    }

    pub fn is_tubing(&self, tubes: &[Tube]) -> Result<bool, TubeError> {
        for t in tubes {
            self.check(t)?;
        }
        Ok(tubes
            .iter()
            .enumerate()
            .all(|(i, a)| tubes[i + 1..].iter().all(|b| self.index.compatible_masks(a.mask, b.mask))))
    }

    /// Induced subcomplex on the tubes selected by `keep`, as a flag complex.
    pub fn subcomplex(&self, keep: impl Fn(Mask) -> bool) -> SimplicialComplex {
        let chosen: Vec<usize> = (0..self.masks.len()).filter(|&i| keep(self.masks[i])).collect();
        self.flag_on(&chosen)
    }

    pub(crate) fn flag_on(&self, chosen: &[usize]) -> SimplicialComplex {
        let labels = chosen.iter().map(|&i| self.tubes[i].to_string()).collect();
        let mut edges = Vec::new();
        for (x, &i) in chosen.iter().enumerate() {
            for (y, &j) in chosen.iter().enumerate().skip(x + 1) {
                if self.index.compatible_masks(self.masks[i], self.masks[j]) {
                    edges.push((x, y));
                }
            }
        }
        SimplicialComplex::flag(labels, edges)
    }

    /// The whole tubing complex.
    pub fn complex(&self) -> SimplicialComplex {
        self.subcomplex(|_| true)
    }

    /// All tubings with at most `max_size` tubes, grouped by size (index 0 is
    /// the empty tubing).
    pub fn faces(&self, max_size: usize, budget: usize) -> Result<Vec<Vec<Vec<Tube>>>, ComplexError> {
        let faces = self.complex().faces(Some(max_size), budget)?;
        Ok(faces
            .into_iter()
            .map(|level| level.into_iter().map(|f| f.iter().map(|&i| self.tubes[i].clone()).collect()).collect())
            .collect())
    }

    /// Maximal tubings as index lists into [`TubingComplex::tubes`].
    pub fn maximal_tubings(&self, budget: usize) -> Result<Vec<Vec<usize>>, ComplexError> {
        self.complex().maximal_faces(budget)
    }

    /// `n + Σ b_i` for each component: the dimension of the associahedron.
    pub fn dimension(&self) -> usize {
        let g = self.graph();
        let extra: usize = g.bundles().iter().map(|b| b.labels.len() - 1).sum();
        g.nodes().len() - self.index.components.len() + extra
    }
}
