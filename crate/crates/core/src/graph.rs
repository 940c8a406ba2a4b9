//! Loopless pseudographs, their bundles, and the subgraph calculus used by
//! the rest of the crate (induced subgraphs, partial underlying graphs,
//! `Γ̃_G(C)`, `Γ_G(C)` and the enumeration of all `H ⋖ G`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::GraphError;

/// Node identifiers are positive integers.
pub type NodeId = u32;

/// An element of `C_G`: a node or an edge of a bundle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Member {
    Node(NodeId),
    Edge(String),
}

impl Member {
    pub fn edge(label: &str) -> Self {
        Member::Edge(label.to_string())
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Node(v) => write!(f, "{v}"),
            Member::Edge(l) => f.write_str(l),
        }
    }
}

/// An edge with endpoints stored in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub ends: (NodeId, NodeId),
    pub label: Option<String>,
}

/// A maximal set of at least two edges on one endpoint pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bundle {
    pub ends: (NodeId, NodeId),
    /// Sorted lexicographically.
    pub labels: Vec<String>,
}

impl Bundle {
    pub fn contains(&self, label: &str) -> bool {
        self.labels.iter().any(|l| l == label)
    }
}

/// A finite loopless pseudograph with labelled bundle edges.
///
/// Values are always validated and canonical: nodes ascending, edges sorted by
/// endpoints then label, bundle labels sorted.
#[derive(Clone, Debug)]
pub struct Pseudograph {
    nodes: Vec<NodeId>,
    edges: Vec<Edge>,
    bundles: Vec<Bundle>,
}

pub(crate) fn valid_label(label: &str) -> bool {
    let mut chars = label.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn ordered(a: NodeId, b: NodeId) -> (NodeId, NodeId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Pseudograph {
    /// Validates raw nodes and edges. Every edge endpoint must be listed in
    /// `nodes`.
    pub fn new<N, E, S>(nodes: N, edges: E) -> Result<Self, GraphError>
    where
        N: IntoIterator<Item = NodeId>,
        E: IntoIterator<Item = (NodeId, NodeId, Option<S>)>,
        S: Into<String>,
    {
        let mut node_set = BTreeSet::new();
        for v in nodes {
            if v == 0 {
                return Err(GraphError::InvalidNode(v));
            }
            if !node_set.insert(v) {
                return Err(GraphError::DuplicateNode(v));
            }
        }
        let mut out = Vec::new();
        let mut labels = BTreeSet::new();
        for (a, b, label) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            for v in [a, b] {
                if !node_set.contains(&v) {
                    return Err(GraphError::UnknownNode(v));
                }
            }
            let label = label.map(Into::into);
            if let Some(l) = &label {
                if !valid_label(l) {
                    return Err(GraphError::InvalidLabel(l.clone()));
                }
                if !labels.insert(l.clone()) {
                    return Err(GraphError::DuplicateLabel(l.clone()));
                }
            }
            out.push(Edge { ends: ordered(a, b), label });
        }
        Self::from_parts(node_set.into_iter().collect(), out)
    }

    /// Builds a graph from edges alone; the node set is the set of endpoints.
    pub fn from_edges<E, S>(edges: E) -> Result<Self, GraphError>
    where
        E: IntoIterator<Item = (NodeId, NodeId, Option<S>)>,
        S: Into<String>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        let nodes: BTreeSet<NodeId> = edges.iter().flat_map(|(a, b, _)| [*a, *b]).collect();
        Self::new(nodes, edges)
    }

    pub fn empty() -> Self {
        Pseudograph { nodes: Vec::new(), edges: Vec::new(), bundles: Vec::new() }
    }

    fn from_parts(nodes: Vec<NodeId>, mut edges: Vec<Edge>) -> Result<Self, GraphError> {
        edges.sort();
        let mut groups: BTreeMap<(NodeId, NodeId), Vec<&Edge>> = BTreeMap::new();
        for e in &edges {
            groups.entry(e.ends).or_default().push(e);
        }
        let mut bundles = Vec::new();
        for (ends, group) in groups {
            if group.len() < 2 {
                continue;
            }
            let mut labels = Vec::with_capacity(group.len());
            for e in group {
                match &e.label {
                    Some(l) => labels.push(l.clone()),
                    None => return Err(GraphError::UnlabelledBundleEdge(ends.0, ends.1)),
                }
            }
            labels.sort();
            bundles.push(Bundle { ends, labels });
        }
        Ok(Pseudograph { nodes, edges, bundles })
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn bundles(&self) -> &[Bundle] {
        &self.bundles
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        self.bundles.is_empty()
    }

    pub fn has_node(&self, v: NodeId) -> bool {
        self.nodes.binary_search(&v).is_ok()
    }

    /// The bundle containing an edge label, if any.
    pub fn bundle_of(&self, label: &str) -> Option<&Bundle> {
        self.bundles.iter().find(|b| b.contains(label))
    }

    pub fn bundle_between(&self, a: NodeId, b: NodeId) -> Option<&Bundle> {
        let ends = ordered(a, b);
        self.bundles.iter().find(|bd| bd.ends == ends)
    }

    /// `C_G`: nodes ascending followed by bundle-edge labels in lexicographic
    /// order.
    pub fn members(&self) -> Vec<Member> {
        let mut labels: Vec<&String> = self.bundles.iter().flat_map(|b| &b.labels).collect();
        labels.sort();
        self.nodes
            .iter()
            .map(|&v| Member::Node(v))
            .chain(labels.into_iter().map(|l| Member::Edge(l.clone())))
            .collect()
    }

    pub fn contains_member(&self, m: &Member) -> bool {
        match m {
            Member::Node(v) => self.has_node(*v),
            Member::Edge(l) => self.bundle_of(l).is_some(),
        }
    }

    /// Distinct adjacent node pairs (the edge set of the underlying simple graph).
    pub fn adjacent_pairs(&self) -> BTreeSet<(NodeId, NodeId)> {
        self.edges.iter().map(|e| e.ends).collect()
    }

    pub fn neighbors(&self, v: NodeId) -> BTreeSet<NodeId> {
        self.edges
            .iter()
            .filter_map(|e| match e.ends {
                (a, b) if a == v => Some(b),
                (a, b) if b == v => Some(a),
                _ => None,
            })
            .collect()
    }

    /// The last node, `n + 1` in the usual numbering.
    pub fn last_node(&self) -> Option<NodeId> {
        self.nodes.last().copied()
    }

    pub fn underlying_simple_graph(&self) -> Pseudograph {
        let edges = self.adjacent_pairs().into_iter().map(|(a, b)| Edge { ends: (a, b), label: None }).collect();
        Pseudograph { nodes: self.nodes.clone(), edges, bundles: Vec::new() }
    }

    /// Node sets of the connected components, ordered by smallest node.
    pub fn component_node_sets(&self) -> Vec<BTreeSet<NodeId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.nodes {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if comp.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_node_sets().len() == 1
    }

    pub fn connected_components(&self) -> Vec<Pseudograph> {
        self.component_node_sets().iter().map(|s| self.restrict(s)).collect()
    }

    fn restrict(&self, s: &BTreeSet<NodeId>) -> Pseudograph {
        let edges: Vec<Edge> =
            self.edges.iter().filter(|e| s.contains(&e.ends.0) && s.contains(&e.ends.1)).cloned().collect();
        Pseudograph::from_parts(s.iter().copied().collect(), edges).expect("subgraph of a valid graph is valid")
    }

    /// The subgraph on `s` keeping every edge of `self` inside `s`.
    pub fn induced_subgraph(&self, s: &BTreeSet<NodeId>) -> Result<Pseudograph, GraphError> {
        if let Some(&v) = s.iter().find(|v| !self.has_node(**v)) {
            return Err(GraphError::UnknownNode(v));
        }
        Ok(self.restrict(s))
    }

    /// Replaces each bundle whose endpoints are listed in `collapse` by one
    /// unlabelled simple edge.
    pub fn partial_underlying(&self, collapse: &BTreeSet<(NodeId, NodeId)>) -> Result<Pseudograph, GraphError> {
        for &(a, b) in collapse {
            if self.bundle_between(a, b).is_none() {
                return Err(GraphError::UnknownBundle(a, b));
            }
        }
        let collapse: BTreeSet<_> = collapse.iter().map(|&(a, b)| ordered(a, b)).collect();
        let mut edges: Vec<Edge> = self.edges.iter().filter(|e| !collapse.contains(&e.ends)).cloned().collect();
        edges.extend(collapse.iter().map(|&ends| Edge { ends, label: None }));
        Ok(Pseudograph::from_parts(self.nodes.clone(), edges).expect("collapsing keeps validity"))
    }

    fn check_collection(&self, c: &Collection) -> Result<(), GraphError> {
        match c.iter().find(|m| !self.contains_member(m)) {
            Some(m) => Err(GraphError::UnknownMember(m.to_string())),
            None => Ok(()),
        }
    }

    /// `V_C`: nodes in `C` together with the endpoints of edges in `C`.
    pub fn touched_nodes(&self, c: &Collection) -> Result<BTreeSet<NodeId>, GraphError> {
        self.check_collection(c)?;
        let mut out = BTreeSet::new();
        for m in c.iter() {
            match m {
                Member::Node(v) => {
                    out.insert(*v);
                }
                Member::Edge(l) => {
                    let b = self.bundle_of(l).expect("checked");
                    out.insert(b.ends.0);
                    out.insert(b.ends.1);
                }
            }
        }
        Ok(out)
    }

    /// `Γ̃_G(C)`, the subgraph induced by the nodes touched by `C`.
    pub fn gamma_tilde(&self, c: &Collection) -> Result<Pseudograph, GraphError> {
        let v = self.touched_nodes(c)?;
        Ok(self.restrict(&v))
    }

    /// `Γ_G(C)`: `Γ̃_G(C)` with each bundle disjoint from `C` collapsed.
    pub fn gamma(&self, c: &Collection) -> Result<Pseudograph, GraphError> {
        let tilde = self.gamma_tilde(c)?;
        let collapse = tilde.bundles_missing(c);
        tilde.partial_underlying(&collapse)
    }

    /// Endpoints of the bundles that share no edge with `c`.
    pub fn bundles_missing(&self, c: &Collection) -> BTreeSet<(NodeId, NodeId)> {
        self.bundles
            .iter()
            .filter(|b| !b.labels.iter().any(|l| c.contains(&Member::Edge(l.clone()))))
            .map(|b| b.ends)
            .collect()
    }

    /// Every nonempty `H ⋖ G`: an induced subgraph with some of its bundles
    /// collapsed. Ordered by node set (size, then lexicographic) and then by
    /// the set of retained bundles.
    pub fn enumerate_lessdot(&self) -> Vec<Pseudograph> {
        let n = self.nodes.len();
        assert!(n < 32, "too many nodes to enumerate subgraphs");
        let mut subsets: Vec<BTreeSet<NodeId>> = (1u64..(1 << n))
            .map(|bits| (0..n).filter(|i| bits >> i & 1 == 1).map(|i| self.nodes[i]).collect())
            .collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for s in subsets {
            let induced = self.restrict(&s);
            let ends: Vec<_> = induced.bundles.iter().map(|b| b.ends).collect();
            // retained bundles ordered from "all kept" to "all collapsed"
            for mask in 0u32..(1 << ends.len()) {
                let collapse: BTreeSet<_> =
                    ends.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
                let h = induced.partial_underlying(&collapse).expect("bundles of induced subgraph");
                if seen.insert(h.key()) {
                    out.push(h);
                }
            }
        }
        out
    }

    /// Graph identity: node set, simple adjacency and labelled bundles.
    fn key(&self) -> (Vec<NodeId>, BTreeSet<(NodeId, NodeId)>, Vec<Bundle>) {
        (self.nodes.clone(), self.adjacent_pairs(), self.bundles.clone())
    }

    /// Disjoint union; fails when node ids or labels clash.
    pub fn disjoint_union(&self, other: &Pseudograph) -> Result<Pseudograph, GraphError> {
        let nodes = self.nodes.iter().chain(&other.nodes).copied();
        let edges = self.edges.iter().chain(&other.edges).map(|e| (e.ends.0, e.ends.1, e.label.clone()));
        Pseudograph::new(nodes, edges)
    }

    /// Renames nodes through `f`, which must be injective.
    pub fn map_nodes(&self, f: impl Fn(NodeId) -> NodeId) -> Result<Pseudograph, GraphError> {
        let nodes: Vec<NodeId> = self.nodes.iter().map(|&v| f(v)).collect();
        let edges = self.edges.iter().map(|e| (f(e.ends.0), f(e.ends.1), e.label.clone()));
        Pseudograph::new(nodes, edges)
    }

    /// Renames bundle labels through `f`, which must be injective and
    /// produce valid labels.
    pub fn map_labels(&self, f: impl Fn(&str) -> String) -> Result<Pseudograph, GraphError> {
        let edges = self.edges.iter().map(|e| (e.ends.0, e.ends.1, e.label.as_deref().map(&f)));
        Pseudograph::new(self.nodes.clone(), edges)
    }

    /// Canonical set representation of the whole graph (nodes then bundle
    /// labels).
    /// Whether subgraph names can be concatenated without ambiguity: every
    /// node id is one digit and every bundle label one character.
    pub fn compact_names(&self) -> bool {
        self.nodes.iter().all(|&v| v < 10) && self.bundles.iter().flat_map(|b| &b.labels).all(|l| l.len() == 1)
    }

    pub fn set_repr(&self) -> SetRepr {
        SetRepr::from_members(self.members())
    }
}

impl PartialEq for Pseudograph {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Pseudograph {}

impl Hash for Pseudograph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl fmt::Display for Pseudograph {
    /// Set notation plus the simple edges, e.g. `123ab [23]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.set_repr())?;
        let simple: Vec<String> = self
            .adjacent_pairs()
            .into_iter()
            .filter(|&(a, b)| self.bundle_between(a, b).is_none())
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        if !simple.is_empty() {
            write!(f, " [{}]", simple.join(" "))?;
        }
        Ok(())
    }
}

/// A subset of `C_G`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Collection(BTreeSet<Member>);

impl Collection {
    pub fn new(members: impl IntoIterator<Item = Member>) -> Self {
        Collection(members.into_iter().collect())
    }

    pub fn empty() -> Self {
        Collection(BTreeSet::new())
    }

    /// Builds a collection checked against `g`'s `C_G`.
    pub fn checked(g: &Pseudograph, members: impl IntoIterator<Item = Member>) -> Result<Self, GraphError> {
        let c = Collection::new(members);
        g.check_collection(&c)?;
        Ok(c)
    }

    /// Shorthand for single-digit nodes and single-letter labels, e.g. `"13ab"`.
    pub fn from_compact(s: &str) -> Self {
        Collection(
            s.chars()
                .map(|ch| match ch.to_digit(10) {
                    Some(d) => Member::Node(d),
                    None => Member::Edge(ch.to_string()),
                })
                .collect(),
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = &Member> {
        self.0.iter()
    }

    pub fn contains(&self, m: &Member) -> bool {
        self.0.contains(m)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.0.iter().filter_map(|m| match m {
            Member::Node(v) => Some(*v),
            Member::Edge(_) => None,
        })
    }

    /// Members that belong to `g`.
    pub fn restrict_to(&self, g: &Pseudograph) -> Collection {
        Collection(self.0.iter().filter(|m| g.contains_member(m)).cloned().collect())
    }

    pub fn union(&self, other: &Collection) -> Collection {
        Collection(self.0.union(&other.0).cloned().collect())
    }

    pub fn is_subset_of(&self, other: &Collection) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn into_set(self) -> BTreeSet<Member> {
        self.0
    }
}

impl FromIterator<Member> for Collection {
    fn from_iter<T: IntoIterator<Item = Member>>(iter: T) -> Self {
        Collection::new(iter)
    }
}

impl fmt::Display for Collection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        SetRepr::from_members(self.0.iter().cloned()).fmt(f)
    }
}

/// The set representation of a subgraph: its nodes and the labels of the
/// host's bundle edges it contains.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetRepr {
    pub nodes: Vec<NodeId>,
    pub labels: Vec<String>,
}

impl SetRepr {
    pub fn from_members(members: impl IntoIterator<Item = Member>) -> Self {
        let mut r = SetRepr::default();
        for m in members {
            match m {
                Member::Node(v) => r.nodes.push(v),
                Member::Edge(l) => r.labels.push(l),
            }
        }
        r.nodes.sort_unstable();
        r.nodes.dedup();
        r.labels.sort();
        r.labels.dedup();
        r
    }

    pub fn members(&self) -> Vec<Member> {
        self.nodes
            .iter()
            .map(|&v| Member::Node(v))
            .chain(self.labels.iter().map(|l| Member::Edge(l.clone())))
            .collect()
    }

    /// Concatenated (`12ab`) or comma-separated (`1,2,a,b`).
    pub fn name(&self, compact: bool) -> String {
        let parts = self.nodes.iter().map(|v| v.to_string()).chain(self.labels.iter().cloned());
        if compact {
            parts.collect()
        } else {
            parts.collect::<Vec<_>>().join(",")
        }
    }
}

/// Concatenated when unambiguous on its own; hosts with longer ids or
/// labels should name subgraphs through [`Pseudograph::compact_names`].
impl fmt::Display for SetRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.nodes.iter().all(|&v| v < 10) && self.labels.iter().all(|l| l.len() == 1);
        f.write_str(&self.name(compact))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(v: &[NodeId]) -> BTreeSet<NodeId> {
        v.iter().copied().collect()
    }

    #[test]
    fn validate_examples() {
        let g = fixtures::bundled_path();
        assert_eq!(g.bundles().len(), 1);
        assert_eq!(g.bundles()[0].labels, vec!["a", "b"]);
        let err = Pseudograph::new([1], [(1, 1, None::<&str>)]).unwrap_err();
        assert_eq!(err, GraphError::LoopEdge(1));
        let err = Pseudograph::new([1, 2], [(1, 2, Some("a")), (1, 2, Some("a"))]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateLabel("a".into()));
        let err = Pseudograph::new([1, 2], [(1, 2, Some("a")), (1, 2, None)]).unwrap_err();
        assert_eq!(err, GraphError::UnlabelledBundleEdge(1, 2));
        let err = Pseudograph::new([1], [(1, 2, None::<&str>)]).unwrap_err();
        assert_eq!(err, GraphError::UnknownNode(2));
    }

    #[test]
    fn labelled_simple_edge_is_not_a_bundle() {
        let g = Pseudograph::new([1, 2], [(1, 2, Some("a"))]).unwrap();
        assert!(g.is_simple());
        assert_eq!(g.members(), vec![Member::Node(1), Member::Node(2)]);
        assert_eq!(g, fixtures::path(2));
    }

    #[test]
    fn underlying_simple() {
        let g = fixtures::two_bundle_tree();
        let s = g.underlying_simple_graph();
        assert!(s.is_simple());
        assert_eq!(s.adjacent_pairs(), BTreeSet::from([(1, 2), (2, 3), (2, 4), (4, 5)]));
        assert_eq!(s.underlying_simple_graph(), s);
        assert_eq!(fixtures::bundled_path().underlying_simple_graph(), fixtures::path(3));
    }

    #[test]
    fn components() {
        let g = fixtures::bundled_path();
        assert_eq!(g.connected_components(), vec![g.clone()]);
        let h = g.induced_subgraph(&set(&[1, 3])).unwrap();
        let comps = h.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].nodes(), &[1]);
        assert!(Pseudograph::empty().connected_components().is_empty());
    }

    #[test]
    fn induced() {
        let g = fixtures::two_bundle_tree();
        let i4 = g.induced_subgraph(&set(&[2, 4, 5])).unwrap();
        assert_eq!(i4.set_repr().to_string(), "245cde");
        assert!(i4.adjacent_pairs().contains(&(2, 4)));
        assert_eq!(g.induced_subgraph(&set(&[1, 2, 3, 4, 5])).unwrap(), g);
        let h = fixtures::double_bundle_path();
        assert_eq!(h.induced_subgraph(&set(&[1, 2, 3])).unwrap().set_repr().to_string(), "123ab");
        assert_eq!(g.induced_subgraph(&set(&[9])).unwrap_err(), GraphError::UnknownNode(9));
    }

    #[test]
    fn partial_underlying_examples() {
        let g = fixtures::bundled_path();
        assert_eq!(g.partial_underlying(&BTreeSet::from([(1, 2)])).unwrap(), fixtures::path(3));
        assert_eq!(g.partial_underlying(&BTreeSet::new()).unwrap(), g);
        assert_eq!(g.partial_underlying(&BTreeSet::from([(2, 3)])).unwrap_err(), GraphError::UnknownBundle(2, 3));
        let h = fixtures::double_bundle_path();
        let t = h.gamma_tilde(&Collection::from_compact("12cd")).unwrap();
        assert_eq!(t.set_repr().to_string(), "124abcd");
        let p = t.partial_underlying(&BTreeSet::from([(1, 2)])).unwrap();
        assert_eq!(p.set_repr().to_string(), "124cd");
    }

    #[test]
    fn gamma_examples() {
        let g = fixtures::double_bundle_path();
        let c1 = Collection::from_compact("13ab");
        let c2 = Collection::from_compact("12cd");
        assert_eq!(g.gamma_tilde(&c1).unwrap().set_repr().to_string(), "123ab");
        assert_eq!(g.gamma(&c1).unwrap().set_repr().to_string(), "123ab");
        assert_eq!(g.gamma(&c2).unwrap().set_repr().to_string(), "124cd");
        assert!(g.gamma(&Collection::empty()).unwrap().is_empty());
        assert!(matches!(g.gamma(&Collection::from_compact("z")), Err(GraphError::UnknownMember(_))));
    }

    #[test]
    fn lessdot_counts() {
        assert_eq!(fixtures::bundled_path().enumerate_lessdot().len(), 9);
        assert_eq!(fixtures::path(4).enumerate_lessdot().len(), 15);
    }

    #[test]
    fn compact_names() {
        let r = SetRepr::from_members(Collection::from_compact("b21a").into_set());
        assert_eq!(r.to_string(), "12ab");
        let r = SetRepr { nodes: vec![3, 12], labels: vec!["x".into()] };
        assert_eq!(r.to_string(), "3,12,x");
    }
}
