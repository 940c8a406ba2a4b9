//! Lattice data of the canonical Delzant realization: the matrix `A` of
//! primitive normals, facet normals of tubes, the mod-2 characteristic
//! matrix `λ_G`, unimodularity at every vertex, and the Poincaré polynomial
//! computed from the row space of `λ_G`.
//!
//! Every construction depends on a [`Designation`]: a last node and one last
//! edge per bundle, whose rows are removed from `C_G` to form `R_G`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{ComplexError, EngineError, GraphError};
use crate::graph::{Collection, Member, NodeId, Pseudograph};
use crate::homology::betti_reduced;
use crate::linalg::{determinant, rank_gf2};
use crate::parity::{even_masks, ParityContext};
use crate::poly::IntPolynomial;
use crate::tube::TubingComplex;

/// The designated last node and last edge of each bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Designation {
    pub last_node: NodeId,
    /// Bundle endpoints to the designated label.
    pub last_edges: BTreeMap<(NodeId, NodeId), String>,
}

impl Designation {
    /// Largest node id and the lexicographically last label of each bundle.
    pub fn canonical(g: &Pseudograph) -> Result<Self, GraphError> {
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let last_node = g.last_node().expect("connected graphs are nonempty");
        let last_edges = g.bundles().iter().map(|b| (b.ends, b.labels.last().expect("bundle").clone())).collect();
        Ok(Designation { last_node, last_edges })
    }

    /// A designation naming `last_node` and, for each bundle, whichever of
    /// `last_labels` it contains (the canonical label where none is given).
    pub fn new<S: AsRef<str>>(
        g: &Pseudograph,
        last_node: NodeId,
        last_labels: impl IntoIterator<Item = S>,
    ) -> Result<Self, GraphError> {
        let mut d = Designation::canonical(g)?;
        if !g.has_node(last_node) {
            return Err(GraphError::UnknownNode(last_node));
        }
        d.last_node = last_node;
        for l in last_labels {
            let l = l.as_ref();
            let b = g.bundle_of(l).ok_or_else(|| GraphError::UnknownMember(l.to_string()))?;
            d.last_edges.insert(b.ends, l.to_string());
        }
        Ok(d)
    }

    fn is_designated(&self, m: &Member) -> bool {
        match m {
            Member::Node(v) => *v == self.last_node,
            Member::Edge(l) => self.last_edges.values().any(|x| x == l),
        }
    }

    /// `R_G`: `C_G` without the designated elements, in `C_G` order.
    pub fn rows(&self, g: &Pseudograph) -> Vec<Member> {
        g.members().into_iter().filter(|m| !self.is_designated(m)).collect()
    }

    /// The designated element paired with a row: the last node for node
    /// rows, the last edge of its bundle for edge rows.
    fn partner(&self, g: &Pseudograph, row: &Member) -> Member {
        match row {
            Member::Node(_) => Member::Node(self.last_node),
            Member::Edge(l) => {
                let b = g.bundle_of(l).expect("row of the graph");
                Member::Edge(self.last_edges[&b.ends].clone())
            }
        }
    }
}

/// An integer matrix with labelled rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

/// A matrix over the two-element field with labelled rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BitMatrix {
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub entries: Vec<Vec<bool>>,
}

impl BitMatrix {
    pub fn rank(&self) -> usize {
        rank_gf2(&self.entries)
    }
}

/// `A`: rows `R_G`, columns `C_G`; `-1` on matching labels, `1` from a node
/// row to the last node and from an edge row to its bundle's last edge.
pub fn matrix_a(g: &Pseudograph, d: &Designation) -> IntMatrix {
    let rows = d.rows(g);
    let cols = g.members();
    let entries = rows
        .iter()
        .map(|r| {
            let partner = d.partner(g, r);
            cols.iter().map(|c| if c == r { -1 } else { i64::from(*c == partner) }).collect()
        })
        .collect();
    IntMatrix {
        rows: rows.iter().map(Member::to_string).collect(),
        columns: cols.iter().map(Member::to_string).collect(),
        entries,
    }
}

/// Sum of the columns of `A` over the members of `members`.
fn column_sum(a: &IntMatrix, g: &Pseudograph, members: impl IntoIterator<Item = Member>) -> Vec<i64> {
    let cols = g.members();
    let mut out = vec![0; a.rows.len()];
    for m in members {
        let j = cols.iter().position(|c| *c == m).expect("member of the graph");
        for (o, row) in out.iter_mut().zip(&a.entries) {
            *o += row[j];
        }
    }
    out
}

/// Outward normal of the facet of a tube: the sum of the columns of `A`
/// over its set representation.
pub fn facet_normal(g: &Pseudograph, d: &Designation, tube: &crate::tube::Tube) -> Vec<i64> {
    column_sum(&matrix_a(g, d), g, tube.members())
}

/// The 0/1 incidence matrix `Λ′`: rows `C_G`, columns tubes.
pub fn incidence_matrix(cx: &TubingComplex) -> BitMatrix {
    let members = cx.graph().members();
    BitMatrix {
        rows: members.iter().map(Member::to_string).collect(),
        columns: cx.tubes().iter().map(|t| t.to_string()).collect(),
        entries: (0..members.len()).map(|i| cx.masks().iter().map(|m| m >> i & 1 == 1).collect()).collect(),
    }
}

/// `λ_G`: each row of `Λ′` indexed by `R_G` plus the row of its designated
/// partner.
pub fn lambda_matrix(cx: &TubingComplex, d: &Designation) -> BitMatrix {
    let g = cx.graph();
    let lambda = incidence_matrix(cx);
    let members = g.members();
    let pos = |m: &Member| members.iter().position(|x| x == m).expect("member");
    let rows = d.rows(g);
    let entries = rows
        .iter()
        .map(|r| {
            let (a, b) = (&lambda.entries[pos(r)], &lambda.entries[pos(&d.partner(g, r))]);
            a.iter().zip(b).map(|(x, y)| x ^ y).collect()
        })
        .collect();
    BitMatrix { rows: rows.iter().map(Member::to_string).collect(), columns: lambda.columns, entries }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub tubing: Vec<String>,
    pub determinant: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DelzantReport {
    pub dimension: usize,
    pub maximal_tubings: usize,
    /// Maximal tubings whose size differs from the dimension.
    pub wrong_size: usize,
    pub lambda_rank: usize,
    pub violations: Vec<Violation>,
}

impl DelzantReport {
    pub fn passed(&self) -> bool {
        self.wrong_size == 0 && self.violations.is_empty() && self.lambda_rank == self.dimension
    }
}

/// Checks that the facet normals at every vertex (maximal tubing) form a
/// lattice basis, and that `λ_G` has full rank.
pub fn delzant_check(cx: &TubingComplex, d: &Designation, budget: usize) -> Result<DelzantReport, ComplexError> {
    let g = cx.graph();
    let a = matrix_a(g, d);
    let normals: Vec<Vec<i64>> = cx.tubes().iter().map(|t| column_sum(&a, g, t.members())).collect();
    let dimension = d.rows(g).len();
    let maximal = cx.maximal_tubings(budget)?;
    let wrong_size = maximal.iter().filter(|t| t.len() != dimension).count();
    let mut violations: Vec<Violation> = maximal
        .par_iter()
        .filter(|t| t.len() == dimension)
        .filter_map(|t| {
            // columns are normals; transpose into rows for the determinant
            let m: Vec<Vec<i64>> = (0..dimension).map(|r| t.iter().map(|&i| normals[i][r]).collect()).collect();
            let det = determinant(&m);
            (det.abs() != BigInt::from(1)).then(|| Violation {
                tubing: t.iter().map(|&i| cx.tubes()[i].to_string()).collect(),
                determinant: det.to_string(),
            })
        })
        .collect();
    violations.sort_by(|x, y| x.tubing.cmp(&y.tubing));
    Ok(DelzantReport {
        dimension,
        maximal_tubings: maximal.len(),
        wrong_size,
        lambda_rank: lambda_matrix(cx, d).rank(),
        violations,
    })
}

fn xor_into(acc: &mut [bool], row: &[bool]) {
    for (a, b) in acc.iter_mut().zip(row) {
        *a ^= b;
    }
}

/// The even collection paired with `R ⊆ R_G`: each block of `R` of odd size
/// is completed by its designated element.
pub fn collection_of_rows(g: &Pseudograph, d: &Designation, r: &BTreeSet<Member>) -> Collection {
    let mut out = r.clone();
    let mut count: BTreeMap<Member, usize> = BTreeMap::new();
    for m in r {
        *count.entry(d.partner(g, m)).or_default() += 1;
    }
    for (partner, k) in count {
        if k % 2 == 1 {
            out.insert(partner);
        }
    }
    Collection::new(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowSpaceReport {
    /// `|R_G|`, so the row space has `2^rows` elements.
    pub rows: usize,
    /// `ω_C` equals the row combination of `λ_G` indexed by `R`.
    pub combinations_match: bool,
    /// `R ↦ C` is a bijection onto the even collections.
    pub bijective: bool,
    /// The support of `ω_C` is the set of tubes meeting `C` oddly.
    pub supports_match: bool,
}

impl RowSpaceReport {
    pub fn passed(&self) -> bool {
        self.combinations_match && self.bijective && self.supports_match
    }
}

/// Verifies by enumeration that even collections parametrize the row space
/// of `λ_G` through `C ↦ ω_C = Σ_{c∈C} Λ′_c`.
pub fn row_space_identification(cx: &TubingComplex, d: &Designation) -> RowSpaceReport {
    let g = cx.graph();
    let lambda = lambda_matrix(cx, d);
    let incidence = incidence_matrix(cx);
    let members = g.members();
    let rows = d.rows(g);
    assert!(rows.len() < 25, "too many rows to enumerate the row space");
    let mut combinations_match = true;
    let mut supports_match = true;
    let mut seen = BTreeSet::new();
    let mut omegas = BTreeSet::new();
    for bits in 0u32..1 << rows.len() {
        let r: BTreeSet<Member> = (0..rows.len()).filter(|i| bits >> i & 1 == 1).map(|i| rows[i].clone()).collect();
        let c = collection_of_rows(g, d, &r);
        let mut from_lambda = vec![false; cx.len()];
        for i in (0..rows.len()).filter(|i| bits >> i & 1 == 1) {
            xor_into(&mut from_lambda, &lambda.entries[i]);
        }
        let mut omega = vec![false; cx.len()];
        for m in c.iter() {
            xor_into(&mut omega, &incidence.entries[members.iter().position(|x| x == m).expect("member")]);
        }
        combinations_match &= omega == from_lambda;
        let ctx = ParityContext::new(cx, &c).expect("collection of the graph");
        let odd: Vec<usize> = ctx.odd_positions();
        let support: Vec<usize> = (0..omega.len()).filter(|&i| omega[i]).collect();
        supports_match &= odd == support;
        seen.insert(c);
        omegas.insert(from_lambda);
    }
    let evens = even_masks(cx.index()).len();
    let bijective = seen.len() == 1 << rows.len() && seen.len() == evens && omegas.len() == seen.len();
    RowSpaceReport { rows: rows.len(), combinations_match, bijective, supports_match }
}

/// `Σ_ω t · Poin~` over the row space of `λ_G`, where each `ω` picks the
/// tubes on which it is nonzero. Rows are visited in Gray-code order.
pub fn poincare_characteristic(cx: &TubingComplex, d: &Designation, budget: usize) -> Result<IntPolynomial, EngineError> {
    let lambda = lambda_matrix(cx, d);
    let k = lambda.rows.len();
    assert!(k < 40, "too many rows to enumerate the row space");
    let mut omega = vec![false; cx.len()];
    let mut supports = vec![Vec::new()];
    for step in 1u64..1 << k {
        xor_into(&mut omega, &lambda.entries[step.trailing_zeros() as usize]);
        supports.push((0..omega.len()).filter(|&i| omega[i]).collect::<Vec<usize>>());
    }
    let parts: Vec<IntPolynomial> = supports
        .par_iter()
        .map(|s| {
            let b = betti_reduced(&cx.flag_on(s), budget).map_err(|e| match e {
                ComplexError::FaceBudgetExceeded(budget) => EngineError::FaceBudget {
                    graph: cx.graph().to_string(),
                    collection: s.iter().map(|&i| cx.tubes()[i].to_string()).collect::<Vec<_>>().join(" "),
                    budget,
                },
                other => unreachable!("{other}"),
            })?;
            Ok(IntPolynomial::from(b.shifted_coefficients()))
        })
        .collect::<Result<_, EngineError>>()?;
    Ok(parts.into_iter().sum())
}
