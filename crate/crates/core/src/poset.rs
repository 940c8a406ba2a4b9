//! Finite posets, their order complexes and Möbius functions, and the posets
//! of subgraphs whose components are tubes of one parity.

use serde::Serialize;

use crate::complex::{SimplicialComplex, DEFAULT_FACE_BUDGET};
use crate::error::{ComplexError, ParityError};
use crate::graph::{Collection, Pseudograph};
use crate::parity::{Parity, ParityContext};
use crate::tube::{Mask, TubingComplex};

/// A finite partial order on labelled elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinitePoset {
    labels: Vec<String>,
    /// `less[i][j]`: element `i` lies strictly below element `j`.
    #[serde(skip)]
    less: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Builds a poset from a reflexive, antisymmetric and transitive relation.
    ///
    /// Panics when the relation is not a partial order.
    pub fn new(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let less: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i != j && leq(i, j)).collect()).collect();
        for i in 0..n {
            assert!(leq(i, i), "relation is not reflexive at `{}`", labels[i]);
            for j in 0..n {
                assert!(!(less[i][j] && less[j][i]), "relation is not antisymmetric");
                for k in 0..n {
                    assert!(!(less[i][j] && less[j][k]) || less[i][k], "relation is not transitive");
                }
            }
        }
        FinitePoset { labels, less }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    /// Cover relations `(lower, upper)`: the edges of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.less[i][j] && !(0..n).any(|k| self.less[i][k] && self.less[k][j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Chains as faces: the flag complex of the comparability graph.
    pub fn order_complex(&self) -> SimplicialComplex {
        let n = self.len();
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        let edges: Vec<_> = edges.filter(|&(i, j)| self.less[i][j] || self.less[j][i]).collect();
        SimplicialComplex::flag(self.labels.clone(), edges)
    }

    /// `μ(0̂, 1̂)` after adjoining a bottom and a top element.
    pub fn mobius(&self) -> i64 {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&j| (0..n).filter(|&i| self.less[i][j]).count());
        // mu[x] = μ(0̂, x) = -Σ_{0̂ ≤ y < x} μ(0̂, y)
        let mut mu = vec![0i64; n];
        for &x in &order {
            mu[x] = -1 - (0..n).filter(|&y| self.less[y][x]).map(|y| mu[y]).sum::<i64>();
        }
        -1 - mu.iter().sum::<i64>()
    }
}

/// Which element besides the empty subgraph is left out of the parity
/// posets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exclusion {
    /// The subgraph whose set representation is the collection itself.
    #[default]
    Collection,
    /// The subgraph of `G` spanned by `Γ_G(C)`: the nodes touched by `C`
    /// and the bundles meeting `C`.
    Gamma,
}

/// Nonempty subgraphs whose components are tubes of the given parity, as
/// union masks over `C_G`, in canonical order.
fn parity_elements(ctx: &ParityContext, parity: Parity, budget: usize) -> Result<Vec<Mask>, ComplexError> {
    let cx = ctx.complex();
    let index = cx.index();
    let chosen = match parity {
        Parity::Odd => ctx.odd_positions(),
        Parity::Even => ctx.even_positions(),
    };
    let masks: Vec<Mask> = chosen.iter().map(|&i| cx.masks()[i]).collect();
    let n = masks.len();
    let labels = (0..n).map(|i| i.to_string()).collect();
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| index.separated(masks[i], masks[j]))
        .collect();
    let families = SimplicialComplex::flag(labels, edges).faces(None, budget)?;
    let mut out: Vec<Mask> =
        families.iter().skip(1).flatten().map(|f| f.iter().fold(0, |acc, &i| acc | masks[i])).collect();
    out.sort_by_key(|&m| index.sort_key(m));
    out.dedup();
    Ok(out)
}

/// The poset of nonempty subgraphs of `g` whose components are tubes of the
/// given parity with respect to `c`, ordered by containment. The element
/// named by `exclusion` is left out.
pub fn s_parity_poset(
    g: &Pseudograph,
    c: &Collection,
    parity: Parity,
    exclusion: Exclusion,
) -> Result<FinitePoset, ParityError> {
    let cx = TubingComplex::new(g)?;
    let ctx = ParityContext::new(&cx, c)?;
    let index = cx.index();
    let excluded = match exclusion {
        Exclusion::Collection => index.mask_of(c)?,
        Exclusion::Gamma => {
            let gamma = g.gamma(c)?;
            let labels = gamma.bundles().iter().flat_map(|b| &b.labels).map(|l| crate::graph::Member::Edge(l.clone()));
            let members = gamma.nodes().iter().map(|&v| crate::graph::Member::Node(v)).chain(labels);
            index.mask_of(&Collection::new(members))?
        }
    };
    let elements: Vec<Mask> =
        parity_elements(&ctx, parity, DEFAULT_FACE_BUDGET)?.into_iter().filter(|&m| m != excluded).collect();
    let labels = elements.iter().map(|&m| index.name_of(m)).collect();
    Ok(FinitePoset::new(labels, |i, j| elements[i] & !elements[j] == 0))
}

pub fn order_complex(p: &FinitePoset) -> SimplicialComplex {
    p.order_complex()
}

/// `μ(0̂, 1̂)`, which by Hall's theorem is the reduced Euler characteristic
/// of the order complex.
pub fn mobius_euler(p: &FinitePoset) -> i64 {
    p.mobius()
}
