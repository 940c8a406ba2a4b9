//! a-polynomials and two independent computations of the Poincaré
//! polynomial of the real toric manifold of a pseudograph: summing over
//! every even collection, or over the subgraphs `H ⋖ G` and their
//! admissible collections.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{ComplexError, EngineError};
use crate::graph::Pseudograph;
use crate::homology::{betti_reduced, BettiVector};
use crate::parity::{admissible_masks, even_masks, is_admissible, is_even_star, ParityContext};
use crate::poly::IntPolynomial;
use crate::tube::{Mask, TubingComplex};

fn budget_error(cx: &TubingComplex, mask: Mask, e: ComplexError) -> EngineError {
    match e {
        ComplexError::FaceBudgetExceeded(budget) => EngineError::FaceBudget {
            graph: cx.graph().to_string(),
            collection: cx.index().collection_of(mask).to_string(),
            budget,
        },
        ComplexError::VertexClash(_) => unreachable!("no joins are formed here"),
    }
}

fn odd_betti(cx: &TubingComplex, mask: Mask, budget: usize) -> Result<BettiVector, EngineError> {
    let k = ParityContext::from_mask(cx, mask).k_odd();
    betti_reduced(&k, budget).map_err(|e| budget_error(cx, mask, e))
}

/// `t · Σ_C Poin~(K^odd_C)` over the given collections, with the empty
/// complex contributing the constant 1.
fn shifted_sum(cx: &TubingComplex, masks: &[Mask], budget: usize) -> Result<IntPolynomial, EngineError> {
    let parts: Vec<IntPolynomial> = masks
        .par_iter()
        .map(|&m| odd_betti(cx, m, budget).map(|b| IntPolynomial::from(b.shifted_coefficients())))
        .collect::<Result<_, _>>()?;
    Ok(parts.into_iter().sum())
}

/// `a_H(t)`: the sum over admissible collections `C` of `Poin~(K^odd_{C,H})`.
/// Zero when `h` has no admissible collection.
pub fn a_polynomial(h: &Pseudograph, budget: usize) -> Result<IntPolynomial, EngineError> {
    let cx = TubingComplex::new(h)?;
    let shifted = shifted_sum(&cx, &admissible_masks(cx.index()), budget)?;
    assert_eq!(shifted.coefficient(0), 0, "admissible collections have nonempty odd complexes");
    Ok(IntPolynomial::new(shifted.coefficients().iter().skip(1).copied().collect()))
}

/// `1 + t Σ_{H ⋖ G} a_H(t)`.
pub fn poincare_reduced(g: &Pseudograph, budget: usize) -> Result<IntPolynomial, EngineError> {
    let parts: Vec<IntPolynomial> =
        g.enumerate_lessdot().par_iter().map(|h| a_polynomial(h, budget)).collect::<Result<_, _>>()?;
    let sum: IntPolynomial = parts.into_iter().sum();
    Ok(&IntPolynomial::one() + &sum.shift(1))
}

/// `β^i = Σ_C β̃_{i-1}(K^odd_C)` over every even collection `C`, the empty
/// collection supplying the constant term.
pub fn poincare_brute(g: &Pseudograph, budget: usize) -> Result<IntPolynomial, EngineError> {
    let cx = TubingComplex::new(g)?;
    shifted_sum(&cx, &even_masks(cx.index()), budget)
}

/// a-polynomials of every `H ⋖ G`, in enumeration order.
pub fn lessdot_polynomials(g: &Pseudograph, budget: usize) -> Result<Vec<(Pseudograph, IntPolynomial)>, EngineError> {
    g.enumerate_lessdot().into_par_iter().map(|h| a_polynomial(&h, budget).map(|a| (h, a))).collect()
}

/// A failed check from [`cross_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub collection: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub graph: String,
    pub reduced: IntPolynomial,
    pub brute: IntPolynomial,
    pub collections: usize,
    pub failures: Vec<Counterexample>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.reduced == self.brute && self.failures.is_empty()
    }
}

/// Per-collection checks: equal Betti numbers along `K^odd ⊇ K′ ⊇ K″`; for
/// collections with every component of `Γ̃_G(C)` even, admissibility to
/// `Γ_G(C)` and an isomorphism onto `K^odd` of `Γ_G(C)`; otherwise an
/// acyclic `K″`.
fn check_collection(cx: &TubingComplex, mask: Mask, budget: usize) -> Result<Vec<Counterexample>, EngineError> {
    let g = cx.graph();
    let ctx = ParityContext::from_mask(cx, mask);
    let c = ctx.collection();
    let fail = |check: &str, detail: String| Counterexample { check: check.into(), collection: c.to_string(), detail };
    let betti = |positions: &[usize]| betti_reduced(&cx.flag_on(positions), budget).map_err(|e| budget_error(cx, mask, e));
    let mut out = Vec::new();

    let odd = ctx.odd_positions();
    let prime = ctx.prime_positions();
    let dprime = ctx.double_prime_positions();
    let b_odd = betti(&odd)?;
    let b_prime = if prime == odd { b_odd.clone() } else { betti(&prime)? };
    let b_dprime = if dprime == prime { b_prime.clone() } else { betti(&dprime)? };
    if b_odd != b_prime || b_prime != b_dprime {
        out.push(fail("subcomplex chain", format!("K^odd {b_odd}, K' {b_prime}, K'' {b_dprime}")));
    }

    let star = is_even_star(g, c)?;
    let gamma = g.gamma(c)?;
    let admissible = is_admissible(&gamma, c);
    if star != admissible {
        out.push(fail("even* iff admissible to gamma", format!("even* {star}, admissible {admissible}, gamma {gamma}")));
    }
    if star {
        if !ctx.tilde_isomorphism()? {
            out.push(fail("tilde isomorphism", format!("gamma {gamma}")));
        }
    } else if !b_dprime.is_acyclic() {
        out.push(fail("odd component forces acyclic K''", format!("K'' {b_dprime}")));
    }
    Ok(out)
}

/// Computes both routes and checks the intermediate statements on every
/// even collection and every admissible pair `(H, C)` with `H ⋖ G`.
pub fn cross_check(g: &Pseudograph, budget: usize) -> Result<CrossCheck, EngineError> {
    let reduced = poincare_reduced(g, budget)?;
    let brute = poincare_brute(g, budget)?;
    let cx = TubingComplex::new(g)?;
    let masks = even_masks(cx.index());
    let per_c: Vec<Vec<Counterexample>> =
        masks.par_iter().map(|&m| check_collection(&cx, m, budget)).collect::<Result<_, _>>()?;
    let mut failures: Vec<Counterexample> = per_c.into_iter().flatten().collect();
    for h in g.enumerate_lessdot() {
        let hx = TubingComplex::new(&h)?;
        for m in admissible_masks(hx.index()) {
            let c = hx.index().collection_of(m);
            let gamma = g.gamma(&c)?;
            if gamma != h {
                failures.push(Counterexample {
                    check: "admissible pair determines gamma".into(),
                    collection: c.to_string(),
                    detail: format!("H {h}, gamma {gamma}"),
                });
            }
        }
    }
    Ok(CrossCheck { graph: g.to_string(), reduced, brute, collections: masks.len(), failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::DEFAULT_FACE_BUDGET as B;
    use crate::fixtures;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    #[test]
    fn bundled_path() {
        let g = fixtures::bundled_path();
        assert_eq!(poincare_reduced(&g, B).unwrap(), p(&[1, 3, 2]));
        assert_eq!(poincare_brute(&g, B).unwrap(), p(&[1, 3, 2]));
        assert_eq!(a_polynomial(&g, B).unwrap(), p(&[0, 1]));
        assert_eq!(a_polynomial(&fixtures::digon(), B).unwrap(), p(&[1, 1]));
        assert_eq!(a_polynomial(&fixtures::path(2), B).unwrap(), p(&[1]));
        assert!(a_polynomial(&fixtures::path(3), B).unwrap().is_zero());

        let nonzero: Vec<IntPolynomial> =
            lessdot_polynomials(&g, B).unwrap().into_iter().map(|(_, a)| a).filter(|a| !a.is_zero()).collect();
        assert_eq!(nonzero.len(), 4);
        assert_eq!(nonzero.into_iter().sum::<IntPolynomial>(), p(&[3, 2]));
    }

    #[test]
    fn small_simple_graphs() {
        assert_eq!(poincare_reduced(&fixtures::isolated(1), B).unwrap(), p(&[1]));
        assert_eq!(poincare_brute(&fixtures::isolated(1), B).unwrap(), p(&[1]));
        assert_eq!(poincare_reduced(&fixtures::path(3), B).unwrap(), p(&[1, 2]));
        assert_eq!(poincare_brute(&fixtures::path(3), B).unwrap(), p(&[1, 2]));
        assert_eq!(poincare_brute(&fixtures::path(2), B).unwrap(), p(&[1, 1]));
        assert_eq!(poincare_brute(&fixtures::isolated(2), B).unwrap(), p(&[1]));
    }

    #[test]
    fn cross_checks_pass_on_fixtures() {
        for g in [fixtures::bundled_path(), fixtures::double_bundle_path(), fixtures::bundled_square()] {
            let report = cross_check(&g, B).unwrap();
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn budget_exhaustion_names_the_collection() {
        let err = poincare_brute(&fixtures::bundled_path(), 3).unwrap_err();
        assert!(matches!(err, EngineError::FaceBudget { budget: 3, .. }), "{err}");
    }

    fn shifted_copy(g: &Pseudograph, by: u32) -> Pseudograph {
        let letters = "abcdefghijklmnopqrstuvwxyz";
        g.map_nodes(|v| v + by)
            .unwrap()
            .map_labels(|l| {
                let k = letters.find(l).unwrap();
                letters[(k + 13) % 26..(k + 13) % 26 + 1].to_string()
            })
            .unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn routes_agree(g in fixtures::arb_connected(4, 2, 3)) {
            prop_assert_eq!(poincare_reduced(&g, B).unwrap(), poincare_brute(&g, B).unwrap());
        }

        #[test]
        fn product_and_join_rules(g in fixtures::arb_connected(3, 1, 2), h in fixtures::arb_connected(3, 1, 2)) {
            let h = shifted_copy(&h, 10);
            let u = g.disjoint_union(&h).unwrap();
            prop_assert_eq!(
                poincare_brute(&u, B).unwrap(),
                &poincare_brute(&g, B).unwrap() * &poincare_brute(&h, B).unwrap()
            );
            let expected = (&a_polynomial(&g, B).unwrap() * &a_polynomial(&h, B).unwrap()).shift(1);
            prop_assert_eq!(a_polynomial(&u, B).unwrap(), expected);
        }

        #[test]
        fn simple_graphs_have_monomial_a_polynomials(g in fixtures::arb_connected(5, 0, 0)) {
            let adm = crate::parity::admissible_collections(&g).unwrap();
            let a = a_polynomial(&g, B).unwrap();
            let n = g.nodes().len();
            if adm.is_empty() {
                prop_assert!(a.is_zero());
            } else {
                prop_assert_eq!(adm.len(), 1);
                prop_assert_eq!(n % 2, 0);
                prop_assert_eq!(adm[0].len(), n);
                // K^odd is a wedge of (n/2 - 1)-spheres, so t · a_H has degree n/2
                prop_assert_eq!(a.degree(), Some(n / 2 - 1));
                prop_assert!(a.coefficients()[..n / 2 - 1].iter().all(|&c| c == 0));
            }
        }

        #[test]
        fn constant_term_and_degree(g in fixtures::arb_connected(4, 2, 3)) {
            let poin = poincare_brute(&g, B).unwrap();
            prop_assert_eq!(poin.coefficient(0), 1);
            prop_assert!(poin.degree().unwrap() <= TubingComplex::new(&g).unwrap().dimension());
        }
    }
}
