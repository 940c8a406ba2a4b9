//! Backtracking search for shellings of (not necessarily pure) simplicial
//! complexes.
//!
//! A facet order `F_1, …, F_t` is a shelling when, for every `k ≥ 2`, the
//! part of `F_k` already covered by `F_1, …, F_{k-1}` is pure of dimension
//! `dim F_k - 1`. Equivalently every intersection `F_i ∩ F_k` (`i < k`) lies
//! in some codimension-one face `F_k \ {v}` that is itself covered by an
//! earlier facet.
//!
//! Any shelling can be rearranged so that facet dimensions never increase,
//! so only such orders are searched. Failed sets of placed facets are
//! memoized: whether a prefix can be completed depends only on which facets
//! it contains.

use std::collections::HashSet;

use serde::Serialize;

use crate::complex::{BitSet, SimplicialComplex};
use crate::error::ComplexError;

/// Default number of prefix extensions the search may try.
pub const DEFAULT_SHELLING_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "result", content = "order")]
pub enum Shellability {
    /// A shelling, as indices into the complex's maximal faces.
    Yes(Vec<usize>),
    No,
    Unknown,
}

impl Shellability {
    pub fn is_yes(&self) -> bool {
        matches!(self, Shellability::Yes(_))
    }
}

struct Search<'a> {
    facets: &'a [Vec<usize>],
    sets: Vec<BitSet>,
    failed: HashSet<Vec<u64>>,
    steps: usize,
    budget: usize,
}

fn key(used: &[bool]) -> Vec<u64> {
    crate::linalg::pack(used)
}

impl Search<'_> {
    /// Can facet `k` follow the facets marked in `used`?
    fn fits(&self, used: &[bool], k: usize) -> bool {
        let fk = &self.facets[k];
        let earlier: Vec<usize> = (0..used.len()).filter(|&i| used[i]).collect();
        if earlier.is_empty() {
            return true;
        }
        // vertices v of F_k whose complement F_k \ {v} is covered by an earlier facet
        let removable: Vec<usize> = fk
            .iter()
            .copied()
            .filter(|&v| earlier.iter().any(|&i| fk.iter().all(|&w| w == v || self.sets[i].contains(w))))
            .collect();
        if removable.is_empty() {
            return false;
        }
        earlier.iter().all(|&i| removable.iter().any(|&v| !self.sets[i].contains(v)))
    }

    fn extend(&mut self, used: &mut Vec<bool>, order: &mut Vec<usize>) -> Option<bool> {
        if order.len() == self.facets.len() {
            return Some(true);
        }
        if self.failed.contains(&key(used)) {
            return Some(false);
        }
        // non-increasing dimension: only facets of the largest unused size
        let size = (0..self.facets.len()).filter(|&i| !used[i]).map(|i| self.facets[i].len()).max()?;
        for k in 0..self.facets.len() {
            if used[k] || self.facets[k].len() != size || !self.fits(used, k) {
                continue;
            }
            self.steps += 1;
            if self.steps > self.budget {
                return None;
            }
            used[k] = true;
            order.push(k);
            match self.extend(used, order) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            used[k] = false;
            order.pop();
        }
        self.failed.insert(key(used));
        Some(false)
    }
}

/// Searches for a shelling of `k` within `budget` prefix extensions.
pub fn shellable(k: &SimplicialComplex, budget: usize) -> Result<Shellability, ComplexError> {
    let facets = k.maximal_faces(usize::MAX)?;
    let n = k.vertex_count();
    let sets = facets
        .iter()
        .map(|f| {
            let mut s = BitSet::new(n.max(1));
            for &v in f {
                s.insert(v);
            }
            s
        })
        .collect();
    let mut search = Search { facets: &facets, sets, failed: HashSet::new(), steps: 0, budget };
    let mut used = vec![false; facets.len()];
    let mut order = Vec::new();
    Ok(match search.extend(&mut used, &mut order) {
        Some(true) => Shellability::Yes(order),
        Some(false) => Shellability::No,
        None => Shellability::Unknown,
    })
}

/// Checks a proposed shelling order of the maximal faces.
pub fn is_shelling(k: &SimplicialComplex, order: &[usize]) -> Result<bool, ComplexError> {
    let facets = k.maximal_faces(usize::MAX)?;
    let mut seen = vec![false; facets.len()];
    for &i in order {
        if i >= facets.len() || seen[i] {
            return Ok(false);
        }
        seen[i] = true;
    }
    if order.len() != facets.len() {
        return Ok(false);
    }
    // the pure-intersection test, computed directly on face sets
    for (pos, &k_idx) in order.iter().enumerate().skip(1) {
        let fk = &facets[k_idx];
        let inter: Vec<Vec<usize>> = order[..pos]
            .iter()
            .map(|&i| fk.iter().copied().filter(|v| facets[i].contains(v)).collect())
            .collect();
        let maximal: Vec<&Vec<usize>> = inter
            .iter()
            .filter(|a| !inter.iter().any(|b| b.len() > a.len() && a.iter().all(|x| b.contains(x))))
            .collect();
        if maximal.iter().any(|m| m.len() + 1 != fk.len()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn triangle_boundary_is_shellable() {
        let k = SimplicialComplex::from_facets(labels(3), vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        match shellable(&k, 1000).unwrap() {
            Shellability::Yes(order) => assert!(is_shelling(&k, &order).unwrap()),
            other => panic!("expected a shelling, got {other:?}"),
        }
    }

    #[test]
    fn two_disjoint_edges_are_not_shellable() {
        let k = SimplicialComplex::from_facets(labels(4), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(shellable(&k, 1000).unwrap(), Shellability::No);
    }

    #[test]
    fn points_are_shellable() {
        let k = SimplicialComplex::flag(labels(3), []);
        assert!(shellable(&k, 1000).unwrap().is_yes());
    }

    #[test]
    fn nonpure_example() {
        // a triangle with a pendant edge: shellable (triangle first, then the edge)
        let k = SimplicialComplex::from_facets(labels(4), vec![vec![0, 1, 2], vec![2, 3]]);
        assert!(shellable(&k, 1000).unwrap().is_yes());
        // so is a triangle plus an isolated vertex: the point meets the rest in {∅}
        let k = SimplicialComplex::from_facets(labels(4), vec![vec![0, 1, 2], vec![3]]);
        assert!(shellable(&k, 1000).unwrap().is_yes());
    }

    #[test]
    fn bowtie_is_not_shellable() {
        // two triangles sharing one vertex
        let k = SimplicialComplex::from_facets(labels(5), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(shellable(&k, 1000).unwrap(), Shellability::No);
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let k = SimplicialComplex::from_facets(labels(3), vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(shellable(&k, 1).unwrap(), Shellability::Unknown);
    }

    #[test]
    fn order_checker_rejects_bad_orders() {
        let k = SimplicialComplex::from_facets(labels(4), vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let f = k.maximal_faces(10).unwrap();
        let pos = |v: Vec<usize>| f.iter().position(|x| *x == v).unwrap();
        assert!(!is_shelling(&k, &[pos(vec![0, 1]), pos(vec![2, 3]), pos(vec![1, 2])]).unwrap());
        assert!(is_shelling(&k, &[pos(vec![0, 1]), pos(vec![1, 2]), pos(vec![2, 3])]).unwrap());
    }
}
