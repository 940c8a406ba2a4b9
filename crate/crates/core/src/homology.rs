//! Reduced rational homology of simplicial complexes.

use std::fmt;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::ComplexError;
use crate::linalg::{self, SparseColumn};

/// Reduced Betti numbers `β̃_{-1}, β̃_0, β̃_1, …`, trailing zeros trimmed
/// (the entry for dimension −1 is always kept).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BettiVector(Vec<u64>);

impl BettiVector {
    /// From a list starting at dimension −1.
    pub fn new(mut values: Vec<u64>) -> Self {
        while values.len() > 1 && values.last() == Some(&0) {
            values.pop();
        }
        if values.is_empty() {
            values.push(0);
        }
        BettiVector(values)
    }

    /// `β̃_dim`, for `dim >= -1`.
    pub fn get(&self, dim: isize) -> u64 {
        usize::try_from(dim + 1).ok().and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    /// Entries starting at dimension −1.
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Every reduced Betti number vanishes.
    pub fn is_acyclic(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^i β̃_i`.
    pub fn euler(&self) -> i64 {
        self.0.iter().enumerate().map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) }).sum()
    }

    /// Highest dimension with a nonzero entry.
    pub fn top_dimension(&self) -> Option<isize> {
        self.0.iter().rposition(|&b| b != 0).map(|i| i as isize - 1)
    }

    /// Coefficients of `Σ_{i ≥ -1} β̃_i t^{i+1}`, i.e. `t · Poin~` with the
    /// empty complex contributing the constant 1.
    pub fn shifted_coefficients(&self) -> &[u64] {
        &self.0
    }

    /// Betti numbers of the join of two complexes with these Betti numbers:
    /// `β̃_n(K * L) = Σ_{i+j=n-1} β̃_i(K) β̃_j(L)`.
    pub fn join(&self, other: &BettiVector) -> BettiVector {
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BettiVector::new(out)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Position of `face` minus its `skip`-th vertex in the sorted `level`.
fn facet_position(level: &[Vec<usize>], face: &[usize], skip: usize) -> u32 {
    let dropped = face[..skip].iter().chain(&face[skip + 1..]);
    let pos = level.binary_search_by(|probe| probe.iter().cmp(dropped.clone()));
    pos.expect("faces are closed under taking facets") as u32
}

/// Boundary matrix from faces of size `k` to faces of size `k - 1`,
/// restricted to the upper faces selected by `keep`.
fn boundary(lower: &[Vec<usize>], upper: &[Vec<usize>], keep: impl Fn(usize) -> bool) -> Vec<SparseColumn> {
    upper
        .iter()
        .enumerate()
        .filter(|&(j, _)| keep(j))
        .map(|(_, face)| {
            let mut col: SparseColumn = (0..face.len())
                .map(|skip| (facet_position(lower, face, skip), if skip % 2 == 0 { 1 } else { -1 }))
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect()
}

/// Exact reduced Betti numbers over the rationals, from the augmented chain
/// complex.
pub fn betti_reduced(k: &SimplicialComplex, budget: usize) -> Result<BettiVector, ComplexError> {
    let faces = k.strong_core().faces(None, budget)?;
    Ok(betti_from_faces(&faces))
}

pub(crate) fn betti_from_faces(faces: &[Vec<Vec<usize>>]) -> BettiVector {
    let top = faces.len();
    // ranks[s] = rank of the boundary from size s to size s - 1. Working
    // downwards, a face that is a pivot row one level up has a boundary in
    // the span of the other columns, so its column is skipped.
    let mut ranks = vec![0usize; top + 1];
    let mut cleared: Vec<u32> = Vec::new();
    for s in (1..top).rev() {
        let columns = boundary(&faces[s - 1], &faces[s], |j| cleared.binary_search(&(j as u32)).is_err());
        cleared = linalg::pivot_rows(&columns);
        ranks[s] = cleared.len();
    }
    let betti = (0..top).map(|s| (faces[s].len() - ranks[s] - ranks[s + 1]) as u64).collect();
    BettiVector::new(betti)
}

/// `χ̃ = Σ_{i ≥ -1} (-1)^i f_i`, from face counts alone.
pub fn euler_reduced(k: &SimplicialComplex, budget: usize) -> Result<i64, ComplexError> {
    let f = k.f_vector(budget)?;
    Ok(f.iter().enumerate().map(|(s, &n)| if s % 2 == 1 { n as i64 } else { -(n as i64) }).sum())
}
