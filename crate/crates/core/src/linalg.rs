//! Exact integer linear algebra: rank over the rationals by fraction-free
//! sparse elimination, Bareiss determinants, and ranks over the two-element
//! field.
//!
//! Elimination runs on machine integers with overflow checks and restarts on
//! arbitrary-precision integers when a checked operation overflows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer column: `(row, value)` pairs sorted by row, no zeros.
pub type SparseColumn = Vec<(u32, i64)>;

trait Scalar: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn abs_is_one(&self) -> bool;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn abs_is_one(&self) -> bool {
        self.is_unit()
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn abs_is_one(&self) -> bool {
        self.abs().is_one()
    }
}

struct Overflow;

/// `scale * col - factor * pivot`, then divided by the content of the result.
fn combine<T: Scalar>(col: &[(u32, T)], scale: &T, pivot: &[(u32, T)], factor: &T) -> Result<Vec<(u32, T)>, Overflow> {
    let mut out = Vec::with_capacity(col.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    let one = scale.abs_is_one() && *scale == T::from_i64(1);
    while i < col.len() || j < pivot.len() {
        let take_col = j == pivot.len() || (i < col.len() && col[i].0 < pivot[j].0);
        let take_piv = i == col.len() || (j < pivot.len() && pivot[j].0 < col[i].0);
        if take_col {
            let v = if one { col[i].1.clone() } else { scale.mul(&col[i].1).ok_or(Overflow)? };
            out.push((col[i].0, v));
            i += 1;
        } else if take_piv {
            let v = T::from_i64(0).sub(&factor.mul(&pivot[j].1).ok_or(Overflow)?).ok_or(Overflow)?;
            out.push((pivot[j].0, v));
            j += 1;
        } else {
            let a = if one { col[i].1.clone() } else { scale.mul(&col[i].1).ok_or(Overflow)? };
            let v = a.sub(&factor.mul(&pivot[j].1).ok_or(Overflow)?).ok_or(Overflow)?;
            if !v.is_nil() {
                out.push((col[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    if let Some((_, first)) = out.first() {
        let mut g = first.clone();
        for (_, v) in &out[1..] {
            if g.is_unit() {
                break;
            }
            g = g.gcd(v);
        }
        if !g.is_unit() && !g.is_nil() {
            for (_, v) in &mut out {
                *v = v.div_exact(&g);
            }
        }
    }
    Ok(out)
}

/// Row indices of the pivots (lowest nonzero entries) after reduction.
fn reduce<T: Scalar>(columns: &[Vec<(u32, T)>]) -> Result<Vec<u32>, Overflow> {
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    for col in columns {
        let mut col = col.clone();
        while let Some((low, a)) = col.last().cloned() {
            match pivots.get(&low) {
                None => {
                    pivots.insert(low, col);
                    break;
                }
                Some(p) => {
                    let b = p.last().expect("pivot columns are nonempty").1.clone();
                    col = if b.is_unit() {
                        // b = ±1: col - (a * b) * p clears the entry
                        combine(&col, &T::from_i64(1), p, &a.mul(&b).ok_or(Overflow)?)?
                    } else {
                        combine(&col, &b, p, &a)?
                    };
                }
            }
        }
    }
    let mut rows: Vec<u32> = pivots.into_keys().collect();
    rows.sort_unstable();
    Ok(rows)
}

/// Rank over the rationals of the matrix whose columns are given.
pub fn rank(columns: &[SparseColumn]) -> usize {
    pivot_rows(columns).len()
}

/// Pivot rows of the left-to-right column reduction over the rationals,
/// ascending. Their number is the rank.
pub fn pivot_rows(columns: &[SparseColumn]) -> Vec<u32> {
    match reduce(columns) {
        Ok(rows) => rows,
        Err(Overflow) => {
            let big: Vec<Vec<(u32, BigInt)>> =
                columns.iter().map(|c| c.iter().map(|&(r, v)| (r, BigInt::from(v))).collect()).collect();
            reduce(&big).unwrap_or_else(|_| unreachable!("big integers do not overflow"))
        }
    }
}

pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank over the two-element field; rows are bit vectors.
pub fn rank_gf2(rows: &[Vec<bool>]) -> usize {
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut leads: Vec<usize> = Vec::new();
    for row in rows {
        let mut v = pack(row);
        for (b, &lead) in basis.iter().zip(&leads) {
            if v[lead / 64] >> (lead % 64) & 1 == 1 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        if let Some(lead) = first_bit(&v) {
            basis.push(v);
            leads.push(lead);
        }
    }
    basis.len()
}

pub(crate) fn pack(row: &[bool]) -> Vec<u64> {
    let mut v = vec![0u64; row.len().div_ceil(64)];
    for (i, &b) in row.iter().enumerate() {
        if b {
            v[i / 64] |= 1 << (i % 64);
        }
    }
    v
}

fn first_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().find(|(_, &w)| w != 0).map(|(k, w)| 64 * k + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_to_columns(m: &[Vec<i64>]) -> Vec<SparseColumn> {
        let cols = m.first().map_or(0, Vec::len);
        (0..cols)
            .map(|j| (0..m.len()).filter(|&i| m[i][j] != 0).map(|i| (i as u32, m[i][j])).collect())
            .collect()
    }

    /// Rank by exact rational Gaussian elimination on dense big integers.
    fn oracle_rank(m: &[Vec<i64>]) -> usize {
        use num_rational::BigRational;
        let mut a: Vec<Vec<BigRational>> =
            m.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
        let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let pivot = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = &row[c] / &pivot[c];
                    for (x, p) in row.iter_mut().zip(&pivot) {
                        *x -= &f * p;
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank(&dense_to_columns(&m)), 2);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![], vec![(0, 5)]]), 1);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = 3_000_000_019i64;
        let m = vec![vec![big, 1, 0], vec![1, big, 1], vec![0, 1, big], vec![big, big, big]];
        assert_eq!(rank(&dense_to_columns(&m)), oracle_rank(&m));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 1]]), BigInt::from(1));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), BigInt::from(-3));
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::from(0));
        assert_eq!(determinant(&[]), BigInt::from(1));
    }

    #[test]
    fn gf2() {
        let rows = vec![vec![true, true, false], vec![false, true, true], vec![true, false, true]];
        assert_eq!(rank_gf2(&rows), 2);
    }

    proptest! {
        #[test]
        fn rank_matches_rational_elimination(m in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 1..7)) {
            prop_assert_eq!(rank(&dense_to_columns(&m)), oracle_rank(&m));
        }

        #[test]
        fn determinant_zero_iff_rank_deficient(m in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 4), 4)) {
            let full = rank(&dense_to_columns(&m)) == 4;
            prop_assert_eq!(full, !determinant(&m).is_zero());
        }
    }
}
