use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::Serialize;

/// Integer polynomial in `t`, coefficients in ascending degree with trailing
/// zeros trimmed. The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial(Vec<i64>);

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        IntPolynomial(coefficients)
    }

    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        IntPolynomial(vec![1])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        IntPolynomial(c)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn coefficient(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.0);
        IntPolynomial(c)
    }

    /// Evaluates at an integer.
    pub fn eval(&self, t: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

impl From<&[u64]> for IntPolynomial {
    fn from(c: &[u64]) -> Self {
        IntPolynomial::new(c.iter().map(|&x| x as i64).collect())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.0.len().max(rhs.0.len());
        IntPolynomial::new((0..n).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect())
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        *self = &*self + rhs;
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPolynomial::new(c)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for IntPolynomial {
    /// `1 + 3t + 2t^2`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::new(vec![1, 3, 2]).to_string(), "1 + 3t + 2t^2");
        assert_eq!(IntPolynomial::new(vec![1, 1]).to_string(), "1 + t");
        assert_eq!(IntPolynomial::new(vec![0, 1]).to_string(), "t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::new(vec![0, 0, 0]).to_string(), "0");
        assert_eq!(IntPolynomial::new(vec![-1, 0, -2]).to_string(), "-1 - 2t^2");
    }

    #[test]
    fn arithmetic() {
        let p = IntPolynomial::new(vec![1, 1]);
        let q = IntPolynomial::new(vec![0, 1]);
        assert_eq!(&p * &q, IntPolynomial::new(vec![0, 1, 1]));
        assert_eq!(&p + &q, IntPolynomial::new(vec![1, 2]));
        assert_eq!(p.shift(2), IntPolynomial::new(vec![0, 0, 1, 1]));
        assert_eq!(IntPolynomial::zero().shift(3), IntPolynomial::zero());
        assert_eq!(&p * &IntPolynomial::zero(), IntPolynomial::zero());
        assert_eq!(IntPolynomial::new(vec![1, 3, 2]).eval(1), 6);
        assert_eq!(IntPolynomial::monomial(2).degree(), Some(2));
    }
}
