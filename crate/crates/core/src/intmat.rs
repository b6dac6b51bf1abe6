//! Exact integer matrices and polynomials.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

const OVERFLOW: &str = "integer arithmetic overflowed i128";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
    labels: Vec<String>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols], labels: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Attach row/column labels (square matrices indexed by vertices).
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = labels;
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> Vec<Vec<i128>> {
        (0..self.rows).map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t.labels = self.labels.clone();
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut m = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..o.cols {
                    let v = m.get(r, c).checked_add(a.checked_mul(o.get(k, c)).expect(OVERFLOW)).expect(OVERFLOW);
                    m.set(r, c, v);
                }
            }
        }
        m
    }

    pub fn neg(&self) -> Self {
        let mut m = self.clone();
        for x in m.data.iter_mut() {
            *x = -*x;
        }
        m
    }

    pub fn sum(&self) -> i128 {
        self.data.iter().sum()
    }

    /// `P^T M P` for the permutation taking new index `k` to old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                m.set(a, b, self.get(perm[a], perm[b]));
            }
        }
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i128 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut m = self.entries();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                    return 0;
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[i][j]
                        .checked_mul(m[k][k])
                        .and_then(|a| m[i][k].checked_mul(m[k][j]).and_then(|b| a.checked_sub(b)))
                        .expect(OVERFLOW);
                    m[i][j] = v / prev;
                }
            }
            prev = m[k][k];
        }
        sign * m[n - 1][n - 1]
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<Self, Error> {
        let d = self.det();
        if d.abs() != 1 {
            return Err(Error::NonUnimodularCartan(d));
        }
        // Gauss-Jordan over Z works because every pivot can be made ±1 by
        // row operations when det = ±1; use rationals to stay simple.
        use crate::field::{Field, Rational};
        use crate::linalg::Matrix;
        let n = self.rows;
        let mut m = Matrix::<Rational>::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, Rational::new(self.get(r, c), 1));
            }
        }
        let inv = m.inverse().ok_or(Error::NonUnimodularCartan(d))?;
        let mut out = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                let x = inv.get(r, c);
                let v = x.to_integer().ok_or_else(|| Error::Verification("non-integral inverse".into()))?;
                debug_assert!(!Rational::new(v, 1).is_zero() || v == 0);
                out.set(r, c, v);
            }
        }
        out.labels = self.labels.clone();
        Ok(out)
    }

    /// Characteristic polynomial `det(x I - M)`, by Bareiss elimination over
    /// Z[x] with exact polynomial division.
    pub fn charpoly(&self) -> IntPolynomial {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return IntPolynomial::one();
        }
        let mut m: Vec<Vec<IntPolynomial>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut p = IntPolynomial::constant(-self.get(r, c));
                        if r == c {
                            p = p.add(&IntPolynomial::x());
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        let mut sign = 1i128;
        let mut prev = IntPolynomial::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return IntPolynomial::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        m[n - 1][n - 1].scale(sign)
    }

    /// Characteristic polynomial by cofactor expansion; exponential, for
    /// cross-checks on tiny matrices.
    pub fn charpoly_cofactor(&self) -> IntPolynomial {
        let n = self.rows;
        let m: Vec<Vec<IntPolynomial>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut p = IntPolynomial::constant(-self.get(r, c));
                        if r == c {
                            p = p.add(&IntPolynomial::x());
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        fn det(m: &[Vec<IntPolynomial>]) -> IntPolynomial {
            let n = m.len();
            if n == 0 {
                return IntPolynomial::one();
            }
            let mut acc = IntPolynomial::zero();
            for c in 0..n {
                let minor: Vec<Vec<IntPolynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = m[0][c].mul(&det(&minor));
                acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        det(&m)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| alloc::format!("{}", self.get(r, c))).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i128) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![0, 1])
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = o.coeffs.get(i).copied().unwrap_or(0);
                a.checked_add(b).expect(OVERFLOW)
            })
            .collect();
        Self::new(c)
    }

    pub fn scale(&self, k: i128) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a.checked_mul(k).expect(OVERFLOW)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0i128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].checked_add(a.checked_mul(b).expect(OVERFLOW)).expect(OVERFLOW);
            }
        }
        Self::new(c)
    }

    /// `self / d` when the quotient is an integer polynomial with no remainder.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dl = d.coeffs.len();
        if rem.len() < dl {
            return rem.iter().all(|&x| x == 0).then(Self::zero);
        }
        let mut q = vec![0i128; rem.len() - dl + 1];
        let lead = d.leading();
        for k in (0..q.len()).rev() {
            let top = rem[k + dl - 1];
            if top % lead != 0 {
                return None;
            }
            let c = top / lead;
            q[k] = c;
            for (i, &b) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].checked_sub(c.checked_mul(b).expect(OVERFLOW)).expect(OVERFLOW);
            }
        }
        rem.iter().all(|&x| x == 0).then(|| Self::new(q))
    }

    pub fn eval(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc.checked_mul(x).and_then(|v| v.checked_add(c)).expect(OVERFLOW))
    }

    /// Palindromic (`a_k = a_{n-k}`) or anti-palindromic (`a_k = -a_{n-k}`).
    pub fn is_self_reciprocal_up_to_sign(&self) -> bool {
        let n = self.coeffs.len();
        let pal = (0..n).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k]);
        let anti = (0..n).all(|k| self.coeffs[k] == -self.coeffs[n - 1 - k]);
        pal || anti
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let body = match (k, a) {
                (0, _) => alloc::format!("{a}"),
                (1, 1) => "x".into(),
                (1, _) => alloc::format!("{a}x"),
                (_, 1) => alloc::format!("x^{k}"),
                _ => alloc::format!("{a}x^{k}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(m.det(), 1);
        let inv = m.inverse_unimodular().unwrap();
        assert_eq!(m.mul(&inv), IntMatrix::identity(2));
        let s = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]);
        assert_eq!(s.inverse_unimodular(), Err(Error::NonUnimodularCartan(2)));
        let z = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(z.det(), -2);
    }

    #[test]
    fn charpoly_small() {
        // [[0,1],[-1,-1]] has x^2 + x + 1
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![-1, -1]]);
        assert_eq!(m.charpoly().coeffs(), &[1, 1, 1]);
        let z = IntMatrix::from_rows(&[vec![0, 0], vec![0, 0]]);
        assert_eq!(z.charpoly().coeffs(), &[0, 0, 1]);
        let m = IntMatrix::from_rows(&[vec![1, 2, 0], vec![0, 1, 3], vec![4, 0, 1]]);
        assert_eq!(m.charpoly(), m.charpoly_cofactor());
    }

    #[test]
    fn poly_ops() {
        let a = IntPolynomial::new(vec![1, 1]);
        let b = IntPolynomial::new(vec![-1, 0, 1]);
        assert_eq!(b.div_exact(&a), Some(IntPolynomial::new(vec![-1, 1])));
        assert_eq!(a.div_exact(&IntPolynomial::new(vec![0, 2])), None);
        assert_eq!(alloc::format!("{}", b), "x^2 - 1");
        assert_eq!(b.eval(3), 8);
    }
}
