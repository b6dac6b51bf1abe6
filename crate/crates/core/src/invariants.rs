//! Derived invariants of algebras of finite global dimension: the Coxeter
//! matrix and polynomial, the Euler form, and certificates comparing two
//! algebras.
//!
//! Cartan matrices follow [`Algebra::cartan`]: `C[a][b]` counts paths
//! `b -> a`, so row `a` is the dimension vector of `P(a)`. The Coxeter
//! matrix is `-C^{-T} C` computed literally on that matrix. Its
//! characteristic polynomial does not depend on the choice between `C` and
//! `C^T`, and neither on the vertex order.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::field::Field;
use crate::intmat::{IntMatrix, IntPolynomial};

fn unimodular_inverse(c: &IntMatrix) -> Result<IntMatrix, Error> {
    if c.rows() != c.cols() {
        return Err(Error::Precondition("Cartan matrix must be square".into()));
    }
    c.inverse_unimodular()
}

/// `Φ = -C^{-T} C`.
pub fn coxeter_matrix(c: &IntMatrix) -> Result<IntMatrix, Error> {
    let inv = unimodular_inverse(c)?;
    Ok(inv.transpose().mul(c).neg())
}

/// Characteristic polynomial `det(x I - Φ)`.
pub fn coxeter_polynomial(c: &IntMatrix) -> Result<IntPolynomial, Error> {
    Ok(coxeter_matrix(c)?.charpoly())
}

/// Euler form on dimension vectors: `<x, y> = x^T C^{-1} y`.
///
/// With this Cartan convention that is the usual `x^T C^{-T} y` written for
/// the transposed matrix; `<dim P(a), dim P(b)> = dim Hom(P(a), P(b))`.
pub fn euler_form(c: &IntMatrix, x: &[i128], y: &[i128]) -> Result<i128, Error> {
    let inv = unimodular_inverse(c)?;
    Ok(bilinear(&inv, x, y))
}

/// Euler form on classes written in the basis of indecomposable
/// projectives: `<[P(a)], [P(b)]> = C[b][a]`.
pub fn euler_form_projective(c: &IntMatrix, x: &[i128], y: &[i128]) -> i128 {
    bilinear(&c.transpose(), x, y)
}

fn bilinear(m: &IntMatrix, x: &[i128], y: &[i128]) -> i128 {
    assert_eq!(x.len(), m.rows());
    assert_eq!(y.len(), m.cols());
    let mut acc = 0i128;
    for (a, &xa) in x.iter().enumerate() {
        if xa == 0 {
            continue;
        }
        for (b, &yb) in y.iter().enumerate() {
            acc += xa * m.get(a, b) * yb;
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Refuted,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::Refuted => "refuted",
        }
    }
}

/// Comparison of two algebras by derived invariants.
///
/// A consistent verdict is necessary but not sufficient for a derived
/// equivalence; a refuted one rules it out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub left: String,
    pub right: String,
    pub dim_left: usize,
    pub dim_right: usize,
    pub det_left: i128,
    pub det_right: i128,
    pub coxeter_left: Option<IntPolynomial>,
    pub coxeter_right: Option<IntPolynomial>,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn is_consistent(&self) -> bool {
        self.verdict == Verdict::Consistent
    }
}

/// Certificate from two named Cartan matrices (`dim` is the algebra dimension).
pub fn certify_cartans(left: (&str, usize, &IntMatrix), right: (&str, usize, &IntMatrix)) -> Certificate {
    let det_left = left.2.det();
    let det_right = right.2.det();
    let coxeter_left = coxeter_polynomial(left.2).ok();
    let coxeter_right = coxeter_polynomial(right.2).ok();
    let ok = det_left.abs() == 1 && det_right.abs() == 1 && coxeter_left.is_some() && coxeter_left == coxeter_right;
    Certificate {
        left: left.0.into(),
        right: right.0.into(),
        dim_left: left.1,
        dim_right: right.1,
        det_left,
        det_right,
        coxeter_left,
        coxeter_right,
        verdict: if ok { Verdict::Consistent } else { Verdict::Refuted },
    }
}

pub fn certify_pair<F: Field>(a: &Algebra<F>, b: &Algebra<F>) -> Result<Certificate, Error> {
    if !a.is_directed() || !b.is_directed() {
        return Err(Error::Precondition("certificates need acyclic quivers".into()));
    }
    Ok(certify_cartans((a.name(), a.dim(), &a.cartan()), (b.name(), b.dim(), &b.cartan())))
}

/// All pairwise certificates along a chain of Cartan matrices are consistent
/// iff the first is consistent with every other one.
pub fn chain_consistent(cartans: &[IntMatrix]) -> bool {
    let Some(first) = cartans.first() else { return true };
    let Ok(p0) = coxeter_polynomial(first) else { return false };
    cartans[1..].iter().all(|c| coxeter_polynomial(c).ok().as_ref() == Some(&p0))
}

/// Class in `K_0` (projective basis) of a list of signed projective summands.
pub fn class_of(n: usize, summands: impl IntoIterator<Item = (usize, i128)>) -> Vec<i128> {
    let mut v = alloc::vec![0i128; n];
    for (a, s) in summands {
        v[a] += s;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::nakayama;
    use crate::field::Rational;

    #[test]
    fn ka2() {
        let c = IntMatrix::from_rows(&[alloc::vec![1, 0], alloc::vec![1, 1]]);
        assert_eq!(coxeter_matrix(&c).unwrap().entries(), alloc::vec![alloc::vec![0, 1], alloc::vec![-1, -1]]);
        assert_eq!(coxeter_polynomial(&c).unwrap().coeffs(), &[1, 1, 1]);
        assert_eq!(coxeter_matrix(&IntMatrix::identity(3)).unwrap(), IntMatrix::identity(3).neg());
    }

    #[test]
    fn euler_on_projectives() {
        let a = nakayama::<Rational>(4, 2).unwrap();
        let c = a.cartan();
        for x in 0..4 {
            for y in 0..4 {
                let ex = class_of(4, [(x, 1)]);
                let ey = class_of(4, [(y, 1)]);
                let hom = a.hom(x, y).len() as i128;
                assert_eq!(euler_form_projective(&c, &ex, &ey), hom);
                let dx: Vec<i128> = c.entries()[x].clone();
                let dy: Vec<i128> = c.entries()[y].clone();
                assert_eq!(euler_form(&c, &dx, &dy).unwrap(), hom);
            }
        }
    }

    #[test]
    fn singular_cartan() {
        let c = IntMatrix::from_rows(&[alloc::vec![2, 0], alloc::vec![0, 1]]);
        assert_eq!(coxeter_matrix(&c), Err(Error::NonUnimodularCartan(2)));
    }
}
