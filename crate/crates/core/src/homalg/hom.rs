//! The Hom complex `Hom•(X, Y)` between complexes of projectives.
//!
//! `Hom^n = ⊕_k Hom(X^k, Y^{k+n})` with `D f = d_Y f - (-1)^n f d_X`; its
//! degree `n` cohomology is `Hom(X, Y[n])` in the homotopy category.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::complex::{zero_mat, ChainMap, Mat, ProjComplex};
use crate::algebra::Algebra;
use crate::field::Field;
use crate::linalg::{Echelon, Matrix};

/// Coordinates of `Hom^n(X, Y)`.
pub(crate) struct HomSpace {
    pub n: i32,
    /// `(k, i, j) -> (offset, len)` for the block `Hom(X^k_i, Y^{k+n}_j)`.
    blocks: BTreeMap<(i32, usize, usize), (usize, usize)>,
    pub dim: usize,
}

impl HomSpace {
    pub fn new<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>, y: &ProjComplex<F>, n: i32) -> Self {
        let mut blocks = BTreeMap::new();
        let mut dim = 0;
        if !x.is_zero() {
            for k in x.lo()..=x.hi() {
                for (i, &a) in x.term(k).iter().enumerate() {
                    for (j, &b) in y.term(k + n).iter().enumerate() {
                        let len = alg.hom(a, b).len();
                        if len > 0 {
                            blocks.insert((k, i, j), (dim, len));
                            dim += len;
                        }
                    }
                }
            }
        }
        HomSpace { n, blocks, dim }
    }

    fn add_elem<F: Field>(&self, alg: &Algebra<F>, v: &mut [F], key: (i32, usize, usize), e: &[(usize, F)]) {
        if e.is_empty() {
            return;
        }
        let (off, _) = self.blocks[&key];
        for (b, c) in e {
            let s = off + alg.slot(*b);
            v[s] = v[s].clone() + c.clone();
        }
    }

    /// Coordinates of a family of matrices `X^k -> Y^{k+n}`.
    pub fn from_map<F: Field>(&self, alg: &Algebra<F>, f: &ChainMap<F>) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        for &(k, i, j) in self.blocks.keys() {
            let Some(m) = f.get(k) else { continue };
            if let Some(e) = m.get(j).and_then(|row| row.get(i)) {
                self.add_elem(alg, &mut v, (k, i, j), e);
            }
        }
        v
    }

    /// Reads a coordinate vector back as a family of matrices `X^k -> Y^{k+n}`.
    pub fn to_map<F: Field>(&self, alg: &Algebra<F>, x: &ProjComplex<F>, y: &ProjComplex<F>, v: &[F]) -> ChainMap<F> {
        if x.is_zero() {
            return ChainMap::zero();
        }
        let mut mats: Vec<Mat<F>> = (x.lo()..=x.hi()).map(|k| zero_mat(y.term(k + self.n).len(), x.term(k).len())).collect();
        for (&(k, i, j), &(off, len)) in &self.blocks {
            let (a, b) = (x.term(k)[i], y.term(k + self.n)[j]);
            let basis = alg.hom(a, b);
            let e: Vec<(usize, F)> = (0..len).filter(|&t| !v[off + t].is_zero()).map(|t| (basis[t], v[off + t].clone())).collect();
            mats[(k - x.lo()) as usize][j][i] = e;
        }
        ChainMap { lo: x.lo(), mats }
    }
}

/// Matrix of `D: Hom^n -> Hom^{n+1}`.
pub(crate) fn differential<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>, y: &ProjComplex<F>, src: &HomSpace, tgt: &HomSpace) -> Matrix<F> {
    let n = src.n;
    let sign_fd = if n.rem_euclid(2) == 0 { -F::one() } else { F::one() };
    let mut m = Matrix::zeros(tgt.dim, src.dim);
    let mut col = vec![F::zero(); tgt.dim];
    for (&(k, i, j), &(off, len)) in &src.blocks {
        let (a, b) = (x.term(k)[i], y.term(k + n)[j]);
        for t in 0..len {
            let beta = vec![(alg.hom(a, b)[t], F::one())];
            for c in col.iter_mut() {
                *c = F::zero();
            }
            // d_Y ∘ β lands in block (k, i, j')
            if let Some(dy) = y.diff(k + n) {
                for (j2, row) in dy.iter().enumerate() {
                    if !row[j].is_empty() {
                        let e = alg.compose(&row[j], &beta);
                        tgt.add_elem(alg, &mut col, (k, i, j2), &e);
                    }
                }
            }
            // β ∘ d_X lands in block (k-1, i', j)
            if let Some(dx) = x.diff(k - 1) {
                for (i2, entry) in dx[i].iter().enumerate() {
                    if !entry.is_empty() {
                        let e = alg.compose(&beta, entry);
                        let e: Vec<(usize, F)> = e.into_iter().map(|(b, c)| (b, c * sign_fd.clone())).collect();
                        tgt.add_elem(alg, &mut col, (k - 1, i2, j), &e);
                    }
                }
            }
            for (r, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.set(r, off + t, v.clone());
                }
            }
        }
    }
    m
}

/// Range of `n` where `Hom^n(X, Y)` can be nonzero.
pub(crate) fn degree_range<F: Field>(x: &ProjComplex<F>, y: &ProjComplex<F>) -> Option<(i32, i32)> {
    if x.is_zero() || y.is_zero() {
        return None;
    }
    Some((y.lo() - x.hi(), y.hi() - x.lo()))
}

/// `n -> dim Hom(X, Y[n])`, nonzero entries only.
pub fn hom_dims<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>, y: &ProjComplex<F>) -> BTreeMap<i32, usize> {
    let mut out = BTreeMap::new();
    let Some((lo, hi)) = degree_range(x, y) else { return out };
    let spaces: Vec<HomSpace> = (lo - 1..=hi + 1).map(|n| HomSpace::new(alg, x, y, n)).collect();
    // ranks[t] = rank of D from spaces[t] to spaces[t+1]
    let ranks: Vec<usize> = (0..spaces.len() - 1)
        .map(|t| if spaces[t].dim == 0 || spaces[t + 1].dim == 0 { 0 } else { differential(alg, x, y, &spaces[t], &spaces[t + 1]).rank() })
        .collect();
    for t in 1..spaces.len() - 1 {
        let h = spaces[t].dim - ranks[t] - ranks[t - 1];
        if h > 0 {
            out.insert(spaces[t].n, h);
        }
    }
    out
}

/// Cocycles representing a basis of `Hom(X, Y[n])`, as maps `X^k -> Y^{k+n}`.
pub fn cohomology_basis<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>, y: &ProjComplex<F>, n: i32) -> Vec<ChainMap<F>> {
    let here = HomSpace::new(alg, x, y, n);
    if here.dim == 0 {
        return Vec::new();
    }
    let prev = HomSpace::new(alg, x, y, n - 1);
    let next = HomSpace::new(alg, x, y, n + 1);
    let cocycles = if next.dim == 0 {
        (0..here.dim)
            .map(|t| {
                let mut v = vec![F::zero(); here.dim];
                v[t] = F::one();
                v
            })
            .collect()
    } else {
        differential(alg, x, y, &here, &next).kernel()
    };
    let mut ech = Echelon::new(here.dim);
    if prev.dim > 0 {
        let d = differential(alg, x, y, &prev, &here);
        for c in 0..d.cols() {
            ech.insert(&d.column(c));
        }
    }
    let mut reps = Vec::new();
    for z in cocycles {
        if ech.insert(&z) {
            reps.push(here.to_map(alg, x, y, &z));
        }
    }
    reps
}

/// True iff the degree-`n` cocycle `f: X -> Y[n]` is a coboundary.
pub fn is_null_homotopic<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>, y: &ProjComplex<F>, f: &ChainMap<F>, n: i32) -> bool {
    let here = HomSpace::new(alg, x, y, n);
    let v = here.from_map(alg, f);
    if v.iter().all(|c| c.is_zero()) {
        return true;
    }
    let prev = HomSpace::new(alg, x, y, n - 1);
    if prev.dim == 0 {
        return false;
    }
    let d = differential(alg, x, y, &prev, &here);
    let mut ech = Echelon::new(here.dim);
    for c in 0..d.cols() {
        ech.insert(&d.column(c));
    }
    ech.contains(&v)
}
