//! Finite-dimensional modules given as representations, bounded complexes of
//! them, and their projective resolutions.
//!
//! A module `M` is a contravariant functor on the vertex category: a space
//! `M(w)` per vertex and, for every basis element `b: a -> c`, a linear map
//! `M(b): M(c) -> M(a)`. So `P(v)(w) = Hom(w, v)` and, by Yoneda,
//! `Hom(P(v), M) = M(v)`.

use alloc::vec;
use alloc::vec::Vec;

use super::complex::{Mat, ProjComplex};
use crate::algebra::{elem_add, Algebra, Elem};
use crate::field::Field;
use crate::linalg::{Echelon, Matrix};

#[derive(Clone, Debug)]
pub(crate) struct Module<F> {
    pub dims: Vec<usize>,
    /// `act[b]`: `dims[src b] x dims[tgt b]` matrix of `M(b)`.
    pub act: Vec<Matrix<F>>,
}

impl<F: Field> Module<F> {
    pub fn zero(alg: &Algebra<F>) -> Self {
        let n = alg.num_vertices();
        Module { dims: vec![0; n], act: alg.basis().iter().map(|_| Matrix::zeros(0, 0)).collect() }
    }

    pub fn simple(alg: &Algebra<F>, v: usize) -> Self {
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        let act = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(b, be)| if b == alg.idempotent(v) { Matrix::identity(1) } else { Matrix::zeros(dims[be.src], dims[be.tgt]) })
            .collect();
        Module { dims, act }
    }

    /// `⊕_m I(v_m)` with `I(v)(w) = D Hom(v, w)` in the dual path basis.
    pub fn injectives(alg: &Algebra<F>, verts: &[usize]) -> Self {
        let n = alg.num_vertices();
        let dims: Vec<usize> = (0..n).map(|w| verts.iter().map(|&v| alg.hom(v, w).len()).sum()).collect();
        let mut act = Vec::with_capacity(alg.dim());
        for (x, be) in alg.basis().iter().enumerate() {
            let (a, c) = (be.src, be.tgt);
            let mut m = Matrix::zeros(dims[a], dims[c]);
            let xe = vec![(x, F::one())];
            let (mut r0, mut c0) = (0, 0);
            for &v in verts {
                // dual of Hom(v, a) -> Hom(v, c), y -> x ∘ y
                for (jr, &y) in alg.hom(v, a).iter().enumerate() {
                    let prod = alg.compose(&xe, &vec![(y, F::one())]);
                    for (k, coef) in prod {
                        m.set(r0 + jr, c0 + alg.slot(k), coef);
                    }
                }
                r0 += alg.hom(v, a).len();
                c0 += alg.hom(v, c).len();
            }
            act.push(m);
        }
        Module { dims, act }
    }
}

/// Bounded complex of modules; `maps[k][w]: terms[k](w) -> terms[k+1](w)`.
#[derive(Clone, Debug)]
pub(crate) struct ModComplex<F> {
    pub lo: i32,
    pub terms: Vec<Module<F>>,
    pub maps: Vec<Vec<Matrix<F>>>,
}

impl<F: Field> ModComplex<F> {
    pub fn stalk(m: Module<F>, deg: i32) -> Self {
        ModComplex { lo: deg, terms: vec![m], maps: Vec::new() }
    }

    fn term(&self, deg: i32) -> Option<&Module<F>> {
        let k = deg - self.lo;
        if k < 0 {
            return None;
        }
        self.terms.get(k as usize)
    }

    fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    fn dim_at(&self, deg: i32, w: usize) -> usize {
        self.term(deg).map_or(0, |m| m.dims[w])
    }

    fn map(&self, deg: i32, w: usize) -> Option<&Matrix<F>> {
        let k = deg - self.lo;
        if k < 0 {
            return None;
        }
        self.maps.get(k as usize).map(|v| &v[w])
    }
}

/// Termwise Nakayama functor: `P(v) -> I(v)`, and a differential entry
/// `α: v -> v'` goes to the dual of `Hom(v', w) -> Hom(v, w)`, `y -> y ∘ α`.
pub(crate) fn nakayama_termwise<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>) -> ModComplex<F> {
    let n = alg.num_vertices();
    if x.is_zero() {
        return ModComplex::stalk(Module::zero(alg), 0);
    }
    let terms: Vec<Module<F>> = (x.lo()..=x.hi()).map(|d| Module::injectives(alg, x.term(d))).collect();
    let mut maps = Vec::new();
    for deg in x.lo()..x.hi() {
        let (src, tgt) = (x.term(deg), x.term(deg + 1));
        let d = x.diff(deg).unwrap();
        let mut per_w = Vec::with_capacity(n);
        for w in 0..n {
            let (ms, mt) = (&terms[(deg - x.lo()) as usize], &terms[(deg + 1 - x.lo()) as usize]);
            let mut m = Matrix::zeros(mt.dims[w], ms.dims[w]);
            let mut r0 = 0;
            for (r, &vr) in tgt.iter().enumerate() {
                let mut c0 = 0;
                for (c, &vc) in src.iter().enumerate() {
                    let alpha = &d[r][c];
                    if !alpha.is_empty() {
                        for (i, &y) in alg.hom(vr, w).iter().enumerate() {
                            let prod = alg.compose(&vec![(y, F::one())], alpha);
                            for (k, coef) in prod {
                                m.add_at(r0 + i, c0 + alg.slot(k), coef);
                            }
                        }
                    }
                    c0 += alg.hom(vc, w).len();
                }
                r0 += alg.hom(vr, w).len();
            }
            per_w.push(m);
        }
        maps.push(per_w);
    }
    ModComplex { lo: x.lo(), terms, maps }
}

/// One degree of the resolution under construction.
struct Stage<F> {
    verts: Vec<usize>,
    /// Yoneda element in `Z^k(v)` for each summand.
    eps: Vec<Vec<F>>,
    /// Differential to the next stage, `[row in next][col here]`.
    d: Mat<F>,
}

/// Bounded complex of projectives quasi-isomorphic to `z`, built degree by
/// degree from the top so that the cone of the augmentation stays exact.
pub(crate) fn resolve<F: Field>(alg: &Algebra<F>, z: &ModComplex<F>) -> ProjComplex<F> {
    let n = alg.num_vertices();
    let empty = Stage { verts: Vec::new(), eps: Vec::new(), d: Vec::new() };
    // stages[t] is degree hi - t
    let hi = z.hi();
    let mut stages: Vec<Stage<F>> = Vec::new();
    let mut k = hi;
    let limit = z.lo - (n as i32) - 2;
    loop {
        let (p1, p2) = {
            let t = (hi - k) as usize;
            let p1 = if t >= 1 { &stages[t - 1] } else { &empty };
            let p2 = if t >= 2 { &stages[t - 2] } else { &empty };
            (p1, p2)
        };
        if k < z.lo && p1.verts.is_empty() {
            break;
        }
        assert!(k >= limit, "resolution did not terminate; algebra of infinite global dimension?");
        let mut kernels: Vec<Vec<Vec<F>>> = Vec::with_capacity(n);
        let mut cdim = vec![0usize; n];
        let mut zdim = vec![0usize; n];
        for w in 0..n {
            let zk = z.dim_at(k, w);
            let pk1: usize = p1.verts.iter().map(|&v| alg.hom(w, v).len()).sum();
            zdim[w] = zk;
            cdim[w] = zk + pk1;
            let zk1 = z.dim_at(k + 1, w);
            let pk2: usize = p2.verts.iter().map(|&v| alg.hom(w, v).len()).sum();
            let mut dc = Matrix::zeros(zk1 + pk2, cdim[w]);
            if let Some(dz) = z.map(k, w) {
                for r in 0..zk1 {
                    for c in 0..zk {
                        dc.set(r, c, dz.get(r, c).clone());
                    }
                }
            }
            // ε^{k+1} and -d_P on the P^{k+1} block
            let mut c0 = zk;
            for (m, &vm) in p1.verts.iter().enumerate() {
                for (t, &y) in alg.hom(w, vm).iter().enumerate() {
                    if zk1 > 0 {
                        let act = &z.term(k + 1).unwrap().act[y];
                        let img = act.mul_vec(&p1.eps[m]);
                        for (r, val) in img.into_iter().enumerate() {
                            if !val.is_zero() {
                                dc.set(r, c0 + t, val);
                            }
                        }
                    }
                    let mut r0 = zk1;
                    for (rr, &vr) in p2.verts.iter().enumerate() {
                        let e = &p1.d[rr][m];
                        if !e.is_empty() {
                            let prod = alg.compose(e, &vec![(y, F::one())]);
                            for (b, coef) in prod {
                                dc.add_at(r0 + alg.slot(b), c0 + t, -coef);
                            }
                        }
                        r0 += alg.hom(w, vr).len();
                    }
                }
                c0 += alg.hom(w, vm).len();
            }
            kernels.push(if dc.rows() == 0 {
                (0..cdim[w])
                    .map(|t| {
                        let mut v = vec![F::zero(); cdim[w]];
                        v[t] = F::one();
                        v
                    })
                    .collect()
            } else {
                dc.kernel()
            });
        }
        // action of a basis element x: w -> c on C^k, applied to a vector in C^k(c)
        let act_c = |x: usize, v: &[F]| -> Vec<F> {
            let be = &alg.basis()[x];
            let (w, c) = (be.src, be.tgt);
            let mut out = vec![F::zero(); cdim[w]];
            if zdim[c] > 0 && zdim[w] > 0 {
                let a = &z.term(k).unwrap().act[x];
                let img = a.mul_vec(&v[..zdim[c]]);
                out[..zdim[w]].clone_from_slice(&img);
            }
            let (mut src0, mut dst0) = (zdim[c], zdim[w]);
            for &vm in &p1.verts {
                for (t, &yb) in alg.hom(c, vm).iter().enumerate() {
                    let coef = &v[src0 + t];
                    if coef.is_zero() {
                        continue;
                    }
                    for (b, cc) in alg.compose(&vec![(yb, F::one())], &vec![(x, F::one())]) {
                        let s = dst0 + alg.slot(b);
                        out[s] = out[s].clone() + coef.clone() * cc;
                    }
                }
                src0 += alg.hom(c, vm).len();
                dst0 += alg.hom(w, vm).len();
            }
            out
        };
        let mut new = Stage { verts: Vec::new(), eps: Vec::new(), d: (0..p1.verts.len()).map(|_| Vec::new()).collect() };
        for w in 0..n {
            if kernels[w].is_empty() {
                continue;
            }
            let mut ech = Echelon::new(cdim[w]);
            if let (Some(dz), true) = (z.map(k - 1, w), zdim[w] > 0) {
                for c in 0..dz.cols() {
                    let mut v = dz.column(c);
                    v.resize(cdim[w], F::zero());
                    ech.insert(&v);
                }
            }
            for (x, be) in alg.basis().iter().enumerate() {
                if be.src != w || be.tgt == w {
                    continue;
                }
                for kv in &kernels[be.tgt] {
                    ech.insert(&act_c(x, kv));
                }
            }
            for kv in &kernels[w] {
                if ech.insert(kv) {
                    new.verts.push(w);
                    new.eps.push(kv[..zdim[w]].to_vec());
                    let mut off = zdim[w];
                    for (m, &vm) in p1.verts.iter().enumerate() {
                        let basis = alg.hom(w, vm);
                        let mut e: Elem<F> = Vec::new();
                        for (t, &b) in basis.iter().enumerate() {
                            if !kv[off + t].is_zero() {
                                e = elem_add(&e, &vec![(b, -kv[off + t].clone())]);
                            }
                        }
                        new.d[m].push(e);
                        off += basis.len();
                    }
                }
            }
        }
        stages.push(new);
        k -= 1;
    }
    // stages[t] holds degree hi - t; assemble ascending
    let count = stages.len();
    let lo = hi - count as i32 + 1;
    let mut terms = Vec::with_capacity(count);
    let mut diffs = Vec::with_capacity(count.saturating_sub(1));
    for t in (0..count).rev() {
        terms.push(stages[t].verts.clone());
        if t > 0 {
            diffs.push(stages[t].d.clone());
        }
    }
    if terms.is_empty() {
        return ProjComplex::zero();
    }
    ProjComplex::from_parts(lo, terms, diffs)
}
