//! The perfect derived category of a directed algebra, modelled by bounded
//! complexes of projectives up to homotopy.

mod complex;
mod hom;
mod module;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

pub use complex::{cone, direct_sum, minimize, minimize_with_maps, ChainMap, Mat, ProjComplex};
pub use hom::{cohomology_basis, hom_dims};

use crate::algebra::Algebra;
use crate::error::Error;
use crate::field::Field;
use module::{nakayama_termwise, resolve, ModComplex, Module};

/// `n -> dim Hom(X, Y[n])`, only nonzero entries stored.
pub type HomDims = BTreeMap<i32, usize>;

/// Largest `dim Hom(X, Y)` that [`Derived::is_iso`] will search.
pub const ISO_SEARCH_CAP: usize = 8;

/// A directed algebra together with its opposite, the latter used for the
/// inverse Serre functor.
#[derive(Clone, Debug)]
pub struct Derived<F> {
    alg: Algebra<F>,
    op: Algebra<F>,
}

/// An exceptional sequence `(E_1, .., E_m)` with `Hom(E_a, E_b[n]) = 0` for
/// `a < b`, validated on construction.
#[derive(Clone, Debug)]
pub struct ExcSeq<F> {
    objs: Vec<ProjComplex<F>>,
}

impl<F: Field> ExcSeq<F> {
    pub fn objects(&self) -> &[ProjComplex<F>] {
        &self.objs
    }

    pub fn len(&self) -> usize {
        self.objs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objs.is_empty()
    }
}

impl<F: Field> Derived<F> {
    pub fn new(alg: Algebra<F>) -> Result<Self, Error> {
        if !alg.is_directed() {
            return Err(Error::Precondition(format!("{} has oriented cycles", alg.name())));
        }
        let op = alg.opposite();
        Ok(Derived { alg, op })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    pub fn num_vertices(&self) -> usize {
        self.alg.num_vertices()
    }

    pub fn complex(&self, lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<Mat<F>>) -> Result<ProjComplex<F>, Error> {
        ProjComplex::new(&self.alg, lo, terms, diffs)
    }

    fn check(&self, x: &ProjComplex<F>) -> Result<(), Error> {
        let n = self.num_vertices();
        if (x.lo()..=x.hi()).any(|d| x.term(d).iter().any(|&v| v >= n)) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn stalk_projective(&self, v: usize) -> ProjComplex<F> {
        ProjComplex::stalk(v, 0)
    }

    /// Minimal projective resolution of the simple `S(v)`, concentrated in
    /// degrees `<= 0`.
    pub fn simple_resolution(&self, v: usize) -> ProjComplex<F> {
        let z = ModComplex::stalk(Module::simple(&self.alg, v), 0);
        minimize(&self.alg, &resolve(&self.alg, &z))
    }

    /// Complex of projectives quasi-isomorphic to the injective `I(v)`.
    pub fn injective_resolution_as_proj(&self, v: usize) -> ProjComplex<F> {
        let z = ModComplex::stalk(Module::injectives(&self.alg, &[v]), 0);
        minimize(&self.alg, &resolve(&self.alg, &z))
    }

    pub fn minimize(&self, x: &ProjComplex<F>) -> ProjComplex<F> {
        minimize(&self.alg, x)
    }

    pub fn hom_dims(&self, x: &ProjComplex<F>, y: &ProjComplex<F>) -> HomDims {
        hom_dims(&self.alg, x, y)
    }

    /// Cocycles representing a basis of `Hom(X, Y[n])`.
    pub fn hom_basis(&self, x: &ProjComplex<F>, y: &ProjComplex<F>, n: i32) -> Vec<ChainMap<F>> {
        cohomology_basis(&self.alg, x, y, n)
    }

    /// True iff the degree-`n` map `f: X -> Y[n]` vanishes up to homotopy.
    pub fn is_null_homotopic(&self, x: &ProjComplex<F>, y: &ProjComplex<F>, f: &ChainMap<F>, n: i32) -> bool {
        hom::is_null_homotopic(&self.alg, x, y, f, n)
    }

    /// `g ∘ f` for degree-0 maps `f: X -> Y`, `g: Y -> Z`.
    pub fn compose(&self, f: &ChainMap<F>, g: &ChainMap<F>, x: &ProjComplex<F>, y: &ProjComplex<F>, z: &ProjComplex<F>) -> ChainMap<F> {
        f.then(g, &self.alg, x, y, z)
    }

    /// `Σ (-1)^n dim Hom(X, Y[n])`.
    pub fn euler_char(&self, x: &ProjComplex<F>, y: &ProjComplex<F>) -> i128 {
        self.hom_dims(x, y).iter().map(|(n, d)| if n.rem_euclid(2) == 0 { *d as i128 } else { -(*d as i128) }).sum()
    }

    /// Cone of a chain map `f: X -> Y`, sign convention `[[d_Y, f], [0, -d_X]]`.
    pub fn cone(&self, f: &ChainMap<F>, x: &ProjComplex<F>, y: &ProjComplex<F>) -> Result<ProjComplex<F>, Error> {
        if !f.is_chain_map(&self.alg, x, y) {
            return Err(Error::Precondition("cone of a map that is not a chain map".into()));
        }
        Ok(cone(&self.alg, f, x, y).0)
    }

    /// Acyclic iff the underlying complex of vector spaces `X(w)` is exact
    /// at every vertex `w`.
    pub fn is_acyclic(&self, x: &ProjComplex<F>) -> bool {
        (0..self.num_vertices()).all(|w| self.hom_dims(&ProjComplex::stalk(w, 0), x).is_empty())
    }

    /// Isomorphism in the homotopy category.
    ///
    /// Both sides are minimized first. Minimal complexes are homotopy
    /// equivalent iff they are isomorphic, and a chain map between them is an
    /// isomorphism iff its components modulo the radical are invertible.
    /// Candidate maps are the basis of `Hom(X, Y)` and pseudo-random
    /// combinations of it.
    pub fn is_iso(&self, x: &ProjComplex<F>, y: &ProjComplex<F>) -> Result<bool, Error> {
        self.check(x)?;
        self.check(y)?;
        let (x, y) = (self.minimize(x), self.minimize(y));
        if x.shape() != y.shape() {
            return Ok(false);
        }
        if x.is_zero() {
            return Ok(true);
        }
        let basis = cohomology_basis(&self.alg, &x, &y, 0);
        if basis.len() > ISO_SEARCH_CAP {
            return Err(Error::SearchTooLarge(basis.len()));
        }
        for f in &basis {
            if self.is_unit_map(f, &x, &y) {
                return Ok(true);
            }
        }
        if basis.len() > 1 {
            let mut seed: u64 = 0x9e37_79b9_7f4a_7c15;
            for _ in 0..40 {
                let mut acc: Option<ChainMap<F>> = None;
                for f in &basis {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let c = F::from_i64(((seed >> 33) % 19) as i64 - 9);
                    let g = f.scaled(&c);
                    acc = Some(match acc {
                        None => g,
                        Some(a) => add_maps(&a, &g),
                    });
                }
                if self.is_unit_map(acc.as_ref().unwrap(), &x, &y) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Components modulo the radical are invertible in every degree.
    fn is_unit_map(&self, f: &ChainMap<F>, x: &ProjComplex<F>, y: &ProjComplex<F>) -> bool {
        use crate::linalg::Matrix;
        for deg in x.lo()..=x.hi() {
            let (tx, ty) = (x.term(deg), y.term(deg));
            let m = f.component(deg, ty.len(), tx.len());
            let mut verts: Vec<usize> = tx.to_vec();
            verts.sort_unstable();
            verts.dedup();
            for v in verts {
                let rows: Vec<usize> = (0..ty.len()).filter(|&r| ty[r] == v).collect();
                let cols: Vec<usize> = (0..tx.len()).filter(|&c| tx[c] == v).collect();
                let mut s = Matrix::zeros(rows.len(), cols.len());
                for (a, &r) in rows.iter().enumerate() {
                    for (b, &c) in cols.iter().enumerate() {
                        s.set(a, b, self.alg.scalar_part(&m[r][c], v));
                    }
                }
                if s.rank() < rows.len() {
                    return false;
                }
            }
        }
        true
    }

    /// Serre functor `ν = - ⊗^L DA`: applied termwise to get a complex of
    /// injectives, then resolved by projectives.
    pub fn serre(&self, x: &ProjComplex<F>) -> ProjComplex<F> {
        serre_over(&self.alg, x)
    }

    /// `ν^{-1} = RHom(DA, -)`, computed as `(ν_{A^op}(X^*))^*` where `(-)^*`
    /// is `Hom(-, A)`.
    pub fn serre_inverse(&self, x: &ProjComplex<F>) -> ProjComplex<F> {
        serre_over(&self.op, &x.dual()).dual()
    }

    /// `ν^k` for any integer `k`.
    pub fn serre_pow(&self, x: &ProjComplex<F>, k: i32) -> ProjComplex<F> {
        let mut cur = x.clone();
        for _ in 0..k.unsigned_abs() {
            cur = if k > 0 { self.serre(&cur) } else { self.serre_inverse(&cur) };
        }
        cur
    }

    /// Validates `(E_1, .., E_m)`: each `E_a` exceptional and
    /// `Hom(E_a, E_b[n]) = 0` for `a < b`.
    pub fn exceptional_sequence(&self, objs: Vec<ProjComplex<F>>) -> Result<ExcSeq<F>, Error> {
        let objs: Vec<ProjComplex<F>> = objs.iter().map(|e| self.minimize(e)).collect();
        for (a, e) in objs.iter().enumerate() {
            self.check(e)?;
            let d = self.hom_dims(e, e);
            if d.len() != 1 || d.get(&0) != Some(&1) {
                return Err(Error::Precondition(format!("object {a} of the sequence is not exceptional: {d:?}")));
            }
            for (b, f) in objs.iter().enumerate().skip(a + 1) {
                let d = self.hom_dims(e, f);
                if !d.is_empty() {
                    return Err(Error::Precondition(format!("Hom(E_{a}, E_{b}[*]) = {d:?} should vanish")));
                }
            }
        }
        Ok(ExcSeq { objs })
    }

    /// Repeatedly cones off evaluation maps `⊕ E_a[-n] -> X` for
    /// `a = 1..m`; returns the result (in `⟨E⟩^⊥`) and the map from `X`.
    fn reduce_right(&self, e: &ExcSeq<F>, x: &ProjComplex<F>) -> (ProjComplex<F>, ChainMap<F>) {
        let alg = &self.alg;
        let mut cur = self.minimize(x);
        let x0 = cur.clone();
        let mut map = ChainMap::identity(&cur, alg);
        for ea in &e.objs {
            let mut reps: Vec<(i32, ChainMap<F>)> = Vec::new();
            if let Some((lo, hi)) = hom::degree_range(ea, &cur) {
                for n in lo..=hi {
                    for f in cohomology_basis(alg, ea, &cur, n) {
                        reps.push((n, f));
                    }
                }
            }
            if reps.is_empty() {
                continue;
            }
            let parts: Vec<ProjComplex<F>> = reps.iter().map(|(n, _)| ea.shift(-n)).collect();
            let src = direct_sum(&parts);
            let lo = src.lo().min(cur.lo());
            let hi = src.hi().max(cur.hi());
            let mut mats = Vec::new();
            for deg in lo..=hi {
                let ty = cur.term(deg);
                let mut m: Mat<F> = (0..ty.len()).map(|_| Vec::new()).collect();
                for (n, f) in &reps {
                    let w = ea.term(deg - n).len();
                    let comp = f.component(deg - n, ty.len(), w);
                    for r in 0..ty.len() {
                        m[r].extend(comp[r].iter().cloned());
                    }
                }
                mats.push(m);
            }
            let ev = ChainMap { lo, mats };
            debug_assert!(ev.is_chain_map(alg, &src, &cur));
            let (c, incl, _) = cone(alg, &ev, &src, &cur);
            let (cm, p, _) = minimize_with_maps(alg, &c);
            let step = incl.then(&p, alg, &cur, &c, &cm);
            map = map.then(&step, alg, &x0, &cur, &cm);
            cur = cm;
        }
        (cur, map)
    }

    /// Repeatedly takes cocones of coevaluations `X -> ⊕ E_a[n]` for
    /// `a = m..1`; returns the result (in `^⊥⟨E⟩`) and its map to `X`.
    fn reduce_left(&self, e: &ExcSeq<F>, x: &ProjComplex<F>) -> (ProjComplex<F>, ChainMap<F>) {
        let alg = &self.alg;
        let x0 = self.minimize(x);
        let mut cur = x0.clone();
        let mut map = ChainMap::identity(&cur, alg);
        for ea in e.objs.iter().rev() {
            let mut reps: Vec<(i32, ChainMap<F>)> = Vec::new();
            if let Some((lo, hi)) = hom::degree_range(&cur, ea) {
                for n in lo..=hi {
                    for g in cohomology_basis(alg, &cur, ea, n) {
                        reps.push((n, g));
                    }
                }
            }
            if reps.is_empty() {
                continue;
            }
            let parts: Vec<ProjComplex<F>> = reps.iter().map(|(n, _)| ea.shift(*n)).collect();
            let tgt = direct_sum(&parts);
            let lo = tgt.lo().min(cur.lo());
            let hi = tgt.hi().max(cur.hi());
            let mut mats = Vec::new();
            for deg in lo..=hi {
                let tx = cur.term(deg);
                let mut m: Mat<F> = Vec::new();
                for (n, g) in &reps {
                    let h = ea.term(deg + n).len();
                    m.extend(g.component(deg, h, tx.len()));
                }
                mats.push(m);
            }
            let coev = ChainMap { lo, mats };
            debug_assert!(coev.is_chain_map(alg, &cur, &tgt));
            let (c, _, proj) = cone(alg, &coev, &cur, &tgt);
            let cc = c.shift(-1);
            let proj = ChainMap { lo: proj.lo + 1, mats: proj.mats };
            let (cm, _, i) = minimize_with_maps(alg, &cc);
            let step = i.then(&proj, alg, &cm, &cc, &cur);
            map = step.then(&map, alg, &cm, &cur, &x0);
            cur = cm;
        }
        (cur, map)
    }

    /// `T_⟨E⟩(X)`, the right adjoint of the inclusion of `⟨E⟩`, with runtime
    /// checks that the cone lies in `⟨E⟩^⊥` and the result lies in `⟨E⟩`.
    pub fn project_right(&self, e: &ExcSeq<F>, x: &ProjComplex<F>) -> Result<ProjComplex<F>, Error> {
        self.check(x)?;
        let (xm, g) = self.reduce_right(e, x);
        let x0 = self.minimize(x);
        let (c, _, _) = cone(&self.alg, &g, &x0, &xm);
        let t = self.minimize(&c.shift(-1));
        for (a, ea) in e.objs.iter().enumerate() {
            if !self.hom_dims(ea, &xm).is_empty() {
                return Err(Error::Verification(format!("right projection: cone not orthogonal to E_{a}")));
            }
        }
        if !self.reduce_right(e, &t).0.is_zero() {
            return Err(Error::Verification("right projection: result not in ⟨E⟩".into()));
        }
        Ok(t)
    }

    /// `F_⟨E⟩(X)`, the left adjoint of the inclusion of `⟨E⟩`, with runtime
    /// checks as for [`Self::project_right`].
    pub fn project_left(&self, e: &ExcSeq<F>, x: &ProjComplex<F>) -> Result<ProjComplex<F>, Error> {
        self.check(x)?;
        let (x0, g) = self.reduce_left(e, x);
        let xm = self.minimize(x);
        let (c, _, _) = cone(&self.alg, &g, &x0, &xm);
        let f = self.minimize(&c);
        for (a, ea) in e.objs.iter().enumerate() {
            if !self.hom_dims(&x0, ea).is_empty() {
                return Err(Error::Verification(format!("left projection: cocone not orthogonal to E_{a}")));
            }
        }
        if !self.reduce_left(e, &f).0.is_zero() {
            return Err(Error::Verification("left projection: result not in ⟨E⟩".into()));
        }
        Ok(f)
    }

    /// True iff `X ∈ ⟨E⟩`.
    pub fn in_subcategory(&self, e: &ExcSeq<F>, x: &ProjComplex<F>) -> bool {
        self.reduce_right(e, x).0.is_zero()
    }

    /// Serre functor of `⟨E⟩`: `T_E ∘ ν`.
    pub fn sub_serre(&self, e: &ExcSeq<F>, x: &ProjComplex<F>) -> Result<ProjComplex<F>, Error> {
        if !self.in_subcategory(e, x) {
            return Err(Error::Precondition("object is not in the subcategory".into()));
        }
        self.project_right(e, &self.serre(x))
    }

    /// Inverse Serre functor of `⟨E⟩`: `F_E ∘ ν^{-1}`.
    pub fn sub_serre_inverse(&self, e: &ExcSeq<F>, x: &ProjComplex<F>) -> Result<ProjComplex<F>, Error> {
        if !self.in_subcategory(e, x) {
            return Err(Error::Precondition("object is not in the subcategory".into()));
        }
        self.project_left(e, &self.serre_inverse(x))
    }

    /// For `X ∈ ⟨E⟩` with `E` exceptional, `X ≅ ⊕ E^{d_n}[n]` where
    /// `d_n = dim Hom(E, X[-n])`. Returns the pairs `(n, d_n)`, verified.
    pub fn exceptional_decompose(&self, e: &ProjComplex<F>, x: &ProjComplex<F>) -> Result<Vec<(i32, usize)>, Error> {
        let seq = self.exceptional_sequence(vec![e.clone()])?;
        if !self.in_subcategory(&seq, x) {
            return Err(Error::Precondition("object is not in ⟨E⟩".into()));
        }
        let parts: Vec<(i32, usize)> = self.hom_dims(e, x).into_iter().map(|(m, d)| (-m, d)).rev().collect();
        let mut parts = parts;
        parts.sort();
        let rebuilt: Vec<ProjComplex<F>> = parts.iter().flat_map(|&(n, d)| core::iter::repeat_n(e.shift(n), d)).collect();
        if !self.is_iso(&direct_sum(&rebuilt), x)? {
            return Err(Error::Verification("decomposition does not rebuild the object".into()));
        }
        Ok(parts)
    }
}

fn serre_over<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>) -> ProjComplex<F> {
    if x.is_zero() {
        return ProjComplex::zero();
    }
    minimize(alg, &resolve(alg, &nakayama_termwise(alg, x)))
}

fn add_maps<F: Field>(a: &ChainMap<F>, b: &ChainMap<F>) -> ChainMap<F> {
    use crate::algebra::elem_add;
    debug_assert_eq!(a.lo, b.lo);
    ChainMap {
        lo: a.lo,
        mats: a
            .mats
            .iter()
            .zip(&b.mats)
            .map(|(x, y)| x.iter().zip(y).map(|(rx, ry)| rx.iter().zip(ry).map(|(p, q)| elem_add(p, q)).collect()).collect())
            .collect(),
    }
}
