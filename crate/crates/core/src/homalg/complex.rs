//! Bounded complexes of projectives and chain maps between them.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{elem_add, elem_neg, elem_scale, Algebra, Elem};
use crate::error::Error;
use crate::field::Field;

/// Matrix of algebra elements. Entry `[r][c]` is a morphism from the `c`-th
/// summand of the source to the `r`-th summand of the target, an element of
/// `Hom(source vertex, target vertex)`.
pub type Mat<F> = Vec<Vec<Elem<F>>>;

pub(crate) fn zero_mat<F>(rows: usize, cols: usize) -> Mat<F> {
    (0..rows).map(|_| (0..cols).map(|_| Vec::new()).collect()).collect()
}

/// `g ∘ f` for matrices of algebra elements.
pub(crate) fn mat_compose<F: Field>(alg: &Algebra<F>, g: &Mat<F>, f: &Mat<F>, inner: usize, cols: usize) -> Mat<F> {
    let rows = g.len();
    let mut out = zero_mat(rows, cols);
    for r in 0..rows {
        for m in 0..inner {
            let gm = &g[r][m];
            if gm.is_empty() {
                continue;
            }
            for c in 0..cols {
                let fm = &f[m][c];
                if fm.is_empty() {
                    continue;
                }
                let p = alg.compose(gm, fm);
                if !p.is_empty() {
                    out[r][c] = elem_add(&out[r][c], &p);
                }
            }
        }
    }
    out
}

fn mat_is_zero<F>(m: &Mat<F>) -> bool {
    m.iter().all(|row| row.iter().all(|e| e.is_empty()))
}

fn mat_neg<F: Field>(m: &Mat<F>) -> Mat<F> {
    m.iter().map(|row| row.iter().map(elem_neg).collect()).collect()
}

/// A bounded complex of finitely generated projectives `P(v)`.
///
/// `terms[k]` lists the vertices of the summands in degree `lo + k`;
/// `diffs[k]` is the differential from degree `lo + k` to `lo + k + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjComplex<F> {
    lo: i32,
    terms: Vec<Vec<usize>>,
    diffs: Vec<Mat<F>>,
}

impl<F: Field> ProjComplex<F> {
    pub fn zero() -> Self {
        ProjComplex { lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// `P(v)` placed in degree `deg`.
    pub fn stalk(v: usize, deg: i32) -> Self {
        ProjComplex { lo: deg, terms: vec![vec![v]], diffs: Vec::new() }
    }

    /// Builds a complex and checks shapes, entry vertices and `d ∘ d = 0`.
    pub fn new(alg: &Algebra<F>, lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<Mat<F>>) -> Result<Self, Error> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::Precondition("need one differential between consecutive terms".into()));
        }
        let n = alg.num_vertices();
        if terms.iter().flatten().any(|&v| v >= n) {
            return Err(Error::AlgebraMismatch);
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.len() != terms[k + 1].len() || d.iter().any(|row| row.len() != terms[k].len()) {
                return Err(Error::Precondition("differential has the wrong shape".into()));
            }
            for (r, row) in d.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    let ok = e.iter().all(|(b, _)| {
                        let be = &alg.basis()[*b];
                        be.src == terms[k][c] && be.tgt == terms[k + 1][r]
                    });
                    if !ok {
                        return Err(Error::Precondition("differential entry between the wrong vertices".into()));
                    }
                }
            }
        }
        for k in 1..diffs.len() {
            let dd = mat_compose(alg, &diffs[k], &diffs[k - 1], terms[k].len(), terms[k - 1].len());
            if !mat_is_zero(&dd) {
                return Err(Error::Precondition(alloc::format!("d∘d ≠ 0 at degree {}", lo + k as i32 - 1)));
            }
        }
        Ok(ProjComplex { lo, terms, diffs }.trimmed())
    }

    pub(crate) fn from_parts(lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<Mat<F>>) -> Self {
        debug_assert_eq!(diffs.len() + 1, terms.len().max(1));
        ProjComplex { lo, terms, diffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.terms.last().is_some_and(|t| t.is_empty()) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.first().is_some_and(|t| t.is_empty()) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest nonzero degree (0 for the zero complex).
    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Highest nonzero degree (`lo - 1` for the zero complex).
    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn term(&self, deg: i32) -> &[usize] {
        let k = deg - self.lo;
        if k < 0 || k as usize >= self.terms.len() {
            return &[];
        }
        &self.terms[k as usize]
    }

    /// Differential out of degree `deg`; `None` means the zero map.
    pub fn diff(&self, deg: i32) -> Option<&Mat<F>> {
        let k = deg - self.lo;
        if k < 0 {
            return None;
        }
        self.diffs.get(k as usize)
    }

    pub fn diff_entry(&self, deg: i32, r: usize, c: usize) -> &[(usize, F)] {
        self.diff(deg).map_or(&[][..], |d| &d[r][c][..])
    }

    /// Total number of indecomposable summands.
    pub fn size(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }

    /// Class in `K_0`, in the basis of indecomposable projectives.
    pub fn k0_class(&self, n: usize) -> Vec<i128> {
        let mut v = vec![0i128; n];
        for deg in self.lo..=self.hi() {
            let s = if deg.rem_euclid(2) == 0 { 1 } else { -1 };
            for &a in self.term(deg) {
                v[a] += s;
            }
        }
        v
    }

    /// `X[n]`: degree `k` holds `X^{k+n}`, differential `(-1)^n d`.
    pub fn shift(&self, n: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let diffs = if n.rem_euclid(2) == 0 { self.diffs.clone() } else { self.diffs.iter().map(mat_neg).collect() };
        ProjComplex { lo: self.lo - n, terms: self.terms.clone(), diffs }
    }

    /// Sorted vertex multiset per degree; equal for isomorphic minimal complexes.
    pub fn shape(&self) -> Vec<(i32, Vec<usize>)> {
        (self.lo..=self.hi())
            .map(|d| {
                let mut t = self.term(d).to_vec();
                t.sort_unstable();
                (d, t)
            })
            .collect()
    }

    /// True when no differential entry has an invertible component.
    pub fn is_minimal(&self, alg: &Algebra<F>) -> bool {
        for deg in self.lo..self.hi() {
            let d = self.diff(deg).unwrap();
            for (r, row) in d.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    let (a, b) = (self.term(deg)[c], self.term(deg + 1)[r]);
                    if a == b && !alg.scalar_part(e, a).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Re-express over another vertex numbering; `f` maps old basis indices
    /// to new ones (same structure constants).
    pub fn relabel(&self, vertex: impl Fn(usize) -> usize, basis: impl Fn(usize) -> usize) -> Self {
        ProjComplex {
            lo: self.lo,
            terms: self.terms.iter().map(|t| t.iter().map(|&v| vertex(v)).collect()).collect(),
            diffs: self
                .diffs
                .iter()
                .map(|m| m.iter().map(|row| row.iter().map(|e| e.iter().map(|(b, c)| (basis(*b), c.clone())).collect()).collect()).collect())
                .collect(),
        }
    }

    /// Complex over the opposite algebra obtained by applying `Hom(-, A)`:
    /// degrees are negated and every differential is transposed.
    pub fn dual(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let terms: Vec<Vec<usize>> = self.terms.iter().rev().cloned().collect();
        let diffs: Vec<Mat<F>> = self
            .diffs
            .iter()
            .rev()
            .map(|d| {
                let rows = d.first().map_or(0, |r| r.len());
                (0..rows).map(|r| d.iter().map(|row| row[r].clone()).collect()).collect()
            })
            .collect();
        ProjComplex { lo: -self.hi(), terms, diffs }
    }
}

/// Direct sum, summands concatenated in order within each degree.
pub fn direct_sum<F: Field>(list: &[ProjComplex<F>]) -> ProjComplex<F> {
    let nonzero: Vec<&ProjComplex<F>> = list.iter().filter(|x| !x.is_zero()).collect();
    if nonzero.is_empty() {
        return ProjComplex::zero();
    }
    let lo = nonzero.iter().map(|x| x.lo()).min().unwrap();
    let hi = nonzero.iter().map(|x| x.hi()).max().unwrap();
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for deg in lo..=hi {
        terms.push(nonzero.iter().flat_map(|x| x.term(deg).iter().copied()).collect::<Vec<_>>());
        if deg < hi {
            let rows: usize = nonzero.iter().map(|x| x.term(deg + 1).len()).sum();
            let cols: usize = nonzero.iter().map(|x| x.term(deg).len()).sum();
            let mut m = zero_mat(rows, cols);
            let (mut r0, mut c0) = (0, 0);
            for x in &nonzero {
                let (nr, nc) = (x.term(deg + 1).len(), x.term(deg).len());
                if let Some(d) = x.diff(deg) {
                    for r in 0..nr {
                        for c in 0..nc {
                            m[r0 + r][c0 + c] = d[r][c].clone();
                        }
                    }
                }
                r0 += nr;
                c0 += nc;
            }
            diffs.push(m);
        }
    }
    ProjComplex::from_parts(lo, terms, diffs)
}

/// A degree-0 chain map `X -> Y`; `mats` holds the component in each degree
/// from `lo` on, missing components are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap<F> {
    pub lo: i32,
    pub mats: Vec<Mat<F>>,
}

impl<F: Field> ChainMap<F> {
    pub fn zero() -> Self {
        ChainMap { lo: 0, mats: Vec::new() }
    }

    pub fn get(&self, deg: i32) -> Option<&Mat<F>> {
        let k = deg - self.lo;
        if k < 0 {
            return None;
        }
        self.mats.get(k as usize)
    }

    /// Component in degree `deg` as a full `|Y^deg| x |X^deg|` matrix.
    pub fn component(&self, deg: i32, rows: usize, cols: usize) -> Mat<F> {
        match self.get(deg) {
            Some(m) if rows > 0 && cols > 0 => m.clone(),
            _ => zero_mat(rows, cols),
        }
    }

    pub fn identity(x: &ProjComplex<F>, alg: &Algebra<F>) -> Self {
        let mats = (x.lo()..=x.hi())
            .map(|deg| {
                let t = x.term(deg);
                let mut m = zero_mat(t.len(), t.len());
                for (k, &v) in t.iter().enumerate() {
                    m[k][k] = alg.one_at(v);
                }
                m
            })
            .collect();
        ChainMap { lo: x.lo(), mats }
    }

    /// `g ∘ f` where `f: X -> Y`, `g: Y -> Z`.
    pub fn then(&self, g: &ChainMap<F>, alg: &Algebra<F>, x: &ProjComplex<F>, y: &ProjComplex<F>, z: &ProjComplex<F>) -> Self {
        let lo = x.lo().max(z.lo());
        let hi = x.hi().min(z.hi());
        let mats = (lo..=hi)
            .map(|deg| {
                let (nx, ny, nz) = (x.term(deg).len(), y.term(deg).len(), z.term(deg).len());
                let f = self.component(deg, ny, nx);
                let gm = g.component(deg, nz, ny);
                mat_compose(alg, &gm, &f, ny, nx)
            })
            .collect();
        ChainMap { lo, mats }
    }

    pub fn scaled(&self, c: &F) -> Self {
        ChainMap {
            lo: self.lo,
            mats: self.mats.iter().map(|m| m.iter().map(|row| row.iter().map(|e| elem_scale(e, c)).collect()).collect()).collect(),
        }
    }

    /// Checks `d_Y f = f d_X`.
    pub fn is_chain_map(&self, alg: &Algebra<F>, x: &ProjComplex<F>, y: &ProjComplex<F>) -> bool {
        let lo = x.lo().min(y.lo()) - 1;
        let hi = x.hi().max(y.hi()) + 1;
        for deg in lo..hi {
            let (nx0, nx1, ny0, ny1) = (x.term(deg).len(), x.term(deg + 1).len(), y.term(deg).len(), y.term(deg + 1).len());
            if nx0 == 0 || ny1 == 0 {
                continue;
            }
            let f0 = self.component(deg, ny0, nx0);
            let f1 = self.component(deg + 1, ny1, nx1);
            let dy = y.diff(deg).cloned().unwrap_or_else(|| zero_mat(ny1, ny0));
            let dx = x.diff(deg).cloned().unwrap_or_else(|| zero_mat(nx1, nx0));
            let a = mat_compose(alg, &dy, &f0, ny0, nx0);
            let b = mat_compose(alg, &f1, &dx, nx1, nx0);
            if a != b {
                return false;
            }
        }
        true
    }
}

/// Cone of `f: X -> Y`: degree `k` holds `Y^k ⊕ X^{k+1}` with differential
/// `[[d_Y, f], [0, -d_X]]`. Also returns the inclusion `Y -> cone` and the
/// projection `cone -> X[1]`.
pub fn cone<F: Field>(alg: &Algebra<F>, f: &ChainMap<F>, x: &ProjComplex<F>, y: &ProjComplex<F>) -> (ProjComplex<F>, ChainMap<F>, ChainMap<F>) {
    if x.is_zero() && y.is_zero() {
        return (ProjComplex::zero(), ChainMap::zero(), ChainMap::zero());
    }
    let lo = if x.is_zero() { y.lo() } else if y.is_zero() { x.lo() - 1 } else { y.lo().min(x.lo() - 1) };
    let hi = if x.is_zero() { y.hi() } else if y.is_zero() { x.hi() - 1 } else { y.hi().max(x.hi() - 1) };
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    let mut incl = Vec::new();
    let mut proj = Vec::new();
    for deg in lo..=hi {
        let (ty, tx) = (y.term(deg), x.term(deg + 1));
        let mut t = ty.to_vec();
        t.extend_from_slice(tx);
        let n = t.len();
        let mut inc = zero_mat(n, ty.len());
        for k in 0..ty.len() {
            inc[k][k] = alg.one_at(ty[k]);
        }
        incl.push(inc);
        let mut pr = zero_mat(tx.len(), n);
        for k in 0..tx.len() {
            pr[k][ty.len() + k] = alg.one_at(tx[k]);
        }
        proj.push(pr);
        terms.push(t);
        if deg < hi {
            let (ty1, tx1) = (y.term(deg + 1), x.term(deg + 2));
            let mut m = zero_mat(ty1.len() + tx1.len(), n);
            if let Some(dy) = y.diff(deg) {
                for r in 0..ty1.len() {
                    for c in 0..ty.len() {
                        m[r][c] = dy[r][c].clone();
                    }
                }
            }
            if !ty1.is_empty() && !tx.is_empty() {
                if let Some(fm) = f.get(deg + 1) {
                    for r in 0..ty1.len() {
                        for c in 0..tx.len() {
                            m[r][ty.len() + c] = fm[r][c].clone();
                        }
                    }
                }
            }
            if let Some(dx) = x.diff(deg + 1) {
                for r in 0..tx1.len() {
                    for c in 0..tx.len() {
                        m[ty1.len() + r][ty.len() + c] = elem_neg(&dx[r][c]);
                    }
                }
            }
            diffs.push(m);
        }
    }
    // keep the untrimmed window so the maps line up, then trim
    let c = ProjComplex { lo, terms, diffs };
    let incl = ChainMap { lo, mats: incl };
    let proj = ChainMap { lo, mats: proj };
    (c.trimmed(), incl, proj)
}

/// Removes contractible summands `P(v) --λ--> P(v)` one at a time. Returns
/// the minimal complex with comparison maps `p: X -> X'`, `i: X' -> X`,
/// mutually inverse up to homotopy.
pub fn minimize_with_maps<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>) -> (ProjComplex<F>, ChainMap<F>, ChainMap<F>) {
    let mut cur = x.clone();
    let mut p = ChainMap::identity(x, alg);
    let mut i = ChainMap::identity(x, alg);
    // p: X -> cur, i: cur -> X
    while let Some((deg, r, c)) = find_unit(alg, &cur) {
        let (next, p1, i1) = eliminate(alg, &cur, deg, r, c);
        p = p.then(&p1, alg, x, &cur, &next);
        i = i1.then(&i, alg, &next, &cur, x);
        cur = next;
    }
    (cur, p, i)
}

pub fn minimize<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>) -> ProjComplex<F> {
    let mut cur = x.clone();
    while let Some((deg, r, c)) = find_unit(alg, &cur) {
        cur = eliminate_plain(alg, &cur, deg, r, c);
    }
    cur
}

fn find_unit<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>) -> Option<(i32, usize, usize)> {
    for deg in x.lo()..x.hi() {
        let d = x.diff(deg)?;
        let (src, tgt) = (x.term(deg), x.term(deg + 1));
        for (r, row) in d.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if src[c] == tgt[r] && !alg.scalar_part(e, src[c]).is_zero() {
                    return Some((deg, r, c));
                }
            }
        }
    }
    None
}

/// Gaussian elimination of the unit entry `d_deg[r][c]`. The algebras here
/// are directed, so `Hom(v, v) = K` and the entry is `λ e_v`.
fn eliminate_core<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>, deg: i32, r: usize, c: usize) -> (ProjComplex<F>, F) {
    let v = x.term(deg)[c];
    let e = &x.diff(deg).unwrap()[r][c];
    debug_assert!(e.iter().all(|(b, _)| *b == alg.idempotent(v)), "non-directed algebra");
    let lam_inv = alg.scalar_part(e, v).inv();
    let mut terms: Vec<Vec<usize>> = (x.lo()..=x.hi()).map(|d| x.term(d).to_vec()).collect();
    let mut diffs: Vec<Mat<F>> = (x.lo()..x.hi()).map(|d| x.diff(d).unwrap().clone()).collect();
    let k = (deg - x.lo()) as usize;
    // new d_k
    let d = &diffs[k];
    let mut nd = Vec::new();
    for r2 in 0..d.len() {
        if r2 == r {
            continue;
        }
        let mut row = Vec::new();
        for c2 in 0..d[r2].len() {
            if c2 == c {
                continue;
            }
            let mut val = d[r2][c2].clone();
            if !d[r2][c].is_empty() && !d[r][c2].is_empty() {
                let corr = alg.compose(&d[r2][c], &d[r][c2]);
                val = elem_add(&val, &elem_scale(&corr, &(-lam_inv.clone())));
            }
            row.push(val);
        }
        nd.push(row);
    }
    diffs[k] = nd;
    if k > 0 {
        diffs[k - 1].remove(c);
    }
    if k + 1 < diffs.len() {
        for row in diffs[k + 1].iter_mut() {
            row.remove(r);
        }
    }
    terms[k].remove(c);
    terms[k + 1].remove(r);
    (ProjComplex { lo: x.lo(), terms, diffs }, lam_inv)
}

fn eliminate_plain<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>, deg: i32, r: usize, c: usize) -> ProjComplex<F> {
    eliminate_core(alg, x, deg, r, c).0.trimmed()
}

fn eliminate<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>, deg: i32, r: usize, c: usize) -> (ProjComplex<F>, ChainMap<F>, ChainMap<F>) {
    let (raw, lam_inv) = eliminate_core(alg, x, deg, r, c);
    let d = x.diff(deg).unwrap();
    let lo = x.lo();
    let mut pm = Vec::new();
    let mut im = Vec::new();
    for dd in x.lo()..=x.hi() {
        let old = x.term(dd);
        let new = raw.term(dd);
        // keep-index maps from new to old positions
        let removed = if dd == deg { Some(c) } else if dd == deg + 1 { Some(r) } else { None };
        let keep: Vec<usize> = (0..old.len()).filter(|&t| Some(t) != removed).collect();
        let mut p = zero_mat(new.len(), old.len());
        let mut i = zero_mat(old.len(), new.len());
        for (nk, &ok) in keep.iter().enumerate() {
            p[nk][ok] = alg.one_at(old[ok]);
            i[ok][nk] = alg.one_at(old[ok]);
        }
        if dd == deg + 1 {
            // p(c, δ) = c - d[C][c] λ^{-1} δ
            for (nk, &ok) in keep.iter().enumerate() {
                if !d[ok][c].is_empty() {
                    p[nk][r] = elem_scale(&d[ok][c], &(-lam_inv.clone()));
                }
            }
        }
        if dd == deg {
            // i(a) = (a, -λ^{-1} d[r][a])
            for (nk, &ok) in keep.iter().enumerate() {
                if !d[r][ok].is_empty() {
                    i[c][nk] = elem_scale(&d[r][ok], &(-lam_inv.clone()));
                }
            }
        }
        pm.push(p);
        im.push(i);
    }
    let raw_lo = raw.lo();
    let trimmed = raw.trimmed();
    // maps are indexed from x.lo(); the trimmed complex may start later but
    // components outside its window are empty matrices anyway
    let _ = raw_lo;
    (trimmed, ChainMap { lo, mats: pm }, ChainMap { lo, mats: im })
}
