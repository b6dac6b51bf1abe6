//! Bound quiver algebras with an explicit path basis.
//!
//! Convention: an algebra is read as a K-linear category whose objects are the
//! vertices. A basis element `b` with `src = a`, `tgt = c` is a morphism
//! `a -> c`, i.e. a path from `a` to `c`. Composition `g ∘ f` follows `f` and
//! then `g`. Projectives are `P(v) = Hom(-, v)`, so
//! `Hom(P(a), P(b)) = Hom(a, b)` and a source of the quiver is a simple
//! projective. The Cartan matrix is `C[a][b] = dim e_a A e_b`, the number of
//! paths `b -> a`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::field::Field;
use crate::intmat::IntMatrix;
use crate::lattice::{young_pq, young_pqr, CompositionPair, GridPoint, LatticeSet};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Int(i64),
    Grid(GridPoint),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Int(v) => write!(f, "{v}"),
            VertexLabel::Grid(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<VertexLabel>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<VertexLabel>) -> Self {
        Quiver { vertices, arrows: Vec::new() }
    }

    pub fn add_arrow(&mut self, name: impl Into<String>, src: usize, tgt: usize) -> usize {
        self.arrows.push(Arrow { name: name.into(), src, tgt });
        self.arrows.len() - 1
    }

    pub fn vertex(&self, l: VertexLabel) -> Option<usize> {
        self.vertices.iter().position(|&v| v == l)
    }
}

/// A path: start vertex plus arrows in travel order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

/// Linear combination of paths with a common source and target.
#[derive(Clone, Debug)]
pub struct Relation {
    pub terms: Vec<(i64, Path)>,
}

/// An algebra element: sparse combination of basis indices, sorted.
pub type Elem<F> = Vec<(usize, F)>;

pub fn elem_add<F: Field>(a: &Elem<F>, b: &Elem<F>) -> Elem<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j].clone());
            j += 1;
        } else {
            let s = a[i].1.clone() + b[j].1.clone();
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn elem_scale<F: Field>(a: &Elem<F>, c: &F) -> Elem<F> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(k, v)| (*k, v.clone() * c.clone())).collect()
}

pub fn elem_neg<F: Field>(a: &Elem<F>) -> Elem<F> {
    a.iter().map(|(k, v)| (*k, -v.clone())).collect()
}

fn elem_from_map<F: Field>(m: BTreeMap<usize, F>) -> Elem<F> {
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

#[derive(Clone, Debug)]
pub struct BasisElem {
    pub src: usize,
    pub tgt: usize,
    pub path: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Algebra<F> {
    name: String,
    quiver: Quiver,
    relations: Vec<String>,
    basis: Vec<BasisElem>,
    /// `hom[a][c]`: basis indices of morphisms `a -> c`.
    hom: Vec<Vec<Vec<usize>>>,
    /// Position of each basis element inside its hom space.
    slot: Vec<usize>,
    idem: Vec<usize>,
    /// `comp[g * dim + f] = g ∘ f`, empty when zero or not composable.
    comp: Vec<Elem<F>>,
}

impl<F: Field> Algebra<F> {
    fn assemble(name: String, quiver: Quiver, relations: Vec<String>, basis: Vec<BasisElem>, comp: Vec<Elem<F>>) -> Self {
        let n = quiver.vertices.len();
        let mut hom = vec![vec![Vec::new(); n]; n];
        let mut slot = vec![0; basis.len()];
        let mut idem = vec![usize::MAX; n];
        for (k, b) in basis.iter().enumerate() {
            slot[k] = hom[b.src][b.tgt].len();
            hom[b.src][b.tgt].push(k);
            if b.path.is_empty() {
                idem[b.src] = k;
            }
        }
        debug_assert!(idem.iter().all(|&e| e != usize::MAX));
        Algebra { name, quiver, relations, basis, hom, slot, idem, comp }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[String] {
        &self.relations
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        self.quiver.vertices[v]
    }

    pub fn vertex(&self, l: VertexLabel) -> Option<usize> {
        self.quiver.vertex(l)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    /// Basis of `Hom(a, c)`, i.e. of `Hom(P(a), P(c))`.
    pub fn hom(&self, a: usize, c: usize) -> &[usize] {
        &self.hom[a][c]
    }

    pub fn slot(&self, b: usize) -> usize {
        self.slot[b]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idem[v]
    }

    pub fn one_at(&self, v: usize) -> Elem<F> {
        vec![(self.idem[v], F::one())]
    }

    /// `g ∘ f` on basis elements.
    pub fn compose_basis(&self, g: usize, f: usize) -> &Elem<F> {
        &self.comp[g * self.basis.len() + f]
    }

    /// `g ∘ f` on elements.
    pub fn compose(&self, g: &Elem<F>, f: &Elem<F>) -> Elem<F> {
        if g.is_empty() || f.is_empty() {
            return Vec::new();
        }
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (gb, gc) in g {
            for (fb, fc) in f {
                let prod = self.compose_basis(*gb, *fb);
                if prod.is_empty() {
                    continue;
                }
                let c = gc.clone() * fc.clone();
                for (k, v) in prod {
                    let e = acc.entry(*k).or_insert_with(F::zero);
                    *e = e.clone() + c.clone() * v.clone();
                }
            }
        }
        elem_from_map(acc)
    }

    /// Coefficient of the identity `e_v` in `x`, for `x ∈ Hom(v, v)`.
    pub fn scalar_part(&self, x: &Elem<F>, v: usize) -> F {
        let e = self.idem[v];
        x.iter().find(|(k, _)| *k == e).map(|(_, c)| c.clone()).unwrap_or_else(F::zero)
    }

    /// Cartan matrix `C[a][b] = dim e_a A e_b` (paths `b -> a`).
    pub fn cartan(&self) -> IntMatrix {
        let n = self.num_vertices();
        let labels: Vec<String> = self.quiver.vertices.iter().map(|l| format!("{l}")).collect();
        let mut c = IntMatrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                c.set(a, b, self.hom[b][a].len() as i128);
            }
        }
        c.with_labels(labels)
    }

    /// The opposite algebra: same basis, arrows and composition reversed.
    pub fn opposite(&self) -> Algebra<F> {
        let mut quiver = self.quiver.clone();
        for a in quiver.arrows.iter_mut() {
            core::mem::swap(&mut a.src, &mut a.tgt);
        }
        let basis: Vec<BasisElem> = self
            .basis
            .iter()
            .map(|b| BasisElem { src: b.tgt, tgt: b.src, path: b.path.iter().rev().copied().collect() })
            .collect();
        let d = basis.len();
        let mut comp = vec![Vec::new(); d * d];
        for g in 0..d {
            for f in 0..d {
                comp[g * d + f] = self.comp[f * d + g].clone();
            }
        }
        Algebra::assemble(format!("{}^op", self.name), quiver, self.relations.clone(), basis, comp)
    }

    /// True when every arrow increases a fixed topological order, which holds
    /// for every constructor in this module.
    pub fn is_directed(&self) -> bool {
        let n = self.num_vertices();
        let mut indeg = vec![0usize; n];
        for a in &self.quiver.arrows {
            indeg[a.tgt] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in &self.quiver.arrows {
                if a.src == v {
                    indeg[a.tgt] -= 1;
                    if indeg[a.tgt] == 0 {
                        stack.push(a.tgt);
                    }
                }
            }
        }
        seen == n
    }

    /// Checks associativity on every composable basis triple.
    pub fn check_associative(&self) -> bool {
        let d = self.dim();
        for h in 0..d {
            for g in 0..d {
                if self.basis[g].tgt != self.basis[h].src {
                    continue;
                }
                let hg = self.compose_basis(h, g).clone();
                for f in 0..d {
                    if self.basis[f].tgt != self.basis[g].src {
                        continue;
                    }
                    let left = self.compose(&hg, &vec![(f, F::one())]);
                    let gf = self.compose_basis(g, f).clone();
                    let right = self.compose(&vec![(h, F::one())], &gf);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Text dump: vertices, arrows and relations.
    pub fn describe(&self) -> String {
        let mut s = format!("algebra {} (dim {})\nvertices:", self.name, self.dim());
        for v in &self.quiver.vertices {
            s += &format!(" {v}");
        }
        s += "\narrows:\n";
        for a in &self.quiver.arrows {
            s += &format!("  {}: {} -> {}\n", a.name, self.quiver.vertices[a.src], self.quiver.vertices[a.tgt]);
        }
        s += "relations:\n";
        for r in &self.relations {
            s += &format!("  {r}\n");
        }
        s
    }
}

/// Quiver plus relations, reduced to a path basis by linear algebra on each
/// `(source, target)` space.
pub struct Presentation {
    pub name: String,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

fn path_text(q: &Quiver, p: &Path) -> String {
    if p.arrows.is_empty() {
        return format!("e{}", q.vertices[p.src]);
    }
    // written in composition order, last arrow first
    let names: Vec<&str> = p.arrows.iter().rev().map(|&a| q.arrows[a].name.as_str()).collect();
    names.join("*")
}

impl Presentation {
    pub fn new(name: impl Into<String>, quiver: Quiver) -> Self {
        Presentation { name: name.into(), quiver, relations: Vec::new() }
    }

    pub fn path(&self, src: usize, arrows: &[usize]) -> Path {
        let mut v = src;
        for &a in arrows {
            assert_eq!(self.quiver.arrows[a].src, v, "path does not compose");
            v = self.quiver.arrows[a].tgt;
        }
        Path { src, tgt: v, arrows: arrows.to_vec() }
    }

    pub fn zero_relation(&mut self, src: usize, arrows: &[usize]) {
        let p = self.path(src, arrows);
        self.relations.push(Relation { terms: vec![(1, p)] });
    }

    pub fn relation(&mut self, terms: Vec<(i64, Path)>) {
        assert!(terms.iter().all(|(_, p)| p.src == terms[0].1.src && p.tgt == terms[0].1.tgt));
        self.relations.push(Relation { terms });
    }

    fn all_paths(&self) -> Vec<Vec<Vec<Path>>> {
        let n = self.quiver.vertices.len();
        let mut out = vec![vec![Vec::new(); n]; n];
        for s in 0..n {
            let mut stack = vec![Path { src: s, tgt: s, arrows: Vec::new() }];
            while let Some(p) = stack.pop() {
                assert!(p.arrows.len() <= 4 * n + 4, "quiver has an oriented cycle");
                for (k, a) in self.quiver.arrows.iter().enumerate() {
                    if a.src == p.tgt {
                        let mut q = p.clone();
                        q.arrows.push(k);
                        q.tgt = a.tgt;
                        stack.push(q);
                    }
                }
                out[s][p.tgt].push(p);
            }
            for t in 0..n {
                out[s][t].sort_by(|a, b| a.arrows.len().cmp(&b.arrows.len()).then_with(|| a.arrows.cmp(&b.arrows)));
            }
        }
        out
    }

    /// Reduce to a basis. Vertices whose idempotent lies in the ideal are
    /// dropped.
    pub fn build<F: Field>(&self) -> Algebra<F> {
        let n = self.quiver.vertices.len();
        let paths = self.all_paths();
        // normal form of each path, as a combination of surviving paths
        let mut normal: BTreeMap<(usize, Vec<usize>), Vec<(usize, F)>> = BTreeMap::new();
        let mut survivors: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for c in 0..n {
                let ps = &paths[a][c];
                if ps.is_empty() {
                    continue;
                }
                let index: BTreeMap<&Vec<usize>, usize> = ps.iter().enumerate().map(|(i, p)| (&p.arrows, i)).collect();
                let mut gens: Vec<Vec<F>> = Vec::new();
                for r in &self.relations {
                    let (rs, rt) = (r.terms[0].1.src, r.terms[0].1.tgt);
                    for pre in &paths[a][rs] {
                        for post in &paths[rt][c] {
                            let mut v = vec![F::zero(); ps.len()];
                            for (coef, t) in &r.terms {
                                let mut arrows = pre.arrows.clone();
                                arrows.extend(&t.arrows);
                                arrows.extend(&post.arrows);
                                let i = index[&arrows];
                                v[i] = v[i].clone() + F::from_i64(*coef);
                            }
                            if v.iter().any(|x| !x.is_zero()) {
                                gens.push(v);
                            }
                        }
                    }
                }
                // prefer long paths as pivots so short ones stay in the basis
                let m = ps.len();
                let rev = |i: usize| m - 1 - i;
                let mut mat = Matrix::zeros(gens.len(), m);
                for (r, g) in gens.iter().enumerate() {
                    for (i, x) in g.iter().enumerate() {
                        mat.set(r, rev(i), x.clone());
                    }
                }
                let pivots = mat.rref();
                let mut is_pivot = vec![false; m];
                for &p in &pivots {
                    is_pivot[rev(p)] = true;
                }
                for i in 0..m {
                    if !is_pivot[i] {
                        survivors[a][c].push(i);
                    }
                }
                let local: BTreeMap<usize, usize> =
                    survivors[a][c].iter().enumerate().map(|(k, &i)| (i, k)).collect();
                for i in 0..m {
                    let nf: Vec<(usize, F)> = if !is_pivot[i] {
                        vec![(local[&i], F::one())]
                    } else {
                        let row = pivots.iter().position(|&p| rev(p) == i).unwrap();
                        (0..m)
                            .filter(|&j| !is_pivot[j] && !mat.get(row, rev(j)).is_zero())
                            .map(|j| (local[&j], -mat.get(row, rev(j)).clone()))
                            .collect()
                    };
                    normal.insert((a, ps[i].arrows.clone()), nf);
                }
            }
        }
        // keep vertices whose idempotent survives
        let keep: Vec<bool> = (0..n).map(|v| !survivors[v][v].is_empty()).collect();
        let mut newv = vec![usize::MAX; n];
        let mut vertices = Vec::new();
        for v in 0..n {
            if keep[v] {
                newv[v] = vertices.len();
                vertices.push(self.quiver.vertices[v]);
            }
        }
        let mut quiver = Quiver::new(vertices);
        let mut newa = vec![usize::MAX; self.quiver.arrows.len()];
        for (k, a) in self.quiver.arrows.iter().enumerate() {
            if keep[a.src] && keep[a.tgt] && normal[&(a.src, vec![k])].len() == 1 {
                newa[k] = quiver.add_arrow(a.name.clone(), newv[a.src], newv[a.tgt]);
            }
        }
        let mut basis = Vec::new();
        let mut global: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        for a in 0..n {
            for c in 0..n {
                if !(keep[a] && keep[c]) {
                    continue;
                }
                for (k, &i) in survivors[a][c].iter().enumerate() {
                    global.insert((a, c, k), basis.len());
                    let p = &paths[a][c][i];
                    // paths through dropped vertices are zero, so every arrow maps
                    let path = p.arrows.iter().map(|&x| newa[x]).collect();
                    basis.push(BasisElem { src: newv[a], tgt: newv[c], path });
                }
            }
        }
        let old_of: Vec<(usize, usize, usize)> = {
            let mut v = vec![(0, 0, 0); basis.len()];
            for (key, &g) in &global {
                v[g] = *key;
            }
            v
        };
        let d = basis.len();
        let mut comp = vec![Vec::new(); d * d];
        for g in 0..d {
            for f in 0..d {
                let (ga, gc, gk) = old_of[g];
                let (fa, fc, fk) = old_of[f];
                if fc != ga {
                    continue;
                }
                let mut arrows = paths[fa][fc][survivors[fa][fc][fk]].arrows.clone();
                arrows.extend(&paths[ga][gc][survivors[ga][gc][gk]].arrows);
                let nf = &normal[&(fa, arrows)];
                let mut e: Elem<F> = nf.iter().map(|(k, v)| (global[&(fa, gc, *k)], v.clone())).collect();
                e.sort_by_key(|x| x.0);
                comp[g * d + f] = e;
            }
        }
        let rels = self
            .relations
            .iter()
            .map(|r| {
                let parts: Vec<String> = r
                    .terms
                    .iter()
                    .map(|(c, p)| match c {
                        1 => path_text(&self.quiver, p),
                        -1 => format!("-{}", path_text(&self.quiver, p)),
                        _ => format!("{c}{}", path_text(&self.quiver, p)),
                    })
                    .collect();
                format!("{} = 0", parts.join(" + ").replace("+ -", "- "))
            })
            .collect();
        Algebra::assemble(self.name.clone(), quiver, rels, basis, comp)
    }
}

/// `N(n, l) = K A_n / rad^l` with `A_n = 1 -> 2 -> ... -> n`.
pub fn nakayama<F: Field>(n: usize, l: usize) -> Result<Algebra<F>, Error> {
    if n < 1 || l < 1 {
        return Err(Error::Precondition(format!("N({n},{l}) needs n, l >= 1")));
    }
    let mut q = Quiver::new((1..=n as i64).map(VertexLabel::Int).collect());
    for i in 0..n - 1 {
        q.add_arrow(format!("a{}", i + 1), i, i + 1);
    }
    // monomial: the basis is the set of paths of length < l
    let mut basis = Vec::new();
    let mut index = BTreeMap::new();
    for s in 0..n {
        for t in s..n.min(s + l) {
            index.insert((s, t), basis.len());
            basis.push(BasisElem { src: s, tgt: t, path: (s..t).collect() });
        }
    }
    let d = basis.len();
    let mut comp = vec![Vec::new(); d * d];
    for g in 0..d {
        for f in 0..d {
            let (bf, bg) = (&basis[f], &basis[g]);
            if bf.tgt == bg.src && bg.tgt - bf.src < l {
                comp[g * d + f] = vec![(index[&(bf.src, bg.tgt)], F::one())];
            }
        }
    }
    let rels = if l < n { vec![format!("paths of length {l} = 0")] } else { Vec::new() };
    Ok(Algebra::assemble(format!("N({n},{l})"), q, rels, basis, comp))
}

/// `N(I)`: the radical-square-zero algebra on the interval `I = [lo, hi]`
/// with arrows `j -> j-1`.
pub fn nn<F: Field>(lo: i64, hi: i64) -> Result<Algebra<F>, Error> {
    if hi < lo {
        return Err(Error::Precondition("N(I) needs a nonempty interval".into()));
    }
    let m = (hi - lo + 1) as usize;
    let mut q = Quiver::new((lo..=hi).map(VertexLabel::Int).collect());
    let mut p = Presentation::new(format!("N([{lo},{hi}])"), Quiver::new(Vec::new()));
    for k in 1..m {
        q.add_arrow(format!("b{}", lo + k as i64), k, k - 1);
    }
    p.quiver = q;
    for k in 2..m {
        p.zero_relation(k, &[k - 1, k - 2]);
    }
    Ok(p.build())
}

/// Combinatorial Cartan matrix of `L(S)`: entry `(a, b)` is 1 iff
/// `a ∈ S_b`. Rows and columns follow the canonical order of `S`.
pub fn cartan_lattice(s: &LatticeSet) -> IntMatrix {
    let pts = s.to_vec();
    let n = pts.len();
    let mut c = IntMatrix::zeros(n, n);
    for (a, pa) in pts.iter().enumerate() {
        for (b, pb) in pts.iter().enumerate() {
            let (di, dj) = (pb.i - pa.i, pb.j - pa.j);
            if (0..=1).contains(&di) && (0..=1).contains(&dj) {
                c.set(a, b, 1);
            }
        }
    }
    c.with_labels(pts.iter().map(|p| format!("{p}")).collect())
}

/// `L(S)`: vertices `S`; a morphism `a -> b` exists (one-dimensional) iff
/// `b ∈ S_a`; composition is 1 whenever the composite stays in a square.
/// Arrows: `u: (i,j) -> (i,j-1)`, `v: (i,j) -> (i-1,j)`, and a diagonal
/// `w: (i,j) -> (i-1,j-1)` when neither corner lies in `S`.
pub fn lattice_algebra<F: Field>(s: &LatticeSet) -> Result<Algebra<F>, Error> {
    if s.is_empty() {
        return Err(Error::Precondition("L(S) needs S nonempty".into()));
    }
    let pts = s.to_vec();
    let idx = |p: GridPoint| s.index_of(p);
    let mut q = Quiver::new(pts.iter().map(|&p| VertexLabel::Grid(p)).collect());
    let mut arrow_at: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut rels = Vec::new();
    for (a, &p) in pts.iter().enumerate() {
        let left = GridPoint::new(p.i, p.j - 1);
        let up = GridPoint::new(p.i - 1, p.j);
        let diag = GridPoint::new(p.i - 1, p.j - 1);
        if let Some(b) = idx(left) {
            let k = q.add_arrow(format!("u{}", p), a, b);
            arrow_at.insert((a, b), k);
        }
        if let Some(b) = idx(up) {
            let k = q.add_arrow(format!("v{}", p), a, b);
            arrow_at.insert((a, b), k);
        }
        if let Some(b) = idx(diag) {
            if !s.contains(left) && !s.contains(up) {
                let k = q.add_arrow(format!("w{}", p), a, b);
                arrow_at.insert((a, b), k);
            }
        }
        let far_left = GridPoint::new(p.i, p.j - 2);
        if s.contains(left) && s.contains(far_left) {
            rels.push(format!("u{} * u{} = 0", left, p));
        }
        let far_up = GridPoint::new(p.i - 2, p.j);
        if s.contains(up) && s.contains(far_up) {
            rels.push(format!("v{} * v{} = 0", up, p));
        }
        if s.contains(left) && s.contains(up) && s.contains(diag) {
            rels.push(format!("u{} * v{} - v{} * u{} = 0", up, p, left, p));
        }
    }
    let mut basis = Vec::new();
    let mut index = BTreeMap::new();
    for (a, &p) in pts.iter().enumerate() {
        for (b, &t) in pts.iter().enumerate() {
            let (di, dj) = (p.i - t.i, p.j - t.j);
            if !((0..=1).contains(&di) && (0..=1).contains(&dj)) {
                continue;
            }
            let path = if a == b {
                Vec::new()
            } else if let Some(&k) = arrow_at.get(&(a, b)) {
                vec![k]
            } else {
                // diagonal through a corner
                let corner = [GridPoint::new(p.i - 1, p.j), GridPoint::new(p.i, p.j - 1)]
                    .into_iter()
                    .find_map(idx)
                    .expect("diagonal without corner or arrow");
                vec![arrow_at[&(a, corner)], arrow_at[&(corner, b)]]
            };
            index.insert((a, b), basis.len());
            basis.push(BasisElem { src: a, tgt: b, path });
        }
    }
    let d = basis.len();
    let mut comp = vec![Vec::new(); d * d];
    for g in 0..d {
        for f in 0..d {
            let (bf, bg) = (&basis[f], &basis[g]);
            if bf.tgt != bg.src {
                continue;
            }
            if let Some(&k) = index.get(&(bf.src, bg.tgt)) {
                comp[g * d + f] = vec![(k, F::one())];
            }
        }
    }
    Ok(Algebra::assemble(format!("L(S) on {} points", pts.len()), q, rels, basis, comp))
}

/// `L!(p;q)`: grid quiver on `Y(p;q)` with `u!: (i,j) -> (i,j+1)`,
/// `v!: (i,j) -> (i+1,j)` and commuting squares.
pub fn lattice_shriek<F: Field>(pair: &CompositionPair) -> Algebra<F> {
    let y = young_pq(pair);
    let pts = y.to_vec();
    let mut q = Quiver::new(pts.iter().map(|&p| VertexLabel::Grid(p)).collect());
    let mut u = BTreeMap::new();
    let mut v = BTreeMap::new();
    for (a, &p) in pts.iter().enumerate() {
        if let Some(b) = y.index_of(GridPoint::new(p.i, p.j + 1)) {
            u.insert(a, q.add_arrow(format!("u!{}", p), a, b));
        }
        if let Some(b) = y.index_of(GridPoint::new(p.i + 1, p.j)) {
            v.insert(a, q.add_arrow(format!("v!{}", p), a, b));
        }
    }
    let mut pres = Presentation::new(format!("L!({:?};{:?})", pair.p(), pair.q()), q);
    for (a, &p) in pts.iter().enumerate() {
        let (Some(&ua), Some(&va)) = (u.get(&a), v.get(&a)) else { continue };
        let right = y.index_of(GridPoint::new(p.i, p.j + 1)).unwrap();
        let down = y.index_of(GridPoint::new(p.i + 1, p.j)).unwrap();
        if let (Some(&vr), Some(&ud)) = (v.get(&right), u.get(&down)) {
            let p1 = pres.path(a, &[ua, vr]);
            let p2 = pres.path(a, &[va, ud]);
            pres.relation(vec![(1, p1), (-1, p2)]);
        }
    }
    pres.build()
}

/// The grid quotient `(A(s,2)^op ⊗ A(t,2)^op) / <e_s ⊗ e_{t-i}, i < u>`.
pub fn intro_lattice_algebra<F: Field>(s: i64, t: i64, u: i64) -> Result<Algebra<F>, Error> {
    if s < 1 || t < 1 || u < 0 || u > t {
        return Err(Error::Precondition(format!("L({s},{t},{u}) needs s,t >= 1, 0 <= u <= t")));
    }
    let mut pts = Vec::new();
    for i in 1..=s {
        for j in 1..=t {
            pts.push(GridPoint::new(i, j));
        }
    }
    let at = |p: GridPoint| -> Option<usize> {
        (1..=s).contains(&p.i).then_some(())?;
        (1..=t).contains(&p.j).then(|| ((p.i - 1) * t + (p.j - 1)) as usize)
    };
    let mut q = Quiver::new(pts.iter().map(|&p| VertexLabel::Grid(p)).collect());
    let mut ua = BTreeMap::new();
    let mut va = BTreeMap::new();
    for (a, &p) in pts.iter().enumerate() {
        if let Some(b) = at(GridPoint::new(p.i, p.j - 1)) {
            ua.insert(a, q.add_arrow(format!("u{}", p), a, b));
        }
        if let Some(b) = at(GridPoint::new(p.i - 1, p.j)) {
            va.insert(a, q.add_arrow(format!("v{}", p), a, b));
        }
    }
    let mut pres = Presentation::new(format!("L({s},{t},{u})"), q);
    for (a, &p) in pts.iter().enumerate() {
        if let Some(&x) = ua.get(&a) {
            let b = at(GridPoint::new(p.i, p.j - 1)).unwrap();
            if let Some(&y) = ua.get(&b) {
                pres.zero_relation(a, &[x, y]);
            }
        }
        if let Some(&x) = va.get(&a) {
            let b = at(GridPoint::new(p.i - 1, p.j)).unwrap();
            if let Some(&y) = va.get(&b) {
                pres.zero_relation(a, &[x, y]);
            }
        }
        if let (Some(&x), Some(&y)) = (ua.get(&a), va.get(&a)) {
            let l = at(GridPoint::new(p.i, p.j - 1)).unwrap();
            let up = at(GridPoint::new(p.i - 1, p.j)).unwrap();
            let p1 = pres.path(a, &[x, va[&l]]);
            let p2 = pres.path(a, &[y, ua[&up]]);
            pres.relation(vec![(1, p1), (-1, p2)]);
        }
    }
    for i in 0..u {
        let v = at(GridPoint::new(s, t - i)).unwrap();
        pres.zero_relation(v, &[]);
    }
    let alg = pres.build();
    debug_assert_eq!(
        alg.num_vertices(),
        young_pqr(s, t, u).map(|y| y.len()).unwrap_or(0)
    );
    Ok(alg)
}
