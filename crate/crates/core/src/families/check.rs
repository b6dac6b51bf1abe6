//! Axiom checkers and the endomorphism pattern of a family.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};

use super::{Axiom, AxiomReport, AxiomResult, Outcome, SFamily, Witness};
use crate::algebra::cartan_lattice;
use crate::error::Error;
use crate::field::Field;
use crate::homalg::{ExcSeq, ProjComplex};
use crate::intmat::IntMatrix;
use crate::lattice::GridPoint;

struct Tally {
    axiom: Axiom,
    checked: usize,
    witness: Option<Witness>,
}

impl Tally {
    fn new(axiom: Axiom) -> Self {
        Tally { axiom, checked: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn fail(&mut self, w: Witness) {
        self.record(false, || w);
    }

    fn iso(&mut self, at: GridPoint, other: GridPoint, r: Result<(), String>) {
        match r {
            Ok(()) => self.checked += 1,
            Err(why) => self.fail(witness(at, Some(other), None, why)),
        }
    }

    fn done(self) -> AxiomResult {
        let outcome = match self.witness {
            None => Outcome::Pass,
            Some(w) => Outcome::Fail(w),
        };
        AxiomResult { axiom: self.axiom, checked: self.checked, outcome }
    }
}

fn witness(at: GridPoint, other: Option<GridPoint>, shift: Option<i32>, detail: impl Into<String>) -> Witness {
    Witness { at, other, shift, detail: detail.into() }
}

fn skipped(axioms: &[Axiom], why: &str) -> AxiomReport {
    AxiomReport {
        results: axioms.iter().map(|&axiom| AxiomResult { axiom, checked: 0, outcome: Outcome::Skipped(why.to_string()) }).collect(),
    }
}

/// `Ok(())` iff `got` is isomorphic to `want`; otherwise a description.
fn iso_or_reason<F: Field>(fam: &SFamily<F>, got: Result<ProjComplex<F>, Error>, want: &ProjComplex<F>) -> Result<(), String> {
    let got = got.map_err(|e| e.to_string())?;
    match fam.derived().is_iso(&got, want) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("got shape {:?}, expected {:?}", got.shape(), fam.derived().minimize(want).shape())),
        Err(e) => Err(e.to_string()),
    }
}

/// Exceptional sequences of rows, columns and the full support, built lazily.
struct Sequences<'a, F> {
    fam: &'a SFamily<F>,
    rows: BTreeMap<i64, Result<ExcSeq<F>, Error>>,
    cols: BTreeMap<i64, Result<ExcSeq<F>, Error>>,
    full: Option<Result<ExcSeq<F>, Error>>,
}

impl<'a, F: Field> Sequences<'a, F> {
    fn new(fam: &'a SFamily<F>) -> Self {
        Sequences { fam, rows: BTreeMap::new(), cols: BTreeMap::new(), full: None }
    }

    fn row(&mut self, i: i64) -> Result<&ExcSeq<F>, Error> {
        let fam = self.fam;
        self.rows.entry(i).or_insert_with(|| fam.row_sequence(i)).as_ref().map_err(Clone::clone)
    }

    fn col(&mut self, j: i64) -> Result<&ExcSeq<F>, Error> {
        let fam = self.fam;
        self.cols.entry(j).or_insert_with(|| fam.col_sequence(j)).as_ref().map_err(Clone::clone)
    }

    fn full(&mut self) -> Result<&ExcSeq<F>, Error> {
        let fam = self.fam;
        self.full.get_or_insert_with(|| fam.full_sequence()).as_ref().map_err(Clone::clone)
    }
}

fn l1<F: Field>(fam: &SFamily<F>) -> AxiomResult {
    let mut t = Tally::new(Axiom::L1);
    for (&p, x) in fam.members() {
        let h = fam.derived().hom_dims(x, x);
        let ok = h.len() == 1 && h.get(&0) == Some(&1);
        t.record(ok, || witness(p, Some(p), None, format!("Hom(X, X[*]) = {h:?}")));
    }
    t.done()
}

/// (L1) and (L2) split into the row condition (L2.1) and the column
/// condition (L2.2).
pub fn check_weak<F: Field>(fam: &SFamily<F>) -> AxiomReport {
    let mut rows = Tally::new(Axiom::L2Rows);
    let mut cols = Tally::new(Axiom::L2Cols);
    for (&a, xa) in fam.members() {
        for (&b, xb) in fam.members() {
            if a == b {
                continue;
            }
            let h = fam.derived().hom_dims(xa, xb);
            let shift = h.keys().next().copied();
            let row_ok = h.is_empty() || (a.i - 1..=a.i).contains(&b.i);
            let col_ok = h.is_empty() || (a.j - 1..=a.j).contains(&b.j);
            rows.record(row_ok, || witness(a, Some(b), shift, format!("Hom = {h:?} across rows")));
            cols.record(col_ok, || witness(a, Some(b), shift, format!("Hom = {h:?} across columns")));
        }
    }
    AxiomReport { results: alloc::vec![l1(fam), rows.done(), cols.done()] }
}

/// (S1)-(S3) on top of [`check_weak`].
pub fn check_family<F: Field>(fam: &SFamily<F>) -> AxiomReport {
    let mut report = check_weak(fam);
    if !report.passed() {
        report.extend(skipped(&[Axiom::S1, Axiom::S2, Axiom::S3], "weak family axioms fail"));
        return report;
    }
    let d = fam.derived();
    let mut seqs = Sequences::new(fam);
    let (mut s1, mut s2, mut s3) = (Tally::new(Axiom::S1), Tally::new(Axiom::S2), Tally::new(Axiom::S3));
    for p in fam.support().iter() {
        let x = fam.get(p);
        let left = GridPoint::new(p.i, p.j - 1);
        if let Some(want) = fam.member(left) {
            let got = seqs.row(p.i).and_then(|e| d.sub_serre(e, x));
            s1.iso(p, left, iso_or_reason(fam, got, want));
        }
        let up = GridPoint::new(p.i - 1, p.j);
        if let Some(want) = fam.member(up) {
            let got = seqs.col(p.j).and_then(|e| d.sub_serre(e, x));
            s2.iso(p, up, iso_or_reason(fam, got, want));
        }
        let diag = GridPoint::new(p.i - 1, p.j - 1);
        if let Some(want) = fam.member(diag) {
            let got = seqs.full().and_then(|e| d.sub_serre(e, x));
            s3.iso(p, diag, iso_or_reason(fam, got, want));
        }
    }
    report.results.extend([s1.done(), s2.done(), s3.done()]);
    report
}

/// (S1') and (S2'): left projections onto a neighbouring column or row.
pub fn check_prime_conditions<F: Field>(fam: &SFamily<F>) -> AxiomReport {
    let mut report = check_weak(fam);
    if !report.passed() {
        report.extend(skipped(&[Axiom::S1Prime, Axiom::S2Prime], "weak family axioms fail"));
        return report;
    }
    let d = fam.derived();
    let mut seqs = Sequences::new(fam);
    let (mut s1, mut s2) = (Tally::new(Axiom::S1Prime), Tally::new(Axiom::S2Prime));
    for p in fam.support().iter() {
        let x = fam.get(p);
        let left = GridPoint::new(p.i, p.j - 1);
        if let Some(want) = fam.member(left) {
            let got = seqs.col(p.j - 1).and_then(|e| d.project_left(e, x));
            s1.iso(p, left, iso_or_reason(fam, got, want));
        }
        let up = GridPoint::new(p.i - 1, p.j);
        if let Some(want) = fam.member(up) {
            let got = seqs.row(p.i - 1).and_then(|e| d.project_left(e, x));
            s2.iso(p, up, iso_or_reason(fam, got, want));
        }
    }
    report.results.extend([s1.done(), s2.done()]);
    report
}

/// The Young diagram criterion: (L1) together with (Y1)-(Y4). (Y1) includes
/// fullness.
pub fn check_y<F: Field>(fam: &SFamily<F>) -> Result<AxiomReport, Error> {
    let (Some(r0), Some(c0)) = (fam.support().min_row(), fam.support().min_col()) else {
        return Err(Error::Precondition("empty family".into()));
    };
    if !fam.support().is_young() {
        return Err(Error::Precondition("support is not a Young diagram".into()));
    }
    let fam = &fam.translate(GridPoint::new(1 - r0, 1 - c0));
    let d = fam.derived();
    let mut report = AxiomReport { results: alloc::vec![l1(fam)] };
    let n_rows = fam.support().max_row().unwrap_or(0);

    let mut y1 = Tally::new(Axiom::Y1);
    for (&a, xa) in fam.members() {
        for (&b, xb) in fam.members() {
            if a.i < b.i {
                let h = d.hom_dims(xa, xb);
                y1.record(h.is_empty(), || witness(a, Some(b), h.keys().next().copied(), format!("Hom = {h:?} from an upper to a lower row")));
            }
        }
    }
    match fam.is_full() {
        Ok(full) => y1.record(full, || witness(GridPoint::new(1, 1), None, None, "the family does not generate")),
        Err(e) => y1.fail(witness(GridPoint::new(1, 1), None, None, e.to_string())),
    }
    report.results.push(y1.done());

    let mut y2 = Tally::new(Axiom::Y2);
    let first = fam.row(1);
    for (a, &pa) in first.iter().enumerate() {
        for &pb in &first[a + 1..] {
            let h = d.hom_dims(fam.get(pa), fam.get(pb));
            y2.record(h.is_empty(), || witness(pa, Some(pb), h.keys().next().copied(), format!("Hom = {h:?} along the first row")));
        }
    }
    report.results.push(y2.done());

    let mut seqs = Sequences::new(fam);
    let mut y3 = Tally::new(Axiom::Y3);
    for &p in first.iter().skip(1) {
        let want = fam.get(GridPoint::new(1, p.j - 1));
        let got = seqs.row(1).and_then(|e| d.sub_serre(e, fam.get(p)));
        y3.iso(p, GridPoint::new(1, p.j - 1), iso_or_reason(fam, got, want));
    }
    report.results.push(y3.done());

    let mut y4 = Tally::new(Axiom::Y4);
    for i in 2..=n_rows {
        for p in fam.row(i) {
            let above = GridPoint::new(i - 1, p.j);
            let lhs = d.serre(fam.get(p));
            let rhs = seqs.row(i - 1).and_then(|e| d.sub_serre(e, fam.get(above)));
            y4.iso(p, above, iso_or_reason(fam, rhs, &lhs));
        }
    }
    report.results.push(y4.done());
    Ok(report)
}

/// `pattern[a][b] = dim Hom(X_b, X_a)` in the canonical order of the support,
/// which is the convention of [`cartan_lattice`].
pub fn end_algebra_pattern<F: Field>(fam: &SFamily<F>) -> IntMatrix {
    let pts = fam.support().to_vec();
    let n = pts.len();
    let mut m = IntMatrix::zeros(n, n);
    for (a, &pa) in pts.iter().enumerate() {
        for (b, &pb) in pts.iter().enumerate() {
            let h = fam.derived().hom_dims(fam.get(pb), fam.get(pa));
            m.set(a, b, h.get(&0).copied().unwrap_or(0) as i128);
        }
    }
    m.with_labels(pts.iter().map(|p| format!("{p}")).collect())
}

/// The members form a pretilting object whose endomorphism algebra is
/// `L(S)`: the Hom pattern is that of `L(S)`, every nonzero Hom space is
/// one-dimensional and concentrated in degree 0, and every composite that
/// stays inside a square is nonzero. Nonzero structure constants can then be
/// rescaled to 1.
pub fn end_is_lattice<F: Field>(fam: &SFamily<F>) -> bool {
    let d = fam.derived();
    let pts = fam.support().to_vec();
    let expected = cartan_lattice(fam.support());
    let mut maps = BTreeMap::new();
    for (a, &pa) in pts.iter().enumerate() {
        for (b, &pb) in pts.iter().enumerate() {
            let h = d.hom_dims(fam.get(pa), fam.get(pb));
            if h.keys().any(|&n| n != 0) {
                return false;
            }
            let dim = h.get(&0).copied().unwrap_or(0) as i128;
            if dim != expected.get(b, a) {
                return false;
            }
            if dim == 1 {
                let basis = d.hom_basis(fam.get(pa), fam.get(pb), 0);
                maps.insert((pa, pb), basis.into_iter().next().expect("one-dimensional Hom space"));
            }
        }
    }
    for (&(pa, pb), f) in &maps {
        for (&(pb2, pc), g) in &maps {
            if pb2 != pb || pa == pb || pb == pc || !maps.contains_key(&(pa, pc)) {
                continue;
            }
            let (xa, xb, xc) = (fam.get(pa), fam.get(pb), fam.get(pc));
            let gf = d.compose(f, g, xa, xb, xc);
            if d.is_null_homotopic(xa, xc, &gf, 0) {
                return false;
            }
        }
    }
    true
}
