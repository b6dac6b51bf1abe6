//! Mutations of families: row-wise Serre twists that shear the support by
//! `σ` (rows) or `ρ` (columns).
//!
//! Each mutation re-checks the full family axioms on its output and fails
//! with [`Error::Verification`] if they do not hold.

use alloc::collections::BTreeMap;
use alloc::format;

use super::{check_family, SFamily};
use crate::error::Error;
use crate::field::Field;
use crate::homalg::{ExcSeq, ProjComplex};
use crate::lattice::{is_m_minus, is_m_plus, GridPoint, LatticeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Axis {
    Rows,
    Cols,
}

impl Axis {
    /// Index of the line (row or column) through `p`.
    fn line(self, p: GridPoint) -> i64 {
        match self {
            Axis::Rows => p.i,
            Axis::Cols => p.j,
        }
    }

    /// `p` moved `by` places towards the start of its line.
    fn back(self, p: GridPoint, by: i64) -> GridPoint {
        match self {
            Axis::Rows => GridPoint::new(p.i, p.j - by),
            Axis::Cols => GridPoint::new(p.i - by, p.j),
        }
    }

    /// The support seen with lines as rows.
    fn view(self, s: &LatticeSet) -> LatticeSet {
        match self {
            Axis::Rows => s.clone(),
            Axis::Cols => s.transpose(),
        }
    }

    fn sequence<F: Field>(self, fam: &SFamily<F>, k: i64) -> Result<ExcSeq<F>, Error> {
        match self {
            Axis::Rows => fam.row_sequence(k),
            Axis::Cols => fam.col_sequence(k),
        }
    }
}

/// Serre functor of a line's subcategory raised to `power`.
struct LineSerre<'a, F> {
    fam: &'a SFamily<F>,
    axis: Axis,
    seqs: BTreeMap<i64, ExcSeq<F>>,
}

impl<'a, F: Field> LineSerre<'a, F> {
    fn new(fam: &'a SFamily<F>, axis: Axis) -> Self {
        LineSerre { fam, axis, seqs: BTreeMap::new() }
    }

    fn apply(&mut self, line: i64, x: &ProjComplex<F>, power: i64) -> Result<ProjComplex<F>, Error> {
        if !self.seqs.contains_key(&line) {
            let seq = self.axis.sequence(self.fam, line)?;
            self.seqs.insert(line, seq);
        }
        let seq = &self.seqs[&line];
        let d = self.fam.derived();
        let mut cur = x.clone();
        for _ in 0..power.unsigned_abs() {
            cur = if power > 0 { d.sub_serre(seq, &cur)? } else { d.sub_serre_inverse(seq, &cur)? };
        }
        Ok(cur)
    }
}

fn verified<F: Field>(fam: SFamily<F>, what: &str) -> Result<SFamily<F>, Error> {
    let report = check_family(&fam);
    match report.first_failure() {
        None => Ok(fam),
        Some(r) => Err(Error::Verification(format!("{what}: output fails {} ({:?})", r.axiom.label(), r.outcome))),
    }
}

fn mutate_one<F: Field>(fam: &SFamily<F>, k: i64, axis: Axis, inverse: bool) -> Result<SFamily<F>, Error> {
    let view = axis.view(fam.support());
    let Some(m) = view.min_row() else { return Ok(fam.clone()) };
    if k < m {
        return Ok(fam.clone());
    }
    // rows of the view start at 0, as in the statement of the mutation
    let norm = view.translate(GridPoint::new(-m, 0));
    let (ok, kind) = if inverse { (is_m_minus(&norm, k - m), "M-") } else { (is_m_plus(&norm, k - m), "M+") };
    if !ok {
        return Err(Error::Precondition(format!("support is not an {kind}_{} subset after moving its first line to 0", k - m)));
    }
    let (power, by) = if inverse { (-1, -1) } else { (1, 1) };
    let mut serre = LineSerre::new(fam, axis);
    let mut members = BTreeMap::new();
    for (&p, x) in fam.members() {
        let line = axis.line(p);
        if line <= k {
            members.insert(axis.back(p, by), serre.apply(line, x, power)?);
        } else {
            members.insert(p, x.clone());
        }
    }
    verified(SFamily::new(fam.shared_derived(), members), "mutation I")
}

fn mutate_two<F: Field>(fam: &SFamily<F>, k: i64, h: i64, axis: Axis, inverse: bool) -> Result<SFamily<F>, Error> {
    if k <= 0 || h <= 0 || k % (h + 1) != 0 {
        return Err(Error::Precondition(format!("need k, h > 0 with h+1 dividing k, got k={k}, h={h}")));
    }
    let s = (h - 1) * k / (h + 1);
    // how far a point on line `i` moves under σ_{≤0} ⋯ σ_{≤k-1}
    let travel = |i: i64| if i < 0 { k } else if i < k { k - i } else { 0 };
    let sign = if inverse { -1 } else { 1 };
    let view = axis.view(fam.support());
    let source: LatticeSet = if inverse {
        view.map(|p| GridPoint::new(p.i, p.j + travel(p.i)))
    } else {
        view
    };
    let row0 = source.row(0);
    if row0.len() as i64 != h || (1..k).any(|i| source.row(i) != row0) || !is_m_plus(&source, k - 1) {
        return Err(Error::Precondition(format!("support does not satisfy the hypotheses of mutation II for k={k}, h={h}")));
    }
    let mut serre = LineSerre::new(fam, axis);
    let mut members = BTreeMap::new();
    for (&p, x) in fam.members() {
        let i = axis.line(p);
        let t = travel(i);
        let y = if i < 0 {
            x.shift((sign * s) as i32)
        } else if i < k {
            serre.apply(i, x, sign * t)?
        } else {
            x.clone()
        };
        members.insert(axis.back(p, sign * t), y);
    }
    verified(SFamily::new(fam.shared_derived(), members), "mutation II")
}

/// `X'_{i,j} = S_{⟨X_i⟩}(X_{i,j+1})` for `i ≤ k` on `σ_{≤k}(S)`.
pub fn mutate_i<F: Field>(fam: &SFamily<F>, k: i64) -> Result<SFamily<F>, Error> {
    mutate_one(fam, k, Axis::Rows, false)
}

/// `Y'_{i,j} = S^{-1}_{⟨Y_i⟩}(Y_{i,j-1})` for `i ≤ k` on `σ^{-1}_{≤k}(S')`.
pub fn mutate_i_inv<F: Field>(fam: &SFamily<F>, k: i64) -> Result<SFamily<F>, Error> {
    mutate_one(fam, k, Axis::Rows, true)
}

/// Column version of [`mutate_i`], shearing by `ρ_{≤k}`.
pub fn mutate_i_t<F: Field>(fam: &SFamily<F>, k: i64) -> Result<SFamily<F>, Error> {
    mutate_one(fam, k, Axis::Cols, false)
}

pub fn mutate_i_t_inv<F: Field>(fam: &SFamily<F>, k: i64) -> Result<SFamily<F>, Error> {
    mutate_one(fam, k, Axis::Cols, true)
}

/// Shears rows `0..k` by `σ_{≤0} ⋯ σ_{≤k-1}`: row `i` in `[0, k)` is twisted
/// by the `(k-i)`-th power of its Serre functor, rows below 0 are shifted by
/// `s = (h-1)k/(h+1)`.
pub fn mutate_ii<F: Field>(fam: &SFamily<F>, k: i64, h: i64) -> Result<SFamily<F>, Error> {
    mutate_two(fam, k, h, Axis::Rows, false)
}

pub fn mutate_ii_inv<F: Field>(fam: &SFamily<F>, k: i64, h: i64) -> Result<SFamily<F>, Error> {
    mutate_two(fam, k, h, Axis::Rows, true)
}

/// Column version of [`mutate_ii`], shearing by `ρ_{≤0} ⋯ ρ_{≤k-1}`.
pub fn mutate_ii_t<F: Field>(fam: &SFamily<F>, k: i64, h: i64) -> Result<SFamily<F>, Error> {
    mutate_two(fam, k, h, Axis::Cols, false)
}

pub fn mutate_ii_t_inv<F: Field>(fam: &SFamily<F>, k: i64, h: i64) -> Result<SFamily<F>, Error> {
    mutate_two(fam, k, h, Axis::Cols, true)
}
