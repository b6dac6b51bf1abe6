//! Families of exceptional objects indexed by finite subsets of Z^2.
//!
//! A family `(X_p)_{p ∈ S}` lives in the perfect derived category of one
//! directed algebra. Hom spaces only go from a point to the points of its
//! square `S_{i,j} = ([i-1,i] × [j-1,j]) ∩ S`, so rows ordered by increasing
//! column, columns ordered by increasing row and the whole support in
//! lexicographic order are exceptional sequences in the sense of
//! [`Derived::exceptional_sequence`].

mod build;
mod chains;
mod check;
mod mutation;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

pub use build::{duality_family, lad_family, lad_family_prime, nak_family, trivial_family};
pub use chains::{main1_transform, main3_transform, ChainStep, LatticeChain, Move, StepKind};
pub use check::{check_family, check_prime_conditions, check_weak, check_y, end_algebra_pattern, end_is_lattice};
pub use mutation::{mutate_i, mutate_i_inv, mutate_i_t, mutate_i_t_inv, mutate_ii, mutate_ii_inv, mutate_ii_t, mutate_ii_t_inv};

use crate::error::Error;
use crate::field::Field;
use crate::homalg::{Derived, ExcSeq, ProjComplex};
use crate::lattice::{GridPoint, LatticeSet};

/// A family of complexes over one algebra, indexed by its support.
#[derive(Clone, Debug)]
pub struct SFamily<F> {
    support: LatticeSet,
    derived: Arc<Derived<F>>,
    members: BTreeMap<GridPoint, ProjComplex<F>>,
}

impl<F: Field> SFamily<F> {
    /// The support is the key set of `members`. Members are minimized.
    pub fn new(derived: Arc<Derived<F>>, members: BTreeMap<GridPoint, ProjComplex<F>>) -> Self {
        let members: BTreeMap<GridPoint, ProjComplex<F>> = members.into_iter().map(|(p, x)| (p, derived.minimize(&x))).collect();
        let support = members.keys().copied().collect();
        SFamily { support, derived, members }
    }

    pub fn support(&self) -> &LatticeSet {
        &self.support
    }

    pub fn derived(&self) -> &Derived<F> {
        &self.derived
    }

    pub fn shared_derived(&self) -> Arc<Derived<F>> {
        self.derived.clone()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member(&self, p: GridPoint) -> Option<&ProjComplex<F>> {
        self.members.get(&p)
    }

    pub fn members(&self) -> &BTreeMap<GridPoint, ProjComplex<F>> {
        &self.members
    }

    fn get(&self, p: GridPoint) -> &ProjComplex<F> {
        &self.members[&p]
    }

    /// Points of row `i`, by increasing column.
    pub fn row(&self, i: i64) -> Vec<GridPoint> {
        self.support.row(i).into_iter().map(|j| GridPoint::new(i, j)).collect()
    }

    /// Points of column `j`, by increasing row.
    pub fn col(&self, j: i64) -> Vec<GridPoint> {
        self.support.col(j).into_iter().map(|i| GridPoint::new(i, j)).collect()
    }

    /// Restriction to `t ⊂ S`.
    pub fn subfamily(&self, t: &LatticeSet) -> Result<Self, Error> {
        if let Some(p) = t.iter().find(|p| !self.support.contains(*p)) {
            return Err(Error::Precondition(format!("{p} is not in the support")));
        }
        Ok(self.restrict(|p| t.contains(p)))
    }

    pub fn restrict(&self, mut keep: impl FnMut(GridPoint) -> bool) -> Self {
        let members: BTreeMap<_, _> = self.members.iter().filter(|(p, _)| keep(**p)).map(|(p, x)| (*p, x.clone())).collect();
        SFamily { support: members.keys().copied().collect(), derived: self.derived.clone(), members }
    }

    pub fn rows_le(&self, k: i64) -> Self {
        self.restrict(|p| p.i <= k)
    }

    pub fn rows_ge(&self, k: i64) -> Self {
        self.restrict(|p| p.i >= k)
    }

    pub fn cols_le(&self, k: i64) -> Self {
        self.restrict(|p| p.j <= k)
    }

    pub fn cols_ge(&self, k: i64) -> Self {
        self.restrict(|p| p.j >= k)
    }

    /// Same members indexed by the transposed support.
    pub fn transpose(&self) -> Self {
        self.reindex(|p| GridPoint::new(p.j, p.i))
    }

    pub fn translate(&self, v: GridPoint) -> Self {
        self.reindex(|p| GridPoint::new(p.i + v.i, p.j + v.j))
    }

    /// Moves every member along an injective map of indices.
    pub(crate) fn reindex(&self, f: impl Fn(GridPoint) -> GridPoint) -> Self {
        let members: BTreeMap<_, _> = self.members.iter().map(|(p, x)| (f(*p), x.clone())).collect();
        assert_eq!(members.len(), self.members.len(), "reindexing must be injective");
        SFamily { support: members.keys().copied().collect(), derived: self.derived.clone(), members }
    }

    /// Copy with the member at `p` replaced.
    pub fn with_member(&self, p: GridPoint, x: ProjComplex<F>) -> Result<Self, Error> {
        if !self.support.contains(p) {
            return Err(Error::Precondition(format!("{p} is not in the support")));
        }
        let mut out = self.clone();
        out.members.insert(p, self.derived.minimize(&x));
        Ok(out)
    }

    /// The members at `pts` as an exceptional sequence, in the given order
    /// when that works and otherwise in an order compatible with the
    /// nonvanishing Hom spaces.
    pub fn sequence(&self, pts: &[GridPoint]) -> Result<ExcSeq<F>, Error> {
        let objs: Vec<ProjComplex<F>> = pts.iter().map(|p| self.get(*p).clone()).collect();
        exceptional_in_some_order(&self.derived, objs)
    }

    pub fn row_sequence(&self, i: i64) -> Result<ExcSeq<F>, Error> {
        self.sequence(&self.row(i))
    }

    pub fn col_sequence(&self, j: i64) -> Result<ExcSeq<F>, Error> {
        self.sequence(&self.col(j))
    }

    pub fn full_sequence(&self) -> Result<ExcSeq<F>, Error> {
        self.sequence(&self.support.to_vec())
    }

    /// `⟨X_S⟩` is the whole perfect derived category: every indecomposable
    /// projective lies in it.
    pub fn is_full(&self) -> Result<bool, Error> {
        let seq = self.full_sequence()?;
        Ok((0..self.derived.num_vertices()).all(|v| self.derived.in_subcategory(&seq, &self.derived.stalk_projective(v))))
    }

    /// Minimal total size of the members, a rough cost measure.
    pub fn total_size(&self) -> usize {
        self.members.values().map(|x| x.size()).sum()
    }
}

/// Tries `objs` as given, then a topological order of the relation
/// "`Hom(E, E'[*]) ≠ 0` puts `E'` first".
pub(crate) fn exceptional_in_some_order<F: Field>(d: &Derived<F>, objs: Vec<ProjComplex<F>>) -> Result<ExcSeq<F>, Error> {
    let first = match d.exceptional_sequence(objs.clone()) {
        Ok(seq) => return Ok(seq),
        Err(e) => e,
    };
    let n = objs.len();
    // before[a] = objects that must precede a
    let mut before: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            if a != b && !d.hom_dims(&objs[a], &objs[b]).is_empty() {
                before[a].push(b);
            }
        }
    }
    let mut placed = alloc::vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let Some(a) = (0..n).find(|&a| !placed[a] && before[a].iter().all(|&b| placed[b])) else {
            return Err(first);
        };
        placed[a] = true;
        order.push(a);
    }
    d.exceptional_sequence(order.into_iter().map(|a| objs[a].clone()).collect())
}

/// Which axiom a check refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    L1,
    L2Rows,
    L2Cols,
    S1,
    S2,
    S3,
    S1Prime,
    S2Prime,
    Y1,
    Y2,
    Y3,
    Y4,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::L1 => "L1",
            Axiom::L2Rows => "L2.1",
            Axiom::L2Cols => "L2.2",
            Axiom::S1 => "S1",
            Axiom::S2 => "S2",
            Axiom::S3 => "S3",
            Axiom::S1Prime => "S1'",
            Axiom::S2Prime => "S2'",
            Axiom::Y1 => "Y1",
            Axiom::Y2 => "Y2",
            Axiom::Y3 => "Y3",
            Axiom::Y4 => "Y4",
        }
    }
}

/// First failing instance of an axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub at: GridPoint,
    pub other: Option<GridPoint>,
    pub shift: Option<i32>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Witness),
    /// Not evaluated because a prerequisite failed.
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    /// Number of instances examined.
    pub checked: usize,
    pub outcome: Outcome,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    /// True iff every listed axiom passed (skipped counts as not passed).
    pub fn passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.results.iter().find(|r| !r.passed())
    }

    fn extend(&mut self, other: AxiomReport) {
        self.results.extend(other.results);
    }
}
