//! JSON shapes for everything the CLI reads or writes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use dereq_core::algebra::{lattice_algebra, lattice_shriek, nakayama, nn, Algebra};
use dereq_core::error::Error;
use dereq_core::families::{AxiomReport, Outcome, SFamily};
use dereq_core::homalg::{Derived, ProjComplex};
use dereq_core::intmat::{IntMatrix, IntPolynomial};
use dereq_core::invariants::Certificate;
use dereq_core::lattice::{CompositionPair, GridPoint, LatticeSet};
use dereq_core::Field;

/// Enough to rebuild an algebra deterministically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraSpec {
    Nakayama { n: usize, l: usize },
    Lattice { points: Vec<[i64; 2]> },
    Shriek { p: Vec<i64>, q: Vec<i64> },
    Nn { lo: i64, hi: i64 },
}

impl AlgebraSpec {
    pub fn lattice(s: &LatticeSet) -> Self {
        AlgebraSpec::Lattice { points: points(s) }
    }

    pub fn build<F: Field>(&self) -> Result<Algebra<F>, Error> {
        match self {
            AlgebraSpec::Nakayama { n, l } => nakayama(*n, *l),
            AlgebraSpec::Lattice { points } => lattice_algebra(&to_set(points)),
            AlgebraSpec::Shriek { p, q } => Ok(lattice_shriek(&CompositionPair::new(p.clone(), q.clone())?)),
            AlgebraSpec::Nn { lo, hi } => nn(*lo, *hi),
        }
    }
}

pub fn points(s: &LatticeSet) -> Vec<[i64; 2]> {
    s.iter().map(|p| [p.i, p.j]).collect()
}

pub fn to_set(points: &[[i64; 2]]) -> LatticeSet {
    points.iter().map(|&[i, j]| GridPoint::new(i, j)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub points: Vec<[i64; 2]>,
}

impl LatticeJson {
    pub fn new(s: &LatticeSet) -> Self {
        LatticeJson { points: points(s) }
    }

    pub fn set(&self) -> LatticeSet {
        to_set(&self.points)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<i128>>,
}

impl MatrixJson {
    pub fn new(m: &IntMatrix) -> Self {
        MatrixJson { labels: m.labels().to_vec(), entries: m.entries() }
    }

    pub fn matrix(&self) -> IntMatrix {
        let m = IntMatrix::from_rows(&self.entries);
        if self.labels.is_empty() {
            m
        } else {
            m.with_labels(self.labels.clone())
        }
    }
}

/// Coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub algebra: String,
    pub coefficients: Vec<i128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub left: String,
    pub right: String,
    pub dim_left: usize,
    pub dim_right: usize,
    pub det_left: i128,
    pub det_right: i128,
    pub coxeter_left: Vec<i128>,
    pub coxeter_right: Vec<i128>,
    pub verdict: String,
}

fn coeffs(p: &Option<IntPolynomial>) -> Vec<i128> {
    p.as_ref().map(|p| p.coeffs().to_vec()).unwrap_or_default()
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            left: c.left.clone(),
            right: c.right.clone(),
            dim_left: c.dim_left,
            dim_right: c.dim_right,
            det_left: c.det_left,
            det_right: c.det_right,
            coxeter_left: coeffs(&c.coxeter_left),
            coxeter_right: coeffs(&c.coxeter_right),
            verdict: c.verdict.as_str().into(),
        }
    }
}

/// One matrix entry: basis indices of the algebra with their coefficients.
pub type EntryJson = Vec<(usize, String)>;

/// A complex of projectives: summand vertices per degree and the
/// differential leaving each degree, `[row][col]` as in the library.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub algebra: String,
    pub degrees: BTreeMap<i32, Vec<usize>>,
    pub differentials: BTreeMap<i32, Vec<Vec<EntryJson>>>,
}

impl ComplexJson {
    pub fn new<F: Field>(alg: &Algebra<F>, x: &ProjComplex<F>) -> Self {
        let mut degrees = BTreeMap::new();
        let mut differentials = BTreeMap::new();
        if !x.is_zero() {
            for k in x.lo()..=x.hi() {
                degrees.insert(k, x.term(k).to_vec());
                if let Some(d) = x.diff(k) {
                    let m = d.iter().map(|row| row.iter().map(|e| e.iter().map(|(b, c)| (*b, c.to_string())).collect()).collect()).collect();
                    differentials.insert(k, m);
                }
            }
        }
        ComplexJson { algebra: alg.name().into(), degrees, differentials }
    }

    pub fn complex<F: Field>(&self, alg: &Algebra<F>) -> Result<ProjComplex<F>, Error> {
        if self.algebra != alg.name() {
            return Err(Error::Precondition(format!("complex is over {}, not {}", self.algebra, alg.name())));
        }
        let (Some(&lo), Some(&hi)) = (self.degrees.keys().next(), self.degrees.keys().next_back()) else {
            return Ok(ProjComplex::zero());
        };
        let terms: Vec<Vec<usize>> = (lo..=hi).map(|k| self.degrees.get(&k).cloned().unwrap_or_default()).collect();
        let mut diffs = Vec::new();
        for k in lo..hi {
            let rows = terms[(k - lo + 1) as usize].len();
            let cols = terms[(k - lo) as usize].len();
            let m = match self.differentials.get(&k) {
                Some(m) => m
                    .iter()
                    .map(|row| row.iter().map(|e| e.iter().map(|(b, c)| Ok((*b, parse_scalar::<F>(c)?))).collect::<Result<Vec<_>, Error>>()).collect())
                    .collect::<Result<Vec<Vec<_>>, Error>>()?,
                None => vec![vec![Vec::new(); cols]; rows],
            };
            diffs.push(m);
        }
        ProjComplex::new(alg, lo, terms, diffs)
    }
}

/// Reads `a` or `a/b`.
pub fn parse_scalar<F: Field>(s: &str) -> Result<F, Error> {
    let bad = || Error::Precondition(format!("bad scalar {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse::<i64>().map_err(|_| bad())?, b.trim().parse::<i64>().map_err(|_| bad())?),
        None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
    };
    let den = F::from_i64(den);
    if den.is_zero() {
        return Err(bad());
    }
    Ok(F::from_i64(num) * den.inv())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub algebra: AlgebraSpec,
    pub field: String,
    pub support: Vec<[i64; 2]>,
    /// Keyed by `"i,j"`.
    pub members: BTreeMap<String, ComplexJson>,
}

impl FamilyJson {
    pub fn new<F: Field>(spec: AlgebraSpec, fam: &SFamily<F>) -> Self {
        let alg = fam.derived().algebra();
        let members = fam.members().iter().map(|(p, x)| (format!("{},{}", p.i, p.j), ComplexJson::new(alg, x))).collect();
        FamilyJson { algebra: spec, field: F::name(), support: points(fam.support()), members }
    }

    pub fn family<F: Field>(&self) -> Result<SFamily<F>, Error> {
        if self.field != F::name() {
            return Err(Error::Precondition(format!("family was written over {}, reading over {}", self.field, F::name())));
        }
        let d = Derived::new(self.algebra.build::<F>()?)?;
        let mut members = BTreeMap::new();
        for (key, c) in &self.members {
            let p = parse_point(key)?;
            members.insert(p, c.complex(d.algebra())?);
        }
        let fam = SFamily::new(std::sync::Arc::new(d), members);
        if points(fam.support()) != to_set(&self.support).iter().map(|p| [p.i, p.j]).collect::<Vec<_>>() {
            return Err(Error::Precondition("support does not match the member keys".into()));
        }
        Ok(fam)
    }
}

pub fn parse_point(key: &str) -> Result<GridPoint, Error> {
    let bad = || Error::Precondition(format!("bad point {key:?}, expected \"i,j\""));
    let (i, j) = key.split_once(',').ok_or_else(bad)?;
    Ok(GridPoint::new(i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub at: [i64; 2],
    pub other: Option<[i64; 2]>,
    pub shift: Option<i32>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomJson {
    pub axiom: String,
    pub checked: usize,
    pub outcome: String,
    pub witness: Option<WitnessJson>,
    pub reason: Option<String>,
}

pub fn axioms(report: &AxiomReport) -> Vec<AxiomJson> {
    report
        .results
        .iter()
        .map(|r| {
            let (outcome, witness, reason) = match &r.outcome {
                Outcome::Pass => ("pass", None, None),
                Outcome::Fail(w) => (
                    "fail",
                    Some(WitnessJson { at: [w.at.i, w.at.j], other: w.other.map(|p| [p.i, p.j]), shift: w.shift, detail: w.detail.clone() }),
                    None,
                ),
                Outcome::Skipped(why) => ("skipped", None, Some(why.clone())),
            };
            AxiomJson { axiom: r.axiom.label().into(), checked: r.checked, outcome: outcome.into(), witness, reason }
        })
        .collect()
}
