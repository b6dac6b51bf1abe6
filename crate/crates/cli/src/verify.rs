use std::path::PathBuf;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use dereq_core::algebra::{cartan_lattice, lattice_algebra, nakayama, Algebra};
use dereq_core::error::Error;
use dereq_core::families::*;
use dereq_core::homalg::{Derived, ProjComplex};
use dereq_core::invariants::{certify_pair, euler_form_projective, Certificate};
use dereq_core::lattice::{young_pq, young_pqr, CompositionPair, LatticeSet};
use dereq_core::Field;

use crate::model::{axioms, points, AxiomJson, CertificateJson, FamilyJson, LatticeJson};
use crate::{read_json, Cli, Format, MutationArgs, MutationOp, ShapeArgs, SupportArgs, VerifyKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    AxiomFailure,
    Refuted,
    Precondition,
    Internal,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Internal => 1,
            Status::AxiomFailure => 2,
            Status::Refuted => 3,
            Status::Precondition => 4,
        }
    }

    pub fn from_code(code: i32) -> Self {
        match code {
            0 => Status::Pass,
            2 => Status::AxiomFailure,
            3 => Status::Refuted,
            4 => Status::Precondition,
            _ => Status::Internal,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::AxiomFailure => "axiom-failure",
            Status::Refuted => "refuted",
            Status::Precondition => "precondition",
            Status::Internal => "internal",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Invariant comparisons fail as "refuted", everything else as an
    /// axiom failure.
    pub certificate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepJson {
    pub label: String,
    pub block: bool,
    pub verdict: bool,
    pub after: Vec<[i64; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainJson {
    pub start: Vec<[i64; 2]>,
    pub end: Vec<[i64; 2]>,
    pub target: Vec<[i64; 2]>,
    pub steps: Vec<StepJson>,
}

impl From<&LatticeChain> for ChainJson {
    fn from(c: &LatticeChain) -> Self {
        ChainJson {
            start: points(&c.start),
            end: points(&c.end),
            target: points(&c.target),
            steps: c
                .steps
                .iter()
                .map(|s| StepJson { label: s.label(), block: matches!(s.kind, StepKind::Block { .. }), verdict: s.verdict, after: points(&s.after) })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub certificates: Vec<CertificateJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub axioms: Vec<AxiomJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainJson>,
}

impl Report {
    fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), status: Status::Pass, passed: true, checks: Vec::new(), certificates: Vec::new(), axioms: Vec::new(), chain: None }
    }

    fn check(&mut self, name: &str, passed: bool, detail: Option<String>) {
        self.checks.push(Check { name: name.into(), passed, certificate: false, detail });
    }

    fn invariant(&mut self, name: &str, passed: bool) {
        self.checks.push(Check { name: name.into(), passed, certificate: true, detail: None });
    }

    fn axioms(&mut self, name: &str, report: &AxiomReport) {
        let detail = report.first_failure().map(|r| format!("{}: {:?}", r.axiom.label(), r.outcome));
        self.check(name, report.passed(), detail);
        self.axioms.extend(axioms(report));
    }

    fn cert(&mut self, c: &Certificate) {
        self.certificates.push(c.into());
    }

    fn finish(mut self) -> Self {
        self.status = if self.checks.iter().any(|c| !c.passed && !c.certificate) {
            Status::AxiomFailure
        } else if self.checks.iter().any(|c| !c.passed) || self.certificates.iter().any(|c| c.verdict != "consistent") {
            Status::Refuted
        } else {
            Status::Pass
        };
        self.passed = self.status == Status::Pass;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json | Format::Csv => serde_json::to_string_pretty(self).expect("serializable"),
            Format::Text => {
                let mut s = format!("{}: {}\n", self.command, self.status.as_str());
                for c in &self.checks {
                    let mark = if c.passed { "ok" } else { "FAIL" };
                    s += &format!("  [{mark}] {}", c.name);
                    if let Some(d) = &c.detail {
                        s += &format!(" ({d})");
                    }
                    s.push('\n');
                }
                for c in &self.certificates {
                    s += &format!("  certificate {} vs {}: {}\n", c.left, c.right, c.verdict);
                }
                if let Some(chain) = &self.chain {
                    for st in &chain.steps {
                        s += &format!("  step {} {}\n", if st.verdict { "ok" } else { "FAIL" }, st.label);
                    }
                }
                s
            }
        }
    }
}

fn cap<F: Field>(cli: &Cli, a: &Algebra<F>) -> Result<(), Error> {
    if a.dim() > cli.max_dim {
        return Err(Error::Precondition(format!("{} has dimension {} above --max-dim {}", a.name(), a.dim(), cli.max_dim)));
    }
    Ok(())
}

/// `Y(s,t,u)` as a composition pair.
pub(crate) fn young_pair(s: i64, t: i64, u: i64) -> Result<CompositionPair, Error> {
    if s < 1 || u < 0 || u > t || (s == 1 && u == t) {
        return Err(Error::Precondition(format!("Y({s},{t},{u}) is not a nonempty Young diagram")));
    }
    if u == 0 {
        CompositionPair::new(vec![s], vec![t])
    } else if u == t {
        CompositionPair::new(vec![s - 1], vec![t])
    } else if s == 1 {
        CompositionPair::new(vec![1], vec![t - u])
    } else {
        CompositionPair::new(vec![s - 1, 1], vec![t - u, u])
    }
}

pub(crate) fn shape(a: &ShapeArgs) -> Result<CompositionPair, Error> {
    match (a.s, a.t, a.u) {
        (Some(s), Some(t), u) if a.p.is_empty() && a.q.is_empty() => young_pair(s, t, u.unwrap_or(0)),
        (None, None, None) => CompositionPair::new(a.p.clone(), a.q.clone()),
        _ => Err(Error::Precondition("give either --p/--q compositions or --s --t [--u]".into())),
    }
}

pub(crate) fn support(a: &SupportArgs) -> Result<LatticeSet, Error> {
    match (&a.young[..], &a.lattice_file) {
        (&[s, t, u], None) => young_pqr(s, t, u),
        (&[], Some(path)) => Ok(read_json::<LatticeJson>(path)?.set()),
        _ => Err(Error::Precondition("give exactly one of --young s,t,u or --lattice-file".into())),
    }
}

pub(crate) fn run<F: Field>(cli: &Cli, kind: &VerifyKind) -> Result<Report, Error> {
    Ok(match kind {
        VerifyKind::Duality(a) => duality::<F>(cli, &shape(a)?)?,
        VerifyKind::Nak { p, q, r } => nak::<F>(cli, *p, *q, *r)?,
        VerifyKind::Main1 { s, t, u } => main1::<F>(cli, *s, *t, *u)?,
        VerifyKind::Main3 { p, q } => main3::<F>(cli, *p, *q)?,
        VerifyKind::Mutation(a) => mutation::<F>(cli, a)?,
        VerifyKind::Pair { n, l, l2 } => {
            let mut r = Report::new(format!("verify pair N({n},{l}) N({n},{l2})"));
            let (a, b) = (nakayama::<F>(*n, *l)?, nakayama::<F>(*n, *l2)?);
            cap(cli, &a)?;
            cap(cli, &b)?;
            r.cert(&certify_pair(&a, &b)?);
            r.finish()
        }
        VerifyKind::Homalg { count, nmax } => homalg::<F>(cli.seed, *count, *nmax)?,
    })
}

fn family_checks<F: Field>(r: &mut Report, f: &SFamily<F>) -> Result<(), Error> {
    r.axioms("family axioms", &check_family(f));
    if f.support().is_young() {
        r.axioms("Young diagram axioms", &check_y(f)?);
    }
    r.check("End algebra is L(S), no shifted Homs", end_is_lattice(f), None);
    r.check("generates the whole category", f.is_full()?, None);
    Ok(())
}

pub fn duality<F: Field>(cli: &Cli, pair: &CompositionPair) -> Result<Report, Error> {
    let mut r = Report::new(format!("verify duality p={:?} q={:?}", pair.p(), pair.q()));
    let f = duality_family::<F>(pair)?;
    cap(cli, f.derived().algebra())?;
    family_checks(&mut r, &f)?;
    let pattern = end_algebra_pattern(&f);
    r.check("End pattern equals Cartan of L(S)", pattern.entries() == cartan_lattice(f.support()).entries(), None);
    r.cert(&certify_pair(f.derived().algebra(), &lattice_algebra::<F>(&young_pq(pair))?)?);
    Ok(r.finish())
}

pub fn nak<F: Field>(cli: &Cli, p: i64, q: i64, r0: i64) -> Result<Report, Error> {
    let mut r = Report::new(format!("verify nak p={p} q={q} r={r0}"));
    let f = nak_family::<F>(p, q, r0)?;
    cap(cli, f.derived().algebra())?;
    family_checks(&mut r, &f)?;
    r.cert(&certify_pair(f.derived().algebra(), &lattice_algebra::<F>(&young_pqr(p, q, r0)?)?)?);
    Ok(r.finish())
}

fn chain_report<F: Field>(r: &mut Report, c: &LatticeChain) -> Result<(), Error> {
    let first_bad = c.steps.iter().find(|s| !s.verdict).map(|s| s.label());
    r.check("every step satisfies its mutation hypotheses", c.all_verdicts_hold(), first_bad);
    r.check("end support matches the target up to translation", c.end_matches_target(), None);
    r.invariant("Coxeter polynomial constant along the chain", c.certificates_consistent());
    r.cert(&certify_pair(&lattice_algebra::<F>(&c.start)?, &lattice_algebra::<F>(&c.target)?)?);
    r.chain = Some(c.into());
    Ok(())
}

pub fn main1<F: Field>(cli: &Cli, s: i64, t: i64, u: i64) -> Result<Report, Error> {
    let mut r = Report::new(format!("verify main1 s={s} t={t} u={u}"));
    let c = main1_transform(s, t, u)?;
    chain_report::<F>(&mut r, &c)?;
    if u < t {
        // L(s,t,u) ~ N(st-u, t+1) and L(s,t-1,u-s) ~ N(st-u, t)
        let (n, l) = ((s * t - u) as usize, t as usize);
        let (a, b) = (nakayama::<F>(n, l + 1)?, nakayama::<F>(n, l)?);
        cap(cli, &a)?;
        r.cert(&certify_pair(&a, &b)?);
        r.cert(&certify_pair(&a, &lattice_algebra::<F>(&c.start)?)?);
    }
    Ok(r.finish())
}

pub fn main3<F: Field>(cli: &Cli, p: i64, q: i64) -> Result<Report, Error> {
    let mut r = Report::new(format!("verify main3 p={p} q={q}"));
    let c = main3_transform(p, q)?;
    chain_report::<F>(&mut r, &c)?;
    let n = (p * q + 1) as usize;
    let (a, b) = (nakayama::<F>(n, (q + 1) as usize)?, nakayama::<F>(n, (p + 1) as usize)?);
    cap(cli, &a)?;
    r.cert(&certify_pair(&a, &b)?);
    r.cert(&certify_pair(&a, &lattice_algebra::<F>(&c.start)?)?);
    Ok(r.finish())
}

fn same_family<F: Field>(a: &SFamily<F>, b: &SFamily<F>) -> Result<bool, Error> {
    if a.support() != b.support() {
        return Ok(false);
    }
    for (p, x) in a.members() {
        if !a.derived().is_iso(x, b.member(*p).expect("same support"))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn apply_op<F: Field>(f: &SFamily<F>, op: MutationOp, k: i64, h: i64) -> Result<SFamily<F>, Error> {
    match op {
        MutationOp::I => mutate_i(f, k),
        MutationOp::IInv => mutate_i_inv(f, k),
        MutationOp::Ti => mutate_i_t(f, k),
        MutationOp::TiInv => mutate_i_t_inv(f, k),
        MutationOp::Ii => mutate_ii(f, k, h),
        MutationOp::IiInv => mutate_ii_inv(f, k, h),
        MutationOp::Tii => mutate_ii_t(f, k, h),
        MutationOp::TiiInv => mutate_ii_t_inv(f, k, h),
    }
}

fn inverse(op: MutationOp) -> MutationOp {
    match op {
        MutationOp::I => MutationOp::IInv,
        MutationOp::IInv => MutationOp::I,
        MutationOp::Ti => MutationOp::TiInv,
        MutationOp::TiInv => MutationOp::Ti,
        MutationOp::Ii => MutationOp::IiInv,
        MutationOp::IiInv => MutationOp::Ii,
        MutationOp::Tii => MutationOp::TiiInv,
        MutationOp::TiiInv => MutationOp::Tii,
    }
}

pub fn mutation<F: Field>(cli: &Cli, a: &MutationArgs) -> Result<Report, Error> {
    let f = match &a.input {
        Some(path) => read_json::<FamilyJson>(path)?.family::<F>()?,
        None => trivial_family::<F>(&support(&a.support)?)?,
    };
    cap(cli, f.derived().algebra())?;
    let mut r = Report::new(format!("verify mutation {:?} k={} h={}", a.op, a.k, a.h));
    let g = match apply_op(&f, a.op, a.k, a.h) {
        Ok(g) => g,
        Err(Error::Verification(m)) => {
            r.check("mutated family satisfies the axioms", false, Some(m));
            return Ok(r.finish());
        }
        Err(e) => return Err(e),
    };
    r.axioms("mutated family satisfies the axioms", &check_family(&g));
    r.check("End algebra of the output is L(S')", end_is_lattice(&g), None);
    let back = apply_op(&g, inverse(a.op), a.k, a.h)?;
    r.check("inverse mutation recovers the input", same_family(&f, &back)?, None);
    r.cert(&certify_pair(&lattice_algebra::<F>(f.support())?, &lattice_algebra::<F>(g.support())?)?);
    Ok(r.finish())
}

pub fn family_check<F: Field>(input: &PathBuf, young: bool, prime: bool) -> Result<Report, Error> {
    let f = read_json::<FamilyJson>(input)?.family::<F>()?;
    let mut r = Report::new(format!("family-check {}", input.display()));
    r.axioms("family axioms", &check_family(&f));
    if young {
        r.axioms("Young diagram axioms", &check_y(&f)?);
    }
    if prime {
        r.axioms("projection form of the Serre conditions", &check_prime_conditions(&f));
    }
    Ok(r.finish())
}

/// A random object: a shifted projective, simple or injective, or the cone
/// of a degree-0 map out of a simple.
fn random_object<F: Field>(d: &Derived<F>, rng: &mut StdRng) -> ProjComplex<F> {
    let n = d.num_vertices();
    let basic = |rng: &mut StdRng| {
        let v = rng.gen_range(0..n);
        let x = match rng.gen_range(0..3) {
            0 => d.stalk_projective(v),
            1 => d.simple_resolution(v),
            _ => d.injective_resolution_as_proj(v),
        };
        x.shift(rng.gen_range(-2..=2))
    };
    if rng.gen_bool(0.75) {
        return basic(rng);
    }
    let x = d.simple_resolution(rng.gen_range(0..n));
    let y = basic(rng);
    match d.hom_basis(&x, &y, 0).first() {
        Some(f) => d.cone(f, &x, &y).expect("same algebra"),
        None => x,
    }
}

pub fn homalg<F: Field>(seed: u64, count: usize, nmax: usize) -> Result<Report, Error> {
    if nmax < 2 {
        return Err(Error::Precondition("--nmax must be at least 2".into()));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut r = Report::new(format!("verify homalg seed={seed} count={count}"));
    let (mut serre_bad, mut euler_bad) = (None, None);
    for k in 0..count {
        let n = rng.gen_range(2..=nmax);
        let l = rng.gen_range(2..=n);
        let d = Arc::new(Derived::new(nakayama::<F>(n, l)?)?);
        let (x, y) = (random_object(&d, &mut rng), random_object(&d, &mut rng));
        let lhs = d.hom_dims(&x, &d.serre(&y));
        let rhs: std::collections::BTreeMap<i32, usize> = d.hom_dims(&y, &x).into_iter().map(|(k, v)| (-k, v)).collect();
        if lhs != rhs && serre_bad.is_none() {
            serre_bad = Some(format!("pair {k} over N({n},{l})"));
        }
        let c = d.algebra().cartan();
        if d.euler_char(&x, &y) != euler_form_projective(&c, &x.k0_class(n), &y.k0_class(n)) && euler_bad.is_none() {
            euler_bad = Some(format!("pair {k} over N({n},{l})"));
        }
    }
    r.check(&format!("Serre duality on {count} random pairs"), serre_bad.is_none(), serre_bad.clone());
    r.check(&format!("Euler form on {count} random pairs"), euler_bad.is_none(), euler_bad.clone());
    Ok(r.finish())
}

