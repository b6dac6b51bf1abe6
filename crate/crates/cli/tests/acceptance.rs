//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines always show up; exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use dereq_cli::pairs::pairs;
use dereq_core::algebra::{cartan_lattice, lattice_algebra, nakayama};
use dereq_core::families::*;
use dereq_core::homalg::{Derived, ProjComplex};
use dereq_core::invariants::{certify_cartans, certify_pair, coxeter_polynomial, euler_form_projective, Verdict};
use dereq_core::lattice::{sigma, young_pq, young_pqr, CompositionPair, GridPoint, LatticeSet, Side};
use dereq_core::{Error, Rational as Q};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn compositions(n: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// All `Y(p;q)` with `n_p, n_q <= 4`, then 50 random supports of size at most 14.
fn corpus() -> Vec<LatticeSet> {
    let mut out = Vec::new();
    for np in 1..=4 {
        for nq in 1..=4 {
            for p in compositions(np) {
                for q in compositions(nq).into_iter().filter(|q| q.len() == p.len()) {
                    out.push(young_pq(&CompositionPair::new(p.clone(), q).unwrap()));
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    while out.len() < 50 + young_count() {
        let size = rng.gen_range(1..=14);
        let s: LatticeSet = (0..size).map(|_| (rng.gen_range(0..5i64), rng.gen_range(0..5i64))).collect();
        out.push(s);
    }
    out
}

fn young_count() -> usize {
    (1..=4).flat_map(|np| (1..=4).map(move |nq| (np, nq))).map(|(np, nq)| {
        compositions(np).iter().map(|p| compositions(nq).iter().filter(|q| q.len() == p.len()).count()).sum::<usize>()
    }).sum()
}

fn cartan_oracle() -> Outcome {
    let c = corpus();
    for s in &c {
        let a = lattice_algebra::<Q>(s).map_err(e2s)?;
        ensure(a.cartan().entries() == cartan_lattice(s).entries(), || format!("mismatch on {s:?}"))?;
    }
    Ok(format!("{} supports ({} Young, {} random)", c.len(), young_count(), c.len() - young_count()))
}

fn trivial_families() -> Outcome {
    let c = corpus();
    for s in &c {
        let r = check_family(&trivial_family::<Q>(s).map_err(e2s)?);
        ensure(r.passed(), || format!("{s:?}: {:?}", r.first_failure()))?;
    }
    Ok(format!("{} supports", c.len()))
}

fn duality() -> Outcome {
    for (p, q) in [(vec![3], vec![4]), (vec![1, 2, 1], vec![1, 2, 2]), (vec![2, 1], vec![2, 2])] {
        let pair = CompositionPair::new(p.clone(), q.clone()).map_err(e2s)?;
        let f = duality_family::<Q>(&pair).map_err(e2s)?;
        ensure(end_is_lattice(&f), || format!("{p:?};{q:?}: shifted Homs or wrong End"))?;
        ensure(end_algebra_pattern(&f).entries() == cartan_lattice(f.support()).entries(), || format!("{p:?};{q:?}: End pattern"))?;
        ensure(check_family(&f).passed(), || format!("{p:?};{q:?}: family axioms"))?;
        ensure(check_y(&f).map_err(e2s)?.passed(), || format!("{p:?};{q:?}: Young axioms"))?;
    }
    Ok("3 shapes".into())
}

fn nak() -> Outcome {
    for (p, q, r) in [(2, 3, 0), (2, 3, 1), (2, 4, 1), (3, 2, 1)] {
        let f = nak_family::<Q>(p, q, r).map_err(e2s)?;
        ensure(check_family(&f).passed(), || format!("({p},{q},{r}) axioms"))?;
        ensure(end_is_lattice(&f), || format!("({p},{q},{r}) End"))?;
        let n = nakayama::<Q>((p * q - r) as usize, (q + 1) as usize).map_err(e2s)?;
        let l = lattice_algebra::<Q>(&young_pqr(p, q, r).map_err(e2s)?).map_err(e2s)?;
        let c = certify_pair(&n, &l).map_err(e2s)?;
        ensure(c.verdict == Verdict::Consistent && c.coxeter_left == c.coxeter_right, || format!("({p},{q},{r}) certificate"))?;
    }
    Ok("4 instances".into())
}

fn nakayama_pairs() -> Outcome {
    let rows = pairs(30, 30, 60, 30);
    ensure(rows.iter().any(|r| r.p == 2 && r.q == 1 && r.r == "1/2" && (r.n, r.l) == (7, 4)), || "(2,1,1/2) -> (7,4) missing".into())?;
    for r in &rows {
        let a = nakayama::<Q>(r.n as usize, r.l_plus_1 as usize).map_err(e2s)?;
        let b = nakayama::<Q>(r.n as usize, r.l as usize).map_err(e2s)?;
        let (pa, pb) = (coxeter_polynomial(&a.cartan()).map_err(e2s)?, coxeter_polynomial(&b.cartan()).map_err(e2s)?);
        ensure(pa == pb, || format!("N({},{}) vs N({},{})", r.n, r.l_plus_1, r.n, r.l))?;
    }
    let halves = rows.iter().filter(|r| r.case == "b").count();
    Ok(format!("{} pairs, {} with half-integer r", rows.len(), halves))
}

fn negative_control() -> Outcome {
    let c = certify_pair(&nakayama::<Q>(6, 4).map_err(e2s)?, &nakayama::<Q>(6, 5).map_err(e2s)?).map_err(e2s)?;
    ensure(c.verdict == Verdict::Refuted && c.coxeter_left.is_some() && c.coxeter_left != c.coxeter_right, || "N(6,4) ~ N(6,5) not refuted".into())?;
    Ok("N(6,4) vs N(6,5) refuted".into())
}

fn same_family(a: &SFamily<Q>, b: &SFamily<Q>) -> Result<bool, Error> {
    if a.support() != b.support() {
        return Ok(false);
    }
    for (p, x) in a.members() {
        if !a.derived().is_iso(x, b.member(*p).unwrap())? {
            return Ok(false);
        }
    }
    Ok(true)
}

type Mutation = fn(&SFamily<Q>, i64) -> Result<SFamily<Q>, Error>;

fn mutated(f: &SFamily<Q>, g: &SFamily<Q>, back: &SFamily<Q>, what: &str) -> Result<(), String> {
    ensure(check_family(g).passed(), || format!("{what}: output axioms"))?;
    ensure(end_is_lattice(g), || format!("{what}: End of output"))?;
    ensure(same_family(f, back).map_err(e2s)?, || format!("{what}: inverse"))?;
    let c = certify_cartans(("L(S)", 0, &cartan_lattice(f.support())), ("L(S')", 0, &cartan_lattice(g.support())));
    ensure(c.verdict == Verdict::Consistent, || format!("{what}: certificate"))
}

fn mutations() -> Outcome {
    let ones: [(Mutation, Mutation, &str); 2] = [(mutate_i, mutate_i_inv, "I"), (mutate_i_t, mutate_i_t_inv, "tI")];
    let mut count = 0;
    for (s, t, r, k) in [(3, 4, 2, 1), (3, 4, 2, 2), (2, 3, 1, 1), (3, 3, 0, 2), (2, 2, 0, 1), (3, 3, 1, 1)] {
        let s = young_pqr(s, t, r).map_err(e2s)?;
        ensure(s.len() <= 10, || "support too large".into())?;
        for (fwd, inv, name) in ones {
            let f = trivial_family::<Q>(&if name == "I" { s.clone() } else { s.transpose() }).map_err(e2s)?;
            let g = fwd(&f, k).map_err(e2s)?;
            mutated(&f, &g, &inv(&g, k).map_err(e2s)?, &format!("{name} k={k} on {:?}", s.row_lengths()))?;
            count += 1;
        }
    }
    let mut s: LatticeSet = (-1..=2).flat_map(|i| (1..=2).map(move |j| (i, j))).collect();
    s.insert(GridPoint::new(3, 1));
    let f = trivial_family::<Q>(&s).map_err(e2s)?;
    let g = mutate_ii(&f, 3, 2).map_err(e2s)?;
    mutated(&f, &g, &mutate_ii_inv(&g, 3, 2).map_err(e2s)?, "II")?;
    let s0 = s.filter(|p| p.i >= 0).transpose();
    let f = trivial_family::<Q>(&s0).map_err(e2s)?;
    let g = mutate_ii_t(&f, 3, 2).map_err(e2s)?;
    mutated(&f, &g, &mutate_ii_t_inv(&g, 3, 2).map_err(e2s)?, "tII")?;
    Ok(format!("{count} one-row, 2 block (h=2, k=3)"))
}

fn chain_ok(c: &LatticeChain, what: &str) -> Result<(), String> {
    let bad = c.steps.iter().find(|s| !s.verdict).map(|s| s.label());
    ensure(bad.is_none(), || format!("{what}: step {bad:?}"))?;
    ensure(c.end_matches_target(), || format!("{what}: end support"))?;
    ensure(c.certificates_consistent(), || format!("{what}: chain certificates"))
}

fn nak_cert(n: i64, l1: i64, l2: i64) -> Result<(), String> {
    let c = certify_pair(&nakayama::<Q>(n as usize, l1 as usize).map_err(e2s)?, &nakayama::<Q>(n as usize, l2 as usize).map_err(e2s)?).map_err(e2s)?;
    ensure(c.verdict == Verdict::Consistent, || format!("N({n},{l1}) vs N({n},{l2})"))
}

fn chains() -> Outcome {
    for (s, t, u) in [(2, 8, 5), (3, 10, 6), (4, 9, 4)] {
        let c = main1_transform(s, t, u).map_err(e2s)?;
        chain_ok(&c, &format!("main1 ({s},{t},{u})"))?;
        ensure(c.target == young_pqr(s, t - 1, u - s).map_err(e2s)?.transpose(), || "main1 target".into())?;
        if u < t {
            nak_cert(s * t - u, t + 1, t)?;
        }
    }
    for (p, q) in [(2, 2), (2, 3), (3, 2)] {
        let c = main3_transform(p, q).map_err(e2s)?;
        chain_ok(&c, &format!("main3 ({p},{q})"))?;
        ensure(c.target == young_pqr(q + 1, p, p - 1).map_err(e2s)?.transpose(), || "main3 target".into())?;
        nak_cert(p * q + 1, q + 1, p + 1)?;
    }
    Ok("3 + 3 chains".into())
}

/// A random stalk projective, simple or injective, shifted.
fn random_object(d: &Derived<Q>, rng: &mut StdRng) -> ProjComplex<Q> {
    let v = rng.gen_range(0..d.num_vertices());
    let x = match rng.gen_range(0..3) {
        0 => d.stalk_projective(v),
        1 => d.simple_resolution(v),
        _ => d.injective_resolution_as_proj(v),
    };
    x.shift(rng.gen_range(-2..=2))
}

fn homological_core() -> Outcome {
    let mut rng = StdRng::seed_from_u64(11);
    for k in 0..30 {
        let n = rng.gen_range(2..=7);
        let d = Derived::new(nakayama::<Q>(n, rng.gen_range(2..=n)).map_err(e2s)?).map_err(e2s)?;
        let (x, y) = (random_object(&d, &mut rng), random_object(&d, &mut rng));
        let lhs = d.hom_dims(&x, &d.serre(&y));
        let rhs: std::collections::BTreeMap<i32, usize> = d.hom_dims(&y, &x).into_iter().map(|(n, v)| (-n, v)).collect();
        ensure(lhs == rhs, || format!("Serre duality, pair {k}"))?;
        if k < 20 {
            let c = d.algebra().cartan();
            ensure(d.euler_char(&x, &y) == euler_form_projective(&c, &x.k0_class(n), &y.k0_class(n)), || format!("Euler form, pair {k}"))?;
        }
    }
    for p in 2..=5usize {
        let d = Derived::new(nakayama::<Q>(p, p).map_err(e2s)?).map_err(e2s)?;
        for i in 0..p {
            let x = ProjComplex::stalk(i, 0);
            ensure(d.is_iso(&d.serre_pow(&x, p as i32 + 1), &x.shift(p as i32 - 1)).map_err(e2s)?, || format!("CY p={p} i={i}"))?;
        }
    }
    // every projection checks its own post-conditions; also check them here
    let mut calls = 0;
    for f in [nak_family::<Q>(2, 3, 1).map_err(e2s)?, lad_family::<Q>(3, 2).map_err(e2s)?] {
        let d = f.derived();
        for i in f.support().row_indices() {
            let e = f.row_sequence(i).map_err(e2s)?;
            for v in 0..d.num_vertices() {
                let x = d.simple_resolution(v);
                let (t, l) = (d.project_right(&e, &x).map_err(e2s)?, d.project_left(&e, &x).map_err(e2s)?);
                ensure(d.in_subcategory(&e, &t) && d.in_subcategory(&e, &l), || "projection membership".into())?;
                for ea in e.objects() {
                    ensure(d.hom_dims(ea, &t) == d.hom_dims(ea, &x), || "right projection adjunction".into())?;
                    ensure(d.hom_dims(&l, ea) == d.hom_dims(&x, ea), || "left projection adjunction".into())?;
                }
                calls += 2;
            }
        }
    }
    Ok(format!("30 Serre, 20 Euler, CY for p = 2..5, {calls} projections"))
}

fn a4_d4() -> Outcome {
    let s: LatticeSet = [(-1, 2), (0, 1), (0, 2), (1, 2)].into_iter().collect();
    let t = sigma(&s, 0, Side::Le);
    let c = certify_cartans(("L(S)", 0, &cartan_lattice(&s)), ("L(S')", 0, &cartan_lattice(&t)));
    ensure(c.verdict == Verdict::Refuted, || "A4/D4 certificate not refuted".into())?;
    let f = trivial_family::<Q>(&s).map_err(e2s)?;
    ensure(matches!(mutate_i(&f, 0), Err(Error::Precondition(_))), || "mutation accepted outside its hypotheses".into())?;
    Ok("certificate refuted, mutation gate closed".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Cartan oracle", cartan_oracle),
        ("trivial families", trivial_families),
        ("duality families", duality),
        ("Nakayama families", nak),
        ("Nakayama pairs n <= 30", nakayama_pairs),
        ("negative control N(6,4) vs N(6,5)", negative_control),
        ("mutations I, tI, II, tII", mutations),
        ("lattice chains", chains),
        ("homological core", homological_core),
        ("A4/D4 non-example", a4_d4),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(d) => println!("PASS {:>2}. {name}: {d} ({secs:.1}s)", k + 1),
            Err(d) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {d} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
