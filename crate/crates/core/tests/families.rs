use dereq_core::algebra::cartan_lattice;
use dereq_core::error::Error;
use dereq_core::families::*;
use dereq_core::invariants::{certify_cartans, Verdict};
use dereq_core::lattice::{is_m_plus, sigma, young_pqr, CompositionPair, GridPoint, LatticeSet, Side};
use dereq_core::Rational;

type Q = Rational;

fn pair(p: &[i64], q: &[i64]) -> CompositionPair {
    CompositionPair::new(p.to_vec(), q.to_vec()).unwrap()
}

fn assert_family(f: &SFamily<Q>) {
    let report = check_family(f);
    assert!(report.passed(), "{:?}", report.first_failure());
}

fn assert_y(f: &SFamily<Q>) {
    let report = check_y(f).unwrap();
    assert!(report.passed(), "{:?}", report.first_failure());
}

/// Same support and pointwise isomorphic members.
fn same_family(a: &SFamily<Q>, b: &SFamily<Q>) -> bool {
    a.support() == b.support()
        && a.members().iter().all(|(p, x)| a.derived().is_iso(x, b.member(*p).unwrap()).unwrap())
}

#[test]
fn projectives_of_lattice_algebra() {
    for s in [young_pqr(2, 3, 0).unwrap(), young_pqr(3, 3, 1).unwrap(), young_pqr(1, 4, 0).unwrap()] {
        let f = trivial_family::<Q>(&s).unwrap();
        assert_family(&f);
        assert_y(&f);
        assert!(end_is_lattice(&f));
    }
    // not Young, still a family
    let s: LatticeSet = [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)].into_iter().collect();
    assert_family(&trivial_family::<Q>(&s).unwrap());
}

#[test]
fn koszul_dual_family() {
    for (p, q) in [(&[3][..], &[4][..]), (&[1, 2, 1], &[1, 2, 2]), (&[2, 1], &[2, 2])] {
        let f = duality_family::<Q>(&pair(p, q)).unwrap();
        assert_family(&f);
        assert_y(&f);
        assert!(end_is_lattice(&f), "{p:?} {q:?}");
    }
}

#[test]
fn ladder_families() {
    for (p, q) in [(2, 3), (3, 2), (2, 4)] {
        let f = lad_family::<Q>(p, q).unwrap();
        assert_eq!(f.support(), &young_pqr(p, q, 0).unwrap());
        assert_y(&f);
        assert!(end_is_lattice(&f));
        let g = lad_family_prime::<Q>(p, q).unwrap();
        assert_y(&g);
        assert!(end_is_lattice(&g));
    }
    assert!(matches!(lad_family::<Q>(1, 3), Err(Error::Precondition(_))));
    assert!(matches!(lad_family::<Q>(2, 1), Err(Error::Precondition(_))));
}

#[test]
fn nakayama_families() {
    for (p, q, r) in [(2, 3, 0), (2, 3, 1), (2, 4, 1), (3, 2, 1), (2, 4, 3)] {
        let f = nak_family::<Q>(p, q, r).unwrap();
        assert_eq!(f.support(), &young_pqr(p, q, r).unwrap());
        assert_eq!(f.derived().num_vertices() as i64, p * q - r);
        assert_y(&f);
        assert!(end_is_lattice(&f), "({p},{q},{r})");
    }
    assert!(matches!(nak_family::<Q>(2, 3, 3), Err(Error::Precondition(_))));
}

#[test]
fn broken_families_are_caught() {
    let f = nak_family::<Q>(2, 4, 1).unwrap();
    let pts = f.support().to_vec();
    let dup = f.with_member(pts[1], f.member(pts[0]).unwrap().clone()).unwrap();
    assert!(!check_family(&dup).passed());
    assert!(!check_prime_conditions(&dup).passed());

    let shifted = f.with_member(pts[2], f.member(pts[2]).unwrap().shift(1)).unwrap();
    let report = check_family(&shifted);
    assert_eq!(report.first_failure().map(|r| r.axiom), Some(Axiom::S1));
    assert!(!check_y(&shifted).unwrap().passed());
    assert!(!end_is_lattice(&shifted));
}

#[test]
fn serre_and_projection_forms_agree() {
    let mut fams = vec![
        duality_family::<Q>(&pair(&[2, 1], &[2, 2])).unwrap(),
        nak_family::<Q>(2, 4, 1).unwrap(),
        lad_family::<Q>(3, 2).unwrap(),
    ];
    let f = nak_family::<Q>(2, 3, 1).unwrap();
    let p = f.support().to_vec()[3];
    fams.push(f.with_member(p, f.member(p).unwrap().shift(2)).unwrap());
    for f in &fams {
        assert_eq!(check_family(f).passed(), check_prime_conditions(f).passed());
    }
    assert!(!check_family(fams.last().unwrap()).passed());
}

#[test]
fn restrictions_stay_families() {
    let f = lad_family::<Q>(3, 2).unwrap();
    for g in [f.rows_le(2), f.rows_ge(2), f.cols_le(1), f.cols_ge(2)] {
        assert_family(&g);
    }
    let corner: LatticeSet = [(1, 1), (1, 2), (2, 2), (3, 2)].into_iter().collect();
    assert_family(&f.subfamily(&corner).unwrap());
    assert_family(&f.transpose().transpose());
    assert!(f.subfamily(&[(9, 9)].into_iter().collect()).is_err());
}

#[test]
fn end_pattern_is_lattice_cartan() {
    let f = duality_family::<Q>(&pair(&[2, 1], &[2, 2])).unwrap();
    let pattern = end_algebra_pattern(&f);
    assert_eq!(pattern.entries(), cartan_lattice(f.support()).entries());
}

#[test]
fn one_row_mutations() {
    let cases: Vec<(LatticeSet, i64)> = vec![
        (young_pqr(3, 4, 2).unwrap(), 1),
        (young_pqr(3, 4, 2).unwrap(), 2),
        (young_pqr(2, 3, 1).unwrap(), 1),
        (young_pqr(3, 3, 0).unwrap(), 2),
        (young_pqr(2, 2, 0).unwrap(), 1),
    ];
    for (s, k) in cases {
        let f = trivial_family::<Q>(&s).unwrap();
        let g = mutate_i(&f, k).unwrap();
        assert_eq!(g.support(), &sigma(&s, k, Side::Le));
        assert!(end_is_lattice(&g));
        assert!(same_family(&mutate_i_inv(&g, k).unwrap(), &f));

        let ft = f.transpose();
        let gt = mutate_i_t(&ft, k).unwrap();
        assert_eq!(gt.support(), &g.support().transpose());
        assert!(same_family(&mutate_i_t_inv(&gt, k).unwrap(), &ft));
    }
}

#[test]
fn one_row_mutation_gate() {
    let s = young_pqr(3, 4, 2).unwrap();
    let f = trivial_family::<Q>(&s).unwrap();
    assert!(matches!(mutate_i(&f, 3), Err(Error::Precondition(_))));
    // below the first row nothing moves
    assert_eq!(mutate_i(&f, 0).unwrap().support(), &s);
}

#[test]
fn block_mutations() {
    let mut s: LatticeSet = (-1..=2).flat_map(|i| (1..=2).map(move |j| (i, j))).collect();
    s.insert(GridPoint::new(3, 1));
    for support in [s.clone(), s.filter(|p| p.i >= 0)] {
        let f = trivial_family::<Q>(&support).unwrap();
        let g = mutate_ii(&f, 3, 2).unwrap();
        assert!(end_is_lattice(&g));
        assert_eq!(g.member(GridPoint::new(3, 1)), f.member(GridPoint::new(3, 1)));
        assert!(same_family(&mutate_ii_inv(&g, 3, 2).unwrap(), &f));

        let ft = f.transpose();
        let gt = mutate_ii_t(&ft, 3, 2).unwrap();
        assert_eq!(gt.support(), &g.support().transpose());
        assert!(same_family(&mutate_ii_t_inv(&gt, 3, 2).unwrap(), &ft));
    }
    let bad: LatticeSet = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 1)].into_iter().collect();
    let f = trivial_family::<Q>(&bad).unwrap();
    assert!(matches!(mutate_ii(&f, 3, 2), Err(Error::Precondition(_))));
    assert!(matches!(mutate_ii(&f, 2, 2), Err(Error::Precondition(_))));
}

#[test]
fn main1_chains() {
    for (s, t, u) in [(2, 8, 5), (3, 10, 6), (4, 9, 4), (2, 5, 2), (2, 11, 5), (2, 14, 8)] {
        let c = main1_transform(s, t, u).unwrap();
        assert!(c.all_verdicts_hold(), "({s},{t},{u}) {:?}", c.steps.iter().find(|st| !st.verdict).map(|st| st.label()));
        assert!(c.end_matches_target(), "({s},{t},{u})");
        assert!(c.certificates_consistent());
        assert!(c.steps.windows(2).all(|w| w[0].after == w[1].before));
    }
    // for s >= 3 the lifted columns need the block step
    let c = main1_transform(3, 10, 6).unwrap();
    assert!(c.steps.iter().filter(|st| matches!(st.kind, StepKind::Block { .. })).count() >= 2);
    for bad in [(3, 6, 3), (3, 10, 9), (1, 4, 2), (2, 4, 5)] {
        assert!(matches!(main1_transform(bad.0, bad.1, bad.2), Err(Error::Precondition(_))));
    }
}

#[test]
fn main3_chains() {
    for (p, q) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let c = main3_transform(p, q).unwrap();
        assert!(c.holds(), "({p},{q})");
        assert!(c.certificates_consistent());
        assert_eq!(c.steps.len() as i64, p + q);
    }
    assert!(matches!(main3_transform(1, 3), Err(Error::Precondition(_))));
}

#[test]
fn main3_small_chain_realized_by_families() {
    let c = main3_transform(2, 2).unwrap();
    let mut f = trivial_family::<Q>(&c.start).unwrap();
    for st in &c.steps {
        let Move::Sigma { k, .. } = st.moves[0] else { break };
        f = mutate_i(&f, k).unwrap();
        assert_eq!(f.support(), &st.after);
    }
    assert!(end_is_lattice(&f));
}

#[test]
fn a4_against_d4() {
    let s: LatticeSet = [(-1, 2), (0, 1), (0, 2), (1, 2)].into_iter().collect();
    let t = sigma(&s, 0, Side::Le);
    let cert = certify_cartans(("L(S)", 0, &cartan_lattice(&s)), ("L(S')", 0, &cartan_lattice(&t)));
    assert_eq!(cert.verdict, Verdict::Refuted);
    let normalized = s.translate(GridPoint::new(1, 0));
    assert!(!is_m_plus(&normalized, 1));
    let f = trivial_family::<Q>(&s).unwrap();
    assert!(matches!(mutate_i(&f, 0), Err(Error::Precondition(_))));
}

fn constructed() -> Vec<SFamily<Q>> {
    vec![
        trivial_family::<Q>(&young_pqr(3, 3, 1).unwrap()).unwrap(),
        duality_family::<Q>(&pair(&[3], &[4])).unwrap(),
        duality_family::<Q>(&pair(&[2, 1], &[2, 2])).unwrap(),
        lad_family::<Q>(3, 2).unwrap(),
        nak_family::<Q>(2, 4, 1).unwrap(),
    ]
}

#[test]
fn gluing_along_rows_and_columns() {
    let mut fams = constructed();
    let f = nak_family::<Q>(2, 3, 1).unwrap();
    let p = GridPoint::new(1, 2);
    fams.push(f.with_member(p, f.member(p).unwrap().shift(1)).unwrap());
    let g = lad_family::<Q>(3, 2).unwrap();
    let p = GridPoint::new(3, 1);
    fams.push(g.with_member(p, g.member(p).unwrap().shift(-1)).unwrap());
    let mut cases = 0;
    for f in &fams {
        if !check_weak(f).get(Axiom::L2Rows).unwrap().passed() {
            continue;
        }
        let whole = check_family(f).passed();
        let (lo, hi) = (f.support().min_row().unwrap(), f.support().max_row().unwrap());
        for k in lo..hi {
            assert_eq!(whole, check_family(&f.rows_le(k)).passed() && check_family(&f.rows_ge(k + 1)).passed());
            cases += 1;
        }
        let t = f.transpose();
        let (lo, hi) = (t.support().min_row().unwrap(), t.support().max_row().unwrap());
        for k in lo..hi {
            assert_eq!(whole, check_family(&t.rows_le(k)).passed() && check_family(&t.rows_ge(k + 1)).passed());
            cases += 1;
        }
    }
    assert!(cases >= 20);
}

#[test]
fn rows_have_radical_square_zero_endomorphisms() {
    for f in constructed() {
        for i in f.support().row_indices() {
            let row = f.restrict(|p| p.i == i);
            let cols = f.support().row(i);
            let (lo, hi) = (*cols.first().unwrap(), *cols.last().unwrap());
            let n = dereq_core::algebra::nn::<Q>(lo, hi).unwrap();
            assert_eq!(end_algebra_pattern(&row).entries(), n.cartan().entries());
        }
    }
}

#[test]
fn projection_triangle_on_rows() {
    for f in constructed() {
        let d = f.derived();
        for i in f.support().row_indices() {
            let row = f.row(i);
            for w in 1..row.len() {
                let right = f.sequence(&row[w..]).unwrap();
                let lhs = d.project_right(&right, f.member(row[w - 1]).unwrap()).unwrap();
                let rhs = d.sub_serre(&right, f.member(row[w]).unwrap()).unwrap();
                assert!(d.is_iso(&lhs, &rhs).unwrap(), "{} {}", row[w - 1], row[w]);
            }
        }
    }
}

#[test]
fn full_serre_moves_up_a_row() {
    for f in [duality_family::<Q>(&pair(&[2, 1], &[2, 2])).unwrap(), lad_family::<Q>(3, 2).unwrap(), nak_family::<Q>(3, 2, 1).unwrap()] {
        let d = f.derived();
        let full = f.full_sequence().unwrap();
        for p in f.support().iter() {
            let up = GridPoint::new(p.i - 1, p.j);
            if f.member(up).is_none() {
                continue;
            }
            let lhs = d.sub_serre(&full, f.member(p).unwrap()).unwrap();
            let rhs = d.sub_serre(&f.row_sequence(up.i).unwrap(), f.member(up).unwrap()).unwrap();
            assert!(d.is_iso(&lhs, &rhs).unwrap(), "{p}");
        }
    }
}

#[test]
fn constructed_families_are_full() {
    for f in constructed() {
        assert!(f.is_full().unwrap());
    }
    assert!(!lad_family::<Q>(3, 2).unwrap().rows_le(2).is_full().unwrap());
}
