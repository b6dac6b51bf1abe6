use proptest::prelude::*;

use dereq_core::algebra::nakayama;
use dereq_core::homalg::{Derived, ProjComplex};
use dereq_core::intmat::IntMatrix;
use dereq_core::invariants::{coxeter_polynomial, euler_form_projective};
use dereq_core::lattice::{is_m_minus, is_m_plus, rho_pow, sigma_pow, GridPoint, LatticeSet, Side};
use dereq_core::Rational;

type Q = Rational;

fn lattice_set(max: usize) -> impl Strategy<Value = LatticeSet> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 0..max).prop_map(|v| v.into_iter().collect())
}

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Le), Just(Side::Ge)]
}

fn square(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(-3i128..=3, n), n).prop_map(|rows| IntMatrix::from_rows(&rows))
}

/// Unitriangular with random entries above the diagonal, so `det = 1`.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    square(n).prop_map(move |m| {
        let mut u = IntMatrix::identity(n);
        for r in 0..n {
            for c in r + 1..n {
                u.set(r, c, m.get(r, c));
            }
        }
        u
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// A random object of `per N(n, l)`: a shifted projective, simple or
/// injective, or the cone of a degree-0 map between two of those.
#[derive(Clone, Debug)]
struct Obj {
    kind: u8,
    v: usize,
    shift: i32,
    other: (u8, usize, i32),
}

fn obj() -> impl Strategy<Value = Obj> {
    (0u8..4, 0usize..8, -2i32..=2, (0u8..3, 0usize..8, -2i32..=2)).prop_map(|(kind, v, shift, other)| Obj { kind, v, shift, other })
}

fn basic(d: &Derived<Q>, kind: u8, v: usize, shift: i32) -> ProjComplex<Q> {
    let v = v % d.num_vertices();
    let x = match kind {
        0 => d.stalk_projective(v),
        1 => d.simple_resolution(v),
        _ => d.injective_resolution_as_proj(v),
    };
    x.shift(shift)
}

fn build(d: &Derived<Q>, o: &Obj) -> ProjComplex<Q> {
    if o.kind < 3 {
        return basic(d, o.kind, o.v, o.shift);
    }
    let x = basic(d, 1, o.v, 0);
    let y = basic(d, o.other.0, o.other.1, o.other.2);
    match d.hom_basis(&x, &y, 0).first() {
        Some(f) => d.cone(f, &x, &y).unwrap().shift(o.shift),
        None => x.shift(o.shift),
    }
}

fn nak() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=8).prop_flat_map(|n| (Just(n), 2usize..=n))
}

proptest! {
    #[test]
    fn shear_then_unshear(s in lattice_set(12), k in -3i64..=3, side in side(), e in prop_oneof![Just(1i64), Just(-1)]) {
        prop_assert_eq!(sigma_pow(&sigma_pow(&s, k, side, e), k, side, -e), s.clone());
        prop_assert_eq!(rho_pow(&rho_pow(&s, k, side, e), k, side, -e), s);
    }

    #[test]
    fn transpose_swaps_sigma_and_rho(s in lattice_set(12), k in -3i64..=3, side in side(), e in -2i64..=2) {
        prop_assert_eq!(sigma_pow(&s.transpose(), k, side, e).transpose(), rho_pow(&s, k, side, e));
    }

    #[test]
    fn charpoly_ignores_vertex_order((c, perm) in (1usize..=6).prop_flat_map(|n| (unimodular(n), permutation(n)))) {
        let p = coxeter_polynomial(&c).unwrap();
        prop_assert_eq!(&coxeter_polynomial(&c.permuted(&perm)).unwrap(), &p);
        prop_assert_eq!(&coxeter_polynomial(&c.transpose()).unwrap(), &p);
        prop_assert!(p.is_self_reciprocal_up_to_sign());
    }

    #[test]
    fn charpoly_matches_cofactor_expansion(m in (1usize..=5).prop_flat_map(square)) {
        prop_assert_eq!(m.charpoly(), m.charpoly_cofactor());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn serre_duality((n, l) in nak(), x in obj(), y in obj()) {
        let d = Derived::new(nakayama::<Q>(n, l).unwrap()).unwrap();
        let (x, y) = (build(&d, &x), build(&d, &y));
        let lhs = d.hom_dims(&x, &d.serre(&y));
        let rhs = d.hom_dims(&y, &x);
        let flipped: std::collections::BTreeMap<i32, usize> = rhs.iter().map(|(k, v)| (-k, *v)).collect();
        prop_assert_eq!(lhs, flipped);
    }

    #[test]
    fn minimize_and_shift((n, l) in nak(), x in obj(), y in obj()) {
        let d = Derived::new(nakayama::<Q>(n, l).unwrap()).unwrap();
        let (x, y) = (build(&d, &x), build(&d, &y));
        let m = d.minimize(&x);
        prop_assert_eq!(&d.minimize(&m), &m);
        prop_assert!(m.size() <= x.size());
        let h = d.hom_dims(&x, &y);
        prop_assert_eq!(&d.hom_dims(&m, &y), &h);
        // Hom(X[1], Y[n]) = Hom(X, Y[n-1])
        let shifted: std::collections::BTreeMap<i32, usize> = h.iter().map(|(k, v)| (k + 1, *v)).collect();
        prop_assert_eq!(d.hom_dims(&x.shift(1), &y), shifted);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn euler_form_from_classes((n, l) in nak(), x in obj(), y in obj()) {
        let d = Derived::new(nakayama::<Q>(n, l).unwrap()).unwrap();
        let (x, y) = (build(&d, &x), build(&d, &y));
        let c = d.algebra().cartan();
        let expected = euler_form_projective(&c, &x.k0_class(n), &y.k0_class(n));
        prop_assert_eq!(d.euler_char(&x, &y), expected);
    }
}

/// Every `M⁺_k`-subset of `[0,3] × [0,4]` is sent to an `M⁻_k`-subset by
/// `σ_{≤k}`.
#[test]
fn m_plus_shears_to_m_minus() {
    let cells: Vec<GridPoint> = (0..4).flat_map(|i| (0..5).map(move |j| GridPoint::new(i, j))).collect();
    let mut seen = 0;
    for mask in 0u32..1 << cells.len() {
        let s: LatticeSet = cells.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, p)| *p).collect();
        for k in 0..=2 {
            if is_m_plus(&s, k) {
                seen += 1;
                assert!(is_m_minus(&sigma_pow(&s, k, Side::Le, 1), k), "{s:?} k={k}");
            }
        }
    }
    assert!(seen > 1000);
}
