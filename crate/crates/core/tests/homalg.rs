use std::collections::BTreeMap;

use dereq_core::algebra::{lattice_shriek, nakayama};
use dereq_core::homalg::{cone, direct_sum, ChainMap, Derived, ProjComplex};
use dereq_core::lattice::{CompositionPair, GridPoint};
use dereq_core::algebra::VertexLabel;
use dereq_core::Rational;

type Q = Rational;

fn ka(n: usize) -> Derived<Q> {
    Derived::new(nakayama::<Q>(n, n).unwrap()).unwrap()
}

fn dims(pairs: &[(i32, usize)]) -> BTreeMap<i32, usize> {
    pairs.iter().copied().collect()
}

#[test]
fn simple_resolutions() {
    let d = ka(2);
    // vertex 1 is the source of 1 -> 2, so P(1) = S(1); S(2) has P(1) -> P(2)
    let s2 = d.simple_resolution(1);
    assert_eq!(s2.shape(), vec![(-1, vec![0]), (0, vec![1])]);
    assert_eq!(d.simple_resolution(0), ProjComplex::stalk(0, 0));
    let n32 = Derived::new(nakayama::<Q>(3, 2).unwrap()).unwrap();
    let s = n32.simple_resolution(2);
    assert_eq!(s.shape(), vec![(-2, vec![0]), (-1, vec![1]), (0, vec![2])]);
}

#[test]
fn projective_homs_match_cartan() {
    let d = Derived::new(nakayama::<Q>(5, 3).unwrap()).unwrap();
    let c = d.algebra().cartan();
    for a in 0..5 {
        for b in 0..5 {
            let h = d.hom_dims(&ProjComplex::stalk(a, 0), &ProjComplex::stalk(b, 0));
            let e = c.get(b, a) as usize;
            assert_eq!(h, if e == 0 { dims(&[]) } else { dims(&[(0, e)]) });
        }
    }
}

#[test]
fn simples_of_path_algebra_are_exceptional() {
    let d = ka(4);
    for v in 0..4 {
        let s = d.simple_resolution(v).shift(3);
        assert_eq!(d.hom_dims(&s, &s), dims(&[(0, 1)]));
    }
}

#[test]
fn serre_on_ka2() {
    let d = ka(2);
    // I(1) is two-dimensional and ν(P(1)) = I(1)
    let nu = d.serre(&ProjComplex::stalk(0, 0));
    assert!(d.is_iso(&nu, &d.injective_resolution_as_proj(0)).unwrap());
    assert_eq!(d.hom_dims(&ProjComplex::stalk(1, 0), &nu), dims(&[(0, 1)]));
    assert_eq!(d.hom_dims(&ProjComplex::stalk(0, 0), &ProjComplex::stalk(1, 0)), dims(&[(0, 1)]));
    for v in 0..2 {
        let p = ProjComplex::stalk(v, 0);
        assert!(d.is_iso(&d.serre_inverse(&d.serre(&p)), &p).unwrap());
    }
}

#[test]
fn fractional_cy() {
    for p in 2..=5usize {
        let d = ka(p);
        for i in 0..p {
            let x = ProjComplex::stalk(i, 0);
            let lhs = d.serre_pow(&x, p as i32 + 1);
            assert!(d.is_iso(&lhs, &x.shift(p as i32 - 1)).unwrap(), "p={p} i={i}");
        }
    }
}

#[test]
fn cones_and_minimize() {
    let d = Derived::new(nakayama::<Q>(4, 2).unwrap()).unwrap();
    let alg = d.algebra();
    let x = d.simple_resolution(0);
    let id = ChainMap::identity(&x, alg);
    let (c, _, _) = cone(alg, &id, &x, &x);
    assert!(d.is_acyclic(&c));
    assert!(d.minimize(&c).is_zero());
    assert!(d.is_iso(&x, &x.shift(1).shift(-1)).unwrap());
    assert!(!d.is_iso(&ProjComplex::stalk(0, 0), &ProjComplex::stalk(1, 0)).unwrap());
}

#[test]
fn serre_on_nakayama_shifts_projectives() {
    // over N(pq, q+1): ν(P(i)) ≅ P(i+q) in our orientation when i + q <= pq
    let (p, q) = (2usize, 3usize);
    let d = Derived::new(nakayama::<Q>(p * q, q + 1).unwrap()).unwrap();
    for i in 0..p * q - q {
        let nu = d.serre(&ProjComplex::stalk(i, 0));
        assert!(d.is_iso(&nu, &ProjComplex::stalk(i + q, 0)).unwrap(), "i={i}");
    }
}

#[test]
fn duality_hom_example() {
    let pair = CompositionPair::new(vec![3], vec![4]).unwrap();
    let d = Derived::new(lattice_shriek::<Q>(&pair)).unwrap();
    let at = |i, j| d.algebra().vertex(VertexLabel::Grid(GridPoint::new(i, j))).unwrap();
    let x = d.simple_resolution(at(1, 2)).shift(-3);
    let y = d.simple_resolution(at(1, 1)).shift(-2);
    assert_eq!(d.hom_dims(&x, &y), dims(&[(0, 1)]));
}

#[test]
fn serre_duality_small() {
    let d = Derived::new(nakayama::<Q>(5, 3).unwrap()).unwrap();
    let objs: Vec<ProjComplex<Q>> = (0..5).map(|v| d.simple_resolution(v)).chain((0..5).map(|v| ProjComplex::stalk(v, 0))).collect();
    for x in &objs {
        for y in &objs {
            let lhs = d.hom_dims(x, &d.serre(y));
            let rhs: BTreeMap<i32, usize> = d.hom_dims(y, x).into_iter().map(|(n, k)| (-n, k)).collect();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn projections_basic() {
    let d = Derived::new(nakayama::<Q>(4, 2).unwrap()).unwrap();
    let p: Vec<ProjComplex<Q>> = (0..4).map(|v| ProjComplex::stalk(v, 0)).collect();
    // Hom(P(a), P(b)) = 0 for a > b, so descending order is exceptional
    let e = d.exceptional_sequence(vec![p[2].clone(), p[1].clone()]).unwrap();
    for x in [p[1].clone(), p[2].shift(2), direct_sum(&[p[1].clone(), p[2].shift(-1)])] {
        assert!(d.is_iso(&d.project_left(&e, &x).unwrap(), &x).unwrap());
        assert!(d.is_iso(&d.project_right(&e, &x).unwrap(), &x).unwrap());
    }
    // adjunction: Hom(E_a, T(X)) = Hom(E_a, X)
    for v in 0..4 {
        let x = d.simple_resolution(v);
        let t = d.project_right(&e, &x).unwrap();
        let f = d.project_left(&e, &x).unwrap();
        for ea in e.objects() {
            assert_eq!(d.hom_dims(ea, &t), d.hom_dims(ea, &x));
            assert_eq!(d.hom_dims(&f, ea), d.hom_dims(&x, ea));
        }
    }
    // a single object orthogonal to X projects to zero
    let single = d.exceptional_sequence(vec![p[3].clone()]).unwrap();
    let x = p[0].clone();
    assert!(d.hom_dims(&x, &p[3]).is_empty());
    assert!(d.project_left(&single, &x).unwrap().is_zero());
    // full sequence: the subcategory Serre functor is the Serre functor
    let full = d.exceptional_sequence(vec![p[3].clone(), p[2].clone(), p[1].clone(), p[0].clone()]).unwrap();
    for v in 0..4 {
        let x = d.simple_resolution(v);
        assert!(d.is_iso(&d.sub_serre(&full, &x).unwrap(), &d.serre(&x)).unwrap());
        let y = d.sub_serre_inverse(&full, &x).unwrap();
        assert!(d.is_iso(&y, &d.serre_inverse(&x)).unwrap());
    }
    // sub_serre on a single exceptional object is the identity
    let s = d.simple_resolution(2);
    let one = d.exceptional_sequence(vec![s.clone()]).unwrap();
    assert!(d.is_iso(&d.sub_serre(&one, &s).unwrap(), &s).unwrap());
}

#[test]
fn decompose() {
    let d = ka(3);
    let e = d.simple_resolution(1);
    assert_eq!(d.exceptional_decompose(&e, &e.shift(3)).unwrap(), vec![(3, 1)]);
    assert_eq!(d.exceptional_decompose(&e, &direct_sum(&[e.clone(), e.shift(1)])).unwrap(), vec![(0, 1), (1, 1)]);
    let zero = ChainMap::zero();
    let (c, _, _) = cone(d.algebra(), &zero, &e, &e);
    assert_eq!(d.exceptional_decompose(&e, &c).unwrap(), vec![(0, 1), (1, 1)]);
}
