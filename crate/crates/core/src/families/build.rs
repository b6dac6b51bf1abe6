//! The standard families: projectives of `L(S)`, shifted simples of
//! `L!(p;q)`, and the ladder families over Nakayama algebras.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{exceptional_in_some_order, SFamily};
use crate::algebra::{lattice_algebra, lattice_shriek, nakayama};
use crate::error::Error;
use crate::field::Field;
use crate::homalg::{Derived, ProjComplex};
use crate::lattice::{young_pq, young_pqr, CompositionPair, GridPoint, LatticeSet};

/// `(P(i,j))_{(i,j) ∈ S}` in `per L(S)`.
pub fn trivial_family<F: Field>(s: &LatticeSet) -> Result<SFamily<F>, Error> {
    let d = Arc::new(Derived::new(lattice_algebra::<F>(s)?)?);
    let members = s.iter().enumerate().map(|(v, p)| (p, ProjComplex::stalk(v, 0))).collect();
    Ok(SFamily::new(d, members))
}

/// `X_{i,j} = S(i,j)[-i-j]` in `per L!(p;q)`.
pub fn duality_family<F: Field>(pair: &CompositionPair) -> Result<SFamily<F>, Error> {
    let y = young_pq(pair);
    let d = Arc::new(Derived::new(lattice_shriek::<F>(pair))?);
    let members = y
        .iter()
        .enumerate()
        .map(|(v, p)| {
            let shift = -(p.i + p.j) as i32;
            (p, d.simple_resolution(v).shift(shift))
        })
        .collect();
    Ok(SFamily::new(d, members))
}

/// `X_{i,j} = F_{⟨S^{p-i}E⟩} ⋯ F_{⟨S E⟩}(E_j)` on `Y(p;q)` for an
/// exceptional sequence `E = (E_1, .., E_q)`, where `S` is the Serre functor.
fn ladder<F: Field>(d: Arc<Derived<F>>, e: &[ProjComplex<F>], p: i64) -> Result<SFamily<F>, Error> {
    let mut layers = Vec::new();
    for m in 1..p {
        let objs = e.iter().map(|x| d.serre_pow(x, m as i32)).collect();
        layers.push(exceptional_in_some_order(&d, objs)?);
    }
    let mut members = BTreeMap::new();
    for (col, ej) in e.iter().enumerate() {
        let mut x = ej.clone();
        members.insert(GridPoint::new(p, col as i64 + 1), x.clone());
        for (m, layer) in layers.iter().enumerate() {
            x = d.project_left(layer, &x)?;
            members.insert(GridPoint::new(p - 1 - m as i64, col as i64 + 1), x.clone());
        }
    }
    Ok(SFamily::new(d, members))
}

fn ladder_pre(p: i64, q: i64) -> Result<(), Error> {
    if p < 1 || q < 1 || p * q <= q + 1 {
        return Err(Error::Precondition(format!("ladder families need p, q >= 1 and pq > q+1, got p={p}, q={q}")));
    }
    Ok(())
}

/// The ladder family over `N(pq, q+1)` generated from `S(j)[-j]`, `j ≤ q`.
/// Its last row is `(S(j)[-j])_j` and row `i` spans `⟨S^{p-i}P⟩` with
/// `P = P(1) ⊕ .. ⊕ P(q)`.
pub fn lad_family<F: Field>(p: i64, q: i64) -> Result<SFamily<F>, Error> {
    ladder_pre(p, q)?;
    let d = Arc::new(Derived::new(nakayama::<F>((p * q) as usize, (q + 1) as usize)?)?);
    let e: Vec<_> = (0..q as usize).map(|v| d.simple_resolution(v).shift(-(v as i32 + 1))).collect();
    ladder(d, &e, p)
}

/// As [`lad_family`] but generated from the simples at the top vertices,
/// `S((p-1)q+j)[-j]`.
pub fn lad_family_prime<F: Field>(p: i64, q: i64) -> Result<SFamily<F>, Error> {
    ladder_pre(p, q)?;
    let n = (p * q) as usize;
    let d = Arc::new(Derived::new(nakayama::<F>(n, (q + 1) as usize)?)?);
    let base = ((p - 1) * q) as usize;
    let e: Vec<_> = (0..q as usize).map(|k| d.simple_resolution(base + k).shift(-(k as i32 + 1))).collect();
    ladder(d, &e, p)
}

/// A family on `Y(p,q,r)` in `per N(pq-r, q+1)`: the restriction of
/// [`lad_family_prime`] to `Y(p,q,r)` lives in the thick subcategory of
/// `P(1), .., P(pq-r)`, which is identified with `per N(pq-r, q+1)`.
pub fn nak_family<F: Field>(p: i64, q: i64, r: i64) -> Result<SFamily<F>, Error> {
    if !(0..q).contains(&r) {
        return Err(Error::Precondition(format!("need 0 <= r <= q-1, got r={r}, q={q}")));
    }
    let big = lad_family_prime::<F>(p, q)?;
    let sub = big.subfamily(&young_pqr(p, q, r)?)?;
    let m = (p * q - r) as usize;
    let a = big.derived().algebra();
    let b = nakayama::<F>(m, (q + 1) as usize)?;
    let mut members = BTreeMap::new();
    for (&pt, x) in sub.members() {
        if let Some(v) = (x.lo()..=x.hi()).flat_map(|k| x.term(k).iter().copied()).find(|&v| v >= m) {
            return Err(Error::Verification(format!("member {pt} uses P({}) outside the first {m} vertices", v + 1)));
        }
        let y = x.relabel(
            |v| v,
            |basis| {
                let e = &a.basis()[basis];
                b.hom(e.src, e.tgt)[0]
            },
        );
        members.insert(pt, y);
    }
    Ok(SFamily::new(Arc::new(Derived::new(b)?), members))
}
