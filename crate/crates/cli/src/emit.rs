use serde::Serialize;

use dereq_core::algebra::{cartan_lattice, nakayama, Algebra};
use dereq_core::error::Error;
use dereq_core::families::{duality_family, lad_family, lad_family_prime, nak_family, trivial_family, SFamily};
use dereq_core::invariants::{certify_pair, coxeter_polynomial};
use dereq_core::lattice::{young_pq, CompositionPair, LatticeSet};
use dereq_core::Field;

use crate::model::{AlgebraSpec, FamilyJson, LatticeJson, MatrixJson, PolynomialJson};
use crate::pairs::{pairs as pair_rows, PairRow, CSV_HEADER};
use crate::verify::support;
use crate::{json, AlgebraArgs, AlgebraKind, Cli, EmitKind, FamilyArgs, FamilyKind, Format, LatticeArgs, Output, SupportArgs};

#[derive(Serialize)]
struct PairOut<'a> {
    #[serde(flatten)]
    row: &'a PairRow,
    #[serde(skip_serializing_if = "Option::is_none")]
    coxeter_equal: Option<bool>,
}

fn certify_row<F: Field>(r: &PairRow) -> Result<Option<bool>, Error> {
    let (a, b) = (nakayama::<F>(r.n as usize, r.l_plus_1 as usize)?, nakayama::<F>(r.n as usize, r.l as usize)?);
    Ok(Some(certify_pair(&a, &b)?.is_consistent()))
}

pub(crate) fn pairs<F: Field>(cli: &Cli, pmax: i64, qmax: i64, rmax: i64, nmax: i64, certify: bool) -> Result<Output, Error> {
    let rows = pair_rows(pmax, qmax, rmax, nmax);
    let verdicts: Vec<Option<bool>> = if certify {
        // rows are independent; order is kept by joining chunks in sequence
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
        let chunk = rows.len().div_ceil(workers).max(1);
        let parts = std::thread::scope(|sc| {
            let handles: Vec<_> = rows.chunks(chunk).map(|part| sc.spawn(move || part.iter().map(certify_row::<F>).collect::<Result<Vec<_>, Error>>())).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect::<Result<Vec<_>, Error>>()
        })?;
        parts.concat()
    } else {
        vec![None; rows.len()]
    };
    let code = if verdicts.iter().any(|v| *v == Some(false)) { 3 } else { 0 };
    let text = match cli.format {
        Format::Json => json(&rows.iter().zip(&verdicts).map(|(row, &coxeter_equal)| PairOut { row, coxeter_equal }).collect::<Vec<_>>()),
        Format::Csv => {
            let mut s = String::from(CSV_HEADER);
            if certify {
                s += ",coxeter_equal";
            }
            s.push('\n');
            for (r, v) in rows.iter().zip(&verdicts) {
                s += &r.csv();
                if let Some(v) = v {
                    s += &format!(",{v}");
                }
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (r, v) in rows.iter().zip(&verdicts) {
                s += &format!("N({},{}) ~ N({},{})  p={} q={} r={} ({})", r.n, r.l_plus_1, r.n, r.l, r.p, r.q, r.r, r.case);
                if let Some(v) = v {
                    s += if *v { "  coxeter equal" } else { "  coxeter DIFFERENT" };
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Output { code, text })
}

fn has_support(s: &SupportArgs) -> bool {
    !s.young.is_empty() || s.lattice_file.is_some()
}

fn algebra_spec(a: &AlgebraArgs) -> Result<AlgebraSpec, Error> {
    let kind = match a.algebra {
        Some(k) => k,
        None if a.n.is_some() => AlgebraKind::Nakayama,
        None if a.lo.is_some() => AlgebraKind::Nn,
        None if has_support(&a.support) => AlgebraKind::Lattice,
        None if !a.p.is_empty() => AlgebraKind::Shriek,
        None => return Err(Error::Precondition("no algebra given; try --n/--l, --young, --p/--q or --lo/--hi".into())),
    };
    let missing = |what: &str| Error::Precondition(format!("missing {what}"));
    Ok(match kind {
        AlgebraKind::Nakayama => AlgebraSpec::Nakayama { n: a.n.ok_or_else(|| missing("--n"))?, l: a.l.ok_or_else(|| missing("--l"))? },
        AlgebraKind::Nn => AlgebraSpec::Nn { lo: a.lo.ok_or_else(|| missing("--lo"))?, hi: a.hi.ok_or_else(|| missing("--hi"))? },
        AlgebraKind::Shriek => {
            CompositionPair::new(a.p.clone(), a.q.clone())?;
            AlgebraSpec::Shriek { p: a.p.clone(), q: a.q.clone() }
        }
        AlgebraKind::Lattice if has_support(&a.support) => AlgebraSpec::lattice(&support(&a.support)?),
        AlgebraKind::Lattice => AlgebraSpec::lattice(&young_pq(&CompositionPair::new(a.p.clone(), a.q.clone())?)),
    })
}

#[derive(Serialize)]
struct ArrowJson {
    name: String,
    src: String,
    tgt: String,
}

#[derive(Serialize)]
struct AlgebraJson {
    spec: AlgebraSpec,
    name: String,
    dim: usize,
    vertices: Vec<String>,
    arrows: Vec<ArrowJson>,
    relations: Vec<String>,
}

fn algebra_json<F: Field>(spec: AlgebraSpec, a: &Algebra<F>) -> AlgebraJson {
    let q = a.quiver();
    let label = |v: usize| q.vertices[v].to_string();
    AlgebraJson {
        spec,
        name: a.name().into(),
        dim: a.dim(),
        vertices: (0..q.vertices.len()).map(label).collect(),
        arrows: q.arrows.iter().map(|x| ArrowJson { name: x.name.clone(), src: label(x.src), tgt: label(x.tgt) }).collect(),
        relations: a.relations().to_vec(),
    }
}

fn lattice_set(a: &LatticeArgs) -> Result<LatticeSet, Error> {
    if has_support(&a.support) {
        support(&a.support)
    } else {
        Ok(young_pq(&CompositionPair::new(a.p.clone(), a.q.clone())?))
    }
}

fn family<F: Field>(a: &FamilyArgs) -> Result<(SFamily<F>, AlgebraSpec), Error> {
    let two = |v: &[i64], what: &str| match v {
        &[x] => Ok(x),
        _ => Err(Error::Precondition(format!("{what} takes one integer here"))),
    };
    let f = match a.family {
        FamilyKind::Trivial => {
            let s = support(&a.support)?;
            return Ok((trivial_family(&s)?, AlgebraSpec::lattice(&s)));
        }
        FamilyKind::Duality => {
            let pair = CompositionPair::new(a.p.clone(), a.q.clone())?;
            return Ok((duality_family(&pair)?, AlgebraSpec::Shriek { p: a.p.clone(), q: a.q.clone() }));
        }
        FamilyKind::Nak => {
            let r = a.r.ok_or_else(|| Error::Precondition("missing --r".into()))?;
            nak_family(two(&a.p, "--p")?, two(&a.q, "--q")?, r)?
        }
        FamilyKind::Lad => lad_family(two(&a.p, "--p")?, two(&a.q, "--q")?)?,
        FamilyKind::LadPrime => lad_family_prime(two(&a.p, "--p")?, two(&a.q, "--q")?)?,
    };
    // the remaining families live over a Nakayama algebra N(n, l)
    let c = f.derived().algebra().cartan();
    let n = c.rows();
    let l = (0..n).map(|v| (0..n).map(|w| c.get(w, v)).sum::<i128>()).max().unwrap_or(0) as usize;
    Ok((f, AlgebraSpec::Nakayama { n, l }))
}

fn matrix_csv(m: &MatrixJson) -> String {
    let mut s = String::new();
    if !m.labels.is_empty() {
        s += &format!(",{}\n", m.labels.join(","));
    }
    for (i, row) in m.entries.iter().enumerate() {
        if let Some(l) = m.labels.get(i) {
            s += &format!("{l},");
        }
        s += &row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        s.push('\n');
    }
    s
}

pub(crate) fn run<F: Field>(cli: &Cli, what: &EmitKind) -> Result<Output, Error> {
    let text = match what {
        EmitKind::Algebra(a) => {
            let spec = algebra_spec(a)?;
            let alg = spec.build::<F>()?;
            match cli.format {
                Format::Text => alg.describe(),
                _ => json(&algebra_json(spec, &alg)),
            }
        }
        EmitKind::Cartan(a) => {
            let spec = algebra_spec(a)?;
            let c = match &spec {
                // no need to build the algebra for the combinatorial formula
                AlgebraSpec::Lattice { points } => cartan_lattice(&crate::model::to_set(points)),
                _ => spec.build::<F>()?.cartan(),
            };
            let m = MatrixJson::new(&c);
            match cli.format {
                Format::Json => json(&m),
                _ => matrix_csv(&m),
            }
        }
        EmitKind::Coxeter(a) => {
            let spec = algebra_spec(a)?;
            let alg = spec.build::<F>()?;
            let p = coxeter_polynomial(&alg.cartan())?;
            match cli.format {
                Format::Json => json(&PolynomialJson { algebra: alg.name().into(), coefficients: p.coeffs().to_vec() }),
                _ => p.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",") + "\n",
            }
        }
        EmitKind::Lattice(a) => {
            let s = lattice_set(a)?;
            match cli.format {
                Format::Json => json(&LatticeJson::new(&s)),
                Format::Csv => s.iter().map(|p| format!("{},{}\n", p.i, p.j)).collect(),
                Format::Text => s.picture(),
            }
        }
        EmitKind::Family(a) => {
            let (f, spec) = family::<F>(a)?;
            json(&FamilyJson::new(spec, &f))
        }
    };
    Ok(Output::ok(text))
}

