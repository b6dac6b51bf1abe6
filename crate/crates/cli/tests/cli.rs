use std::path::PathBuf;

use clap::Parser;

use dereq_cli::model::{AlgebraSpec, FamilyJson, LatticeJson, MatrixJson, PolynomialJson};
use dereq_cli::pairs::PairRow;
use dereq_cli::{run, Cli, Output};
use dereq_core::algebra::{cartan_lattice, nakayama};
use dereq_core::families::check_family;
use dereq_core::invariants::coxeter_polynomial;
use dereq_core::lattice::young_pqr;
use dereq_core::Rational as Q;

fn dereq(args: &str) -> Output {
    let cli = Cli::try_parse_from(std::iter::once("dereq").chain(args.split_whitespace())).unwrap();
    run(&cli)
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dereq-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn report(o: &Output) -> serde_json::Value {
    serde_json::from_str(&o.text).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(dereq("verify pair --n 6 --l 3 --l2 4").code, 0);
    let refuted = dereq("verify pair --n 6 --l 4 --l2 5");
    assert_eq!(refuted.code, 3);
    assert_eq!(report(&refuted)["status"], "refuted");
    let pre = dereq("verify main3 --p 1 --q 3");
    assert_eq!(pre.code, 4);
    assert_eq!(report(&pre)["status"], "precondition");
    assert_eq!(dereq("verify nak --p 2 --q 3 --r 1 --max-dim 5").code, 4);
    // block mutation on a support without the required shape
    assert_eq!(dereq("verify mutation --op ii --k 3 --h 2 --young 3,2,0").code, 4);
}

#[test]
fn verify_examples() {
    for args in [
        "verify duality --s 3 --t 4 --u 1",
        "verify duality --p 1,2,1 --q 1,2,2",
        "verify nak --p 2 --q 4 --r 1",
        "verify main1 --s 2 --t 8 --u 5",
        "verify mutation --op ti --k 1 --young 2,3,1",
        "verify homalg --count 10 --nmax 5",
    ] {
        let o = dereq(args);
        assert_eq!(o.code, 0, "{args}: {}", o.text);
        assert_eq!(report(&o)["passed"], true);
    }
    let o = dereq("verify nak --p 2 --q 4 --r 1");
    let cert = &report(&o)["certificates"][0];
    assert_eq!(cert["left"], "N(7,5)");
    assert_eq!(cert["verdict"], "consistent");
    let o = dereq("verify main3 --p 2 --q 3");
    let certs = report(&o)["certificates"].as_array().unwrap().clone();
    assert!(certs.iter().any(|c| c["left"] == "N(7,4)" && c["right"] == "N(7,3)" && c["verdict"] == "consistent"));
    assert_eq!(dereq("verify homalg --count 5 --seed 3").text, dereq("verify homalg --count 5 --seed 3").text);
}

#[test]
fn pairs_table() {
    let a = dereq("pairs --nmax 30");
    assert_eq!(a, dereq("pairs --nmax 30"));
    let rows: Vec<PairRow> = serde_json::from_str(&a.text).unwrap();
    assert!(rows.windows(2).all(|w| (w[0].n, w[0].l) < (w[1].n, w[1].l)));
    let at = |p, q, r: &str| rows.iter().find(|x| x.p == p && x.q == q && x.r == r).map(|x| (x.n, x.l));
    assert_eq!(at(2, 1, "0"), Some((6, 3)));
    assert_eq!(at(2, 1, "1"), Some((8, 5)));
    assert_eq!(at(2, 2, "0"), Some((12, 6)));
    let csv = dereq("pairs --nmax 12 --format csv --certify");
    assert_eq!(csv.code, 0);
    let mut lines = csv.text.lines();
    assert_eq!(lines.next(), Some("# dereq pairs v1"));
    assert_eq!(lines.next(), Some("p,q,r,case,n,l,l_plus_1,coxeter_equal"));
    assert_eq!(lines.next(), Some("2,1,0,a,6,3,4,true"));
}

#[test]
fn emit_round_trips() {
    let lat: LatticeJson = serde_json::from_str(&dereq("emit lattice --young 2,8,5").text).unwrap();
    assert_eq!(lat.set(), young_pqr(2, 8, 5).unwrap());
    let path = tmp("s.json");
    std::fs::write(&path, serde_json::to_string(&lat).unwrap()).unwrap();
    let cartan: MatrixJson = serde_json::from_str(&dereq(&format!("emit cartan --lattice-file {}", path.display())).text).unwrap();
    assert_eq!(cartan.matrix().entries(), cartan_lattice(&lat.set()).entries());
    assert!(cartan.entries.iter().flatten().all(|&x| x == 0 || x == 1));
    assert_eq!(serde_json::from_str::<MatrixJson>(&serde_json::to_string(&cartan).unwrap()).unwrap(), cartan);

    let cox: PolynomialJson = serde_json::from_str(&dereq("emit coxeter --algebra nakayama --n 6 --l 4").text).unwrap();
    let expected = coxeter_polynomial(&nakayama::<Q>(6, 4).unwrap().cartan()).unwrap();
    assert_eq!(cox.coefficients, expected.coeffs());

    let alg: serde_json::Value = serde_json::from_str(&dereq("emit algebra --p 2,1 --q 1,1").text).unwrap();
    let spec: AlgebraSpec = serde_json::from_value(alg["spec"].clone()).unwrap();
    assert_eq!(spec, AlgebraSpec::Shriek { p: vec![2, 1], q: vec![1, 1] });
    assert_eq!(spec.build::<Q>().unwrap().dim() as u64, alg["dim"].as_u64().unwrap());
}

#[test]
fn family_files() {
    for (args, name) in [
        ("emit family --family nak --p 2 --q 3 --r 1", "nak.json"),
        ("emit family --family lad-prime --p 3 --q 2", "lad.json"),
        ("emit family --family duality --p 2,1 --q 2,2", "dual.json"),
        ("emit family --family trivial --young 3,3,1", "triv.json"),
    ] {
        let text = dereq(args).text;
        let json: FamilyJson = serde_json::from_str(&text).unwrap();
        let fam = json.family::<Q>().unwrap();
        assert!(check_family(&fam).passed(), "{args}");
        // re-ingest and re-emit gives the same file
        assert_eq!(FamilyJson::new(json.algebra.clone(), &fam), json);
        let path = tmp(name);
        std::fs::write(&path, &text).unwrap();
        let o = dereq(&format!("family-check --input {} --young", path.display()));
        assert_eq!(o.code, 0, "{}", o.text);
    }
    let path = tmp("nak.json");
    assert_eq!(dereq(&format!("verify mutation --op i --k 1 --input {}", path.display())).code, 0);
    // reading over another field is refused
    assert_eq!(dereq(&format!("family-check --input {} --field f101", path.display())).code, 4);

    // one member shifted: the family axioms fail with exit code 2
    let mut json: FamilyJson = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let m = json.members.get_mut("1,2").unwrap();
    m.degrees = m.degrees.iter().map(|(k, v)| (k + 1, v.clone())).collect();
    m.differentials = m.differentials.iter().map(|(k, v)| (k + 1, v.clone())).collect();
    let bad = tmp("bad.json");
    std::fs::write(&bad, serde_json::to_string(&json).unwrap()).unwrap();
    let o = dereq(&format!("family-check --input {}", bad.display()));
    assert_eq!(o.code, 2, "{}", o.text);
    assert_eq!(report(&o)["status"], "axiom-failure");
}

#[test]
fn prime_fields() {
    for f in ["f101", "f32003", "f2147483647"] {
        assert_eq!(dereq(&format!("verify nak --p 2 --q 3 --r 0 --field {f}")).code, 0);
    }
}
