use lscrystal::analysis::{explore, ComponentReport, ExploreConfig, Limits, QSequence};
use lscrystal::json::{parse_record, path_from_json, path_to_json, PathRecord};
use lscrystal::lspath::shape_orbit;
use lscrystal::{classify, CartanData, Error, LSPath, OrbitClassification, Weight};
use proptest::prelude::*;

fn seed(a: i64, b: i64, k: i64, l: i64) -> LSPath {
    LSPath::pi_lambda(shape_orbit(CartanData::new(a, b).unwrap(), Weight::from_i64(k, l)).unwrap()).unwrap()
}

fn component(p: &LSPath, depth: usize) -> Vec<LSPath> {
    let cfg = ExploreConfig {
        limits: Limits {
            max_depth: depth,
            max_nodes: 10_000,
        },
        ..Default::default()
    };
    explore(p, &cfg).unwrap().nodes
}

#[test]
fn every_explored_path_roundtrips() {
    let qs = QSequence::new(seed(4, 3, 3, -2).orbit().clone()).unwrap();
    let seeds = [seed(3, 3, 1, -1), seed(3, 3, 2, -2), qs.pi_n(2).unwrap()];
    for s in &seeds {
        for p in component(s, 4) {
            let text = path_to_json(&p);
            let back = path_from_json(&text).unwrap();
            assert_eq!(back, p);
            assert_eq!(path_to_json(&back), text);
        }
    }
}

#[test]
fn fractions_are_reduced_on_output() {
    let p = seed(4, 3, 3, -2).f(lscrystal::RootIndex::One).unwrap();
    let text = path_to_json(&p);
    let rec: PathRecord = serde_json::from_str(&text).unwrap();
    for s in &rec.sigmas {
        assert_eq!(
            num_integer::Integer::gcd(s.numer(), s.denom()),
            num_bigint::BigInt::from(1)
        );
    }
}

#[test]
fn malformed_records_are_rejected() {
    for bad in [
        r#"{"cartan":[4,3],"lambda":[3,-2],"dirs":[0],"sigmas":[[0,1],[2,2]]}"#,
        r#"{"cartan":[4,3],"lambda":[3,-2],"dirs":[0],"sigmas":[[0,1],[1,0]]}"#,
        r#"{"cartan":[4,3],"lambda":[3,-2],"dirs":[0],"sigmas":[[0,1],[-1,-1]]}"#,
        r#"{"cartan":[4,3],"lambda":[3,-2],"dirs":[0]}"#,
        r#"[1,2,3]"#,
    ] {
        assert!(matches!(parse_record(bad), Err(Error::Parse(_))), "{bad}");
    }
    let wrong_ends = r#"{"cartan":[4,3],"lambda":[3,-2],"dirs":[0],"sigmas":[[0,1],[1,2]]}"#;
    assert!(path_from_json(wrong_ends).is_err());
}

#[test]
fn big_integers_survive() {
    let k = "123456789012345678901234567890";
    let text = format!(r#"{{"cartan":[3,3],"lambda":[{k},-{k}],"dirs":[0],"sigmas":[[0,1],[1,1]]}}"#);
    let p = path_from_json(&text).unwrap();
    assert_eq!(p.lambda().c1.to_string(), k);
    assert_eq!(path_to_json(&p), text);
}

#[test]
fn reports_roundtrip() {
    let qs = QSequence::new(seed(4, 3, 3, -2).orbit().clone()).unwrap();
    let mut cfg = ExploreConfig::default();
    cfg.limits.max_depth = 3;
    cfg.checks = vec![lscrystal::analysis::Check::Cmn(1)];
    for s in [seed(4, 3, 3, -2), qs.pi_n(1).unwrap()] {
        let report = explore(&s, &cfg).unwrap().report;
        let text = serde_json::to_string(&report).unwrap();
        let back: ComponentReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

#[test]
fn classifications_roundtrip() {
    for (a, b) in [(2, 3), (3, 3), (4, 3), (5, 2)] {
        for k in -3..=3i64 {
            for l in -3..=3i64 {
                if (k, l) == (0, 0) {
                    continue;
                }
                let c = classify(CartanData::new(a, b).unwrap(), &Weight::from_i64(k, l)).unwrap();
                let text = serde_json::to_string(&c).unwrap();
                let back: OrbitClassification = serde_json::from_str(&text).unwrap();
                assert_eq!(back, c);
            }
        }
    }
}

proptest! {
    #[test]
    fn random_walks_roundtrip(ops in proptest::collection::vec(0u8..4, 0..8)) {
        use lscrystal::lspath::Op;
        use lscrystal::RootIndex;
        let mut p = seed(3, 3, 2, -2);
        for o in ops {
            let op = if o < 2 { Op::E } else { Op::F };
            let i = if o % 2 == 0 { RootIndex::One } else { RootIndex::Two };
            if let Some(q) = p.apply(op, i) {
                p = q;
            }
        }
        prop_assert_eq!(path_from_json(&path_to_json(&p)).unwrap(), p);
    }
}
