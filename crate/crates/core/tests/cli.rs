use std::process::Command;

use commutator_core::io::{parse_algebra, parse_ndjson, Status};
use commutator_core::properties::{recheck_violation, PropertyReport};
use commutator_core::{fixtures, Partition};

fn commcalc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_commcalc")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_codes() {
    assert_eq!(commcalc(&["con", "z2s2"]).0, 0);
    let (code, out, _) = commcalc(&["centralize", "z2s2", "0,1|2,3", "0,2|1,3", "0,2|1|3"]);
    assert_eq!(code, 2);
    assert!(out.starts_with("fails"));
    assert_eq!(commcalc(&["centralize", "z2s2", "0,2|1,3", "0,2|1,3", "0,2|1|3"]).0, 0);
    let (code, _, err) = commcalc(&["con", "no-such-algebra"]);
    assert_eq!(code, 1);
    assert!(err.contains("error"));
    assert_eq!(commcalc(&["commutator", "z2s2", "0,3|1|2", "0,1|2,3"]).0, 1);
    assert_eq!(commcalc(&["con", "z2s2", "--budget-lattice", "0"]).0, 1);
    assert_eq!(commcalc(&["--help"]).0, 0);
}

#[test]
fn json_records_round_trip() {
    let (code, out, _) = commcalc(&["commutator", "z2s2", "0,2|1,3", "0,2|1,3", "--json"]);
    assert_eq!(code, 0);
    let recs = parse_ndjson(&out).unwrap();
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].status, Status::Ok);
    assert_eq!(recs[0].data["commutator"], "0|1|2|3");
    let again = commutator_core::io::emit_ndjson(&recs).unwrap();
    assert_eq!(again, out);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["find-term", "z2s2", "weak-difference", "--json"][..],
        &["better-pentagon", "z2s2", "--json"],
        &["check", "z2s2", "--json"],
    ] {
        assert_eq!(commcalc(args).1, commcalc(args).1);
    }
}

#[test]
fn files_and_directories() {
    let dir = tempfile::tempdir().unwrap();
    let (_, out, _) = commcalc(&["quotient", "z2s2", "0,1|2,3", "--json"]);
    let rec = parse_ndjson(&out).unwrap().remove(0);
    let q = dir.path().join("b_quotient.alg");
    std::fs::write(&q, rec.data["algebra"].to_string()).unwrap();
    let (_, prod, _) = commcalc(&["product", "z2s2", "z2s2", "--json"]);
    let p = dir.path().join("a_product.alg");
    std::fs::write(&p, parse_ndjson(&prod).unwrap().remove(0).data.to_string()).unwrap();
    assert_eq!(parse_algebra(&p).unwrap().size(), 16);
    std::fs::write(dir.path().join("ignored.txt"), "x").unwrap();

    let (code, out, _) = commcalc(&["con", dir.path().to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let recs = parse_ndjson(&out).unwrap();
    assert_eq!(recs.len(), 2);
    assert!(recs[0].input.ends_with("a_product.alg"));
    assert!(recs[1].input.ends_with("b_quotient.alg"));

    std::fs::write(dir.path().join("c_bad.alg"), "{\"size\": 2,").unwrap();
    let (code, out, _) = commcalc(&["con", dir.path().to_str().unwrap(), "--json"]);
    assert_eq!(code, 1);
    let recs = parse_ndjson(&out).unwrap();
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[2].status, Status::Error);
}

#[test]
fn violations_recheck() {
    let (code, out, _) = commcalc(&["check", "z2s2", "--json"]);
    assert_eq!(code, 2);
    let reports: Vec<PropertyReport> = serde_json::from_value(parse_ndjson(&out).unwrap().remove(0).data).unwrap();
    assert_eq!(reports.len(), 11);
    let a = fixtures::z2s2();
    let failing: Vec<usize> = reports.iter().filter(|r| !r.holds).map(|r| r.id).collect();
    assert_eq!(failing, vec![7, 8, 9, 10]);
    for r in reports.iter().filter(|r| !r.holds) {
        assert!(recheck_violation(&a, r).unwrap(), "{r:?}");
    }
}

#[test]
fn pipeline_commands() {
    let (code, out, _) = commcalc(&["sdfail", "z2s2", "--json"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = commcalc(&["herringbone", "z2s2"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(commcalc(&["lemma410", "z2s2"]).0, 0);
    assert_eq!(commcalc(&["gadget-left", "z2s2"]).0, 0);
    assert_eq!(commcalc(&["gadget-right", "z2s2"]).0, 0);
    let (code, _, _) = commcalc(&["better-pentagon", "z4"]);
    assert_eq!(code, 1);
    let (_, out, _) = commcalc(&["cg", "z2s2", "0", "2"]);
    assert_eq!(out.trim().parse::<Partition>().unwrap(), fixtures::z2s2_delta());
}
