use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn qhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhopf")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn full_suite_on_h8_plus() {
    let out = qhopf(&["--format", "json", "verify", "catalog:H8+", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["passed"], true);
    assert_eq!(report["failed"], 0);
    assert!(report["rows"].as_u64().unwrap() >= 60);
}

#[test]
fn double_suite_on_h2() {
    let out = qhopf(&["verify", "catalog:H2", "--suite", "double"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS semisimplicity_criteria_agree"));
}

#[test]
fn right_cointegral_of_h8_plus() {
    let out = qhopf(&["cointegrals", "catalog:H8+", "--side", "right"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("normalized: (1/2+1/2*i)·P_{x^3} + (1/2-1/2*i)·P_{gx^3}"), "{}", stdout(&out));
}

#[test]
fn cointegrals_as_json() {
    let out = qhopf(&["--format", "json", "cointegrals", "catalog:H8-", "--side", "right"]);
    let v = json(&out);
    let normalized: Vec<&str> = v["right"]["normalized"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(normalized, ["0", "0", "0", "1/2-1/2*i", "0", "0", "0", "1/2+1/2*i"]);
    assert_eq!(v["g"][0], "1/2-1/2*i");
}

#[test]
fn integrals_of_h2() {
    let out = qhopf(&["integrals", "catalog:H2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("left integral:  1 + g"));
    assert!(text.contains("unimodular: true"));
}

#[test]
fn exports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["H2", "H8+", "H8-", "kZ2-hopf"] {
        let src = format!("catalog:{name}");
        let a = dir.path().join("a.json");
        assert_eq!(qhopf(&["export", &src, a.to_str().unwrap()]).status.code(), Some(0));
        let again = qhopf(&["export", &src, "-"]);
        assert_eq!(fs::read_to_string(&a).unwrap(), stdout(&again), "{name}");
        let reread = qhopf(&["export", a.to_str().unwrap(), "-"]);
        assert_eq!(stdout(&reread), stdout(&again), "{name}");
    }
    for name in ["H2", "kZ2-hopf"] {
        let src = format!("catalog:{name}");
        let a = dir.path().join("da.json");
        let b = dir.path().join("db.json");
        assert_eq!(qhopf(&["double", &src, "--export", a.to_str().unwrap()]).status.code(), Some(0));
        assert_eq!(qhopf(&["double", &src, "--export", b.to_str().unwrap()]).status.code(), Some(0));
        assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap(), "{name}");
        let verify = qhopf(&["verify", a.to_str().unwrap(), "--suite", "axioms"]);
        assert_eq!(verify.status.code(), Some(0), "{}", stdout(&verify));
    }
}

#[test]
fn failing_axioms_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    let good = stdout(&qhopf(&["export", "catalog:H2", "-"]));
    let broken = good.replacen("[0,0,0,\"3/4\"]", "[0,0,0,\"1\"]", 2);
    fs::write(&path, broken).unwrap();
    let out = qhopf(&["--format", "json", "verify", path.to_str().unwrap(), "--suite", "axioms"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["passed"], false);
    assert!(report["failed"].as_u64().unwrap() > 0);
    assert_eq!(qhopf(&["integrals", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn usage_and_schema_errors_exit_two() {
    assert_eq!(qhopf(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qhopf(&["verify", "catalog:H2", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(qhopf(&["verify", "catalog:H3"]).status.code(), Some(2));
    assert_eq!(qhopf(&["verify", "/nonexistent/h.json"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\"name\": \"x\"}").unwrap();
    let out = qhopf(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("schema error at $"));
}

#[test]
fn exit_code_tracks_json_verdict() {
    for name in ["H2", "kZ2-hopf"] {
        let out = qhopf(&["--format", "json", "verify", &format!("catalog:{name}"), "--suite", "canonical"]);
        let passed = json(&out)["passed"].as_bool().unwrap();
        assert_eq!(out.status.code() == Some(0), passed);
    }
}

#[test]
fn single_identities_by_name() {
    let out = qhopf(&["verify", "catalog:H8+", "--identity", "right_integral_u", "--identity", "twist_pentagon"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS right_integral_u") && text.contains("PASS twist_pentagon"), "{text}");
    assert!(text.ends_with("2 rows, 0 failed\n"));
    assert_eq!(qhopf(&["verify", "catalog:H2", "--identity", "no_such_identity"]).status.code(), Some(2));
}
