use std::process::{Command, Output};

use serde_json::Value;

fn cubek3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubek3")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = cubek3(args);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is one JSON object");
    (v, out.status.code().unwrap())
}

#[test]
fn classify_reports_the_case() {
    let (v, code) = json(&["classify", "--f5", "1,0,0,0,0,-1", "--f2", "1,0,-1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "classify");
    assert_eq!(v["result"]["case"]["case_id"], "2");
    assert_eq!(v["result"]["stability"]["verdict"], "Stable");
    assert_eq!(v["result"]["fibers"]["euler_total"], 24);
}

#[test]
fn cusp_is_strictly_semistable() {
    let (v, code) = json(&["classify", "--f5", "0,0,0,1,0,0", "--f2", "1,0,0", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["case"]["case_id"], "CUSP");
    assert_eq!(v["result"]["fibers"], Value::Null);
}

#[test]
fn exit_codes() {
    // x0 x1^4 has a root of order four
    let out = cubek3(&["classify", "--f5", "0,1,0,0,0,0", "--f2", "1,0,0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = cubek3(&["classify", "--f5", "1,0,1/0,0,0,0", "--f2", "1,0,0"]);
    assert_eq!(out.status.code(), Some(64));
    let out = cubek3(&["classify", "--f5", "1,0,0", "--f2", "1,0,0"]);
    assert_eq!(out.status.code(), Some(64));
    assert_eq!(cubek3(&["orbits", "--k", "7"]).status.code(), Some(64));
    assert_eq!(cubek3(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(cubek3(&["--help"]).status.code(), Some(0));
    assert_eq!(cubek3(&["--version"]).status.code(), Some(0));
    assert_eq!(cubek3(&["verify", "--only", "nothing"]).status.code(), Some(64));
    let (v, code) = json(&["analyze", "--json", "--cubic", "1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1",
        "--l", "1,0,0,0;0,1,0,0", "--m", "0,0,1,0;0,0,0,1"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "domain");
}

#[test]
fn orbits_index_sum() {
    let (v, code) = json(&["orbits", "--k", "2", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["orbits"].as_array().unwrap().len(), 4);
    assert_eq!(v["result"]["index_sum"], 27);
}

#[test]
fn from_points_and_analyze_agree() {
    let pts = "1,2,3;-1,4,1;2,-3,5;3,1,-2;0,5,2;4,4,1";
    let (v, code) = json(&["from-points", "--points", pts, "--json"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    let cubic: Vec<&str> = r["cubic"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    let (w, code) = json(&[
        "analyze", "--json", "--cubic", &cubic.join(","),
        "--l", r["l"].as_str().unwrap(), "--m", r["m"].as_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(w["result"]["case"], r["analysis"]["case"]);
    assert_eq!(r["lines"].as_array().unwrap().len(), 21);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tables"][..],
        &["lines", "--nodes", "3", "--json"],
        &["lattice", "--expr", "U+E6+A2^3", "--complement", "A2(-1)+A2^3"],
        &["from-points", "--points", "1,2,3;-1,4,1;2,-3,5;3,1,-2;0,5,2;4,4,1", "--pair", "1,3,1,4"],
    ] {
        let a = cubek3(args);
        let b = cubek3(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verify_passes_and_matches_the_schema() {
    let (v, code) = json(&["verify", "--json"]);
    assert_eq!(code, 0, "{v:#}");
    assert_eq!(v["result"]["failed"], 0);
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 11);
    assert!(v["result"].get("millis").is_none());
    let schema: Value = serde_json::from_str(include_str!("../../../docs/verify.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("valid schema");
    assert!(validator.is_valid(&v));

    let (t, _) = json(&["verify", "--json", "--timing", "--only", "norm-census"]);
    assert!(t["result"]["millis"].is_u64());
    assert!(validator.is_valid(&t));
}
