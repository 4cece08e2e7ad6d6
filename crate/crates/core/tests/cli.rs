use std::process::{Command, Output};

use serde_json::Value;

fn branchkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_branchkit")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn constant_output_is_exact() {
    let out = branchkit(&["constant", "--l2", "2", "--l3", "8", "--delta", "0", "--m", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"parity":-1,"scalar":"3"}"#);
}

#[test]
fn critical_lists_the_region() {
    let out = branchkit(&["critical", "--l2", "2", "--l3", "8"]);
    assert_eq!(json(&out)["m"], serde_json::json!([5, 6]));
    let out = branchkit(&["critical", "--l2", "2", "--l3", "8", "--m", "6"]);
    let v = json(&out);
    assert_eq!(v["main_constant"]["scalar"], "-3*i");
    assert_eq!(v["cup_constants"]["prefactor"], "i");
}

#[test]
fn branch_audit_of_one_one_one() {
    let v = json(&branchkit(&["branch", "--w1p", "1", "--w1m", "1", "--w2", "1"]));
    assert_eq!(v["dim_formula"], 8);
    assert_eq!(v["nabla_rank"], 8);
    assert_eq!(v["xi2"].as_array().unwrap().len(), 4);
}

#[test]
fn calculators_emit_json() {
    for args in [
        vec!["gamma", "--l2", "2", "--l3", "8"],
        vec!["pmatrix", "--lambda3", "5"],
        vec!["mmatrix", "--lambda", "2", "--cayley", "1/2,0,-1"],
        vec!["iwasawa", "--matrix", "2,1,0,0,1,0,-1,0,3"],
    ] {
        let out = branchkit(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(json(&out).is_object(), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(branchkit(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(branchkit(&["constant", "--l2", "2", "--l3", "8", "--m", "7"]).status.code(), Some(2));
    assert_eq!(branchkit(&["iwasawa", "--matrix", "1,2"]).status.code(), Some(2));
    assert_eq!(branchkit(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_reports_are_reproducible() {
    let dir = std::env::temp_dir().join(format!("branchkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let paths = [dir.join("a.json"), dir.join("b.json")];
    for p in &paths {
        let out = branchkit(&["verify", "--suite", "lfactors", "--max-weight", "12", "--seed", "9", "--json", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let a = std::fs::read(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read(&paths[1]).unwrap());
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["schema"], "branchkit/1");
    assert_eq!(v["pass"], v["count"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn geom_suite_reports_failures() {
    let out = branchkit(&["verify", "--suite", "geom"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["failures"].as_array().unwrap().len(), 2);
}
