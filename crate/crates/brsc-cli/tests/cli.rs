use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn brsc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brsc"))
        .args(args)
        .env("BRSC_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn brsc_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_brsc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn value(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_reports_invariants() {
    let out = brsc(&["check", "cat:desargues"]);
    assert_eq!(out.status.code(), Some(0));
    let v = value(&out);
    assert_eq!(v["vertices"], 10);
    assert_eq!(v["paving"], 2);
    assert_eq!(v["boolean_representable"], true);
    assert_eq!(v["matroid"], true);
    assert_eq!(v["goes_up"], true);
}

#[test]
fn complex_from_stdin_and_file() {
    let text = r#"{"vertices": 4, "facets": [[1,2,3],[3,4]]}"#;
    let out = brsc_stdin(&["flats", "-"], text);
    assert_eq!(out.status.code(), Some(0));
    let from_stdin = value(&out);
    let path = std::env::temp_dir().join(format!("brsc-cli-{}.json", std::process::id()));
    std::fs::write(&path, text).unwrap();
    let from_file = value(&brsc(&["flats", path.to_str().unwrap()]));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(from_stdin, from_file);
    assert!(from_stdin["flats"].as_array().unwrap().contains(&serde_json::json!([1, 2, 3, 4])));
}

#[test]
fn closure_of_a_face() {
    let v = value(&brsc(&["closure", "cat:uniform:k=2,n=4", "12"]));
    assert_eq!(v["closure"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(v["flat"], false);
}

#[test]
fn predicates_exit_one_when_false() {
    assert_eq!(brsc(&["brcheck", "cat:desargues"]).status.code(), Some(0));
    let out = brsc(&["brcheck", "cat:nfb"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(value(&out)["representable"], false);
    assert_eq!(brsc(&["iso", "check", "cat:desargues", "cat:non-desargues"]).status.code(), Some(1));
    assert_eq!(brsc(&["matroid", "check", "cat:uniform"]).status.code(), Some(0));
}

#[test]
fn isomorphism_map_and_canonical_form() {
    let a = r#"{"vertices": ["a","b","c"], "facets": [["a","b"],["c"]]}"#;
    let path = std::env::temp_dir().join(format!("brsc-cli-iso-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"vertices": 3, "facets": [[2,3],[1]]}"#).unwrap();
    let out = brsc_stdin(&["iso", "check", "-", path.to_str().unwrap()], a);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(value(&out)["map"]["c"], "1");
    let canon_a = value(&brsc_stdin(&["iso", "canon", "-"], a))["complex"].clone();
    let canon_b = value(&brsc(&["iso", "canon", path.to_str().unwrap()]))["complex"].clone();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(canon_a, canon_b);
}

#[test]
fn operators_produce_complexes() {
    let v = value(&brsc(&["op", "up", "cat:uniform:k=1,n=3"]));
    assert_eq!(v["vertices"], 3);
    let sum = value(&brsc(&["op", "sum", "cat:uniform:k=1,n=2", "cat:uniform:k=1,n=2"]));
    assert_eq!(sum["facets"], serde_json::json!([[1, 2]]));
    let bd = value(&brsc(&["op", "bd", "--n", "4", "--l", "123", "--d", "2"]));
    assert_eq!(bd["vertices"], 4);
    let t = value(&brsc(&["op", "truncate", "cat:desargues", "2"]));
    assert!(t["facets"].as_array().unwrap().iter().all(|f| f.as_array().unwrap().len() <= 2));
}

#[test]
fn catalog_lists_and_builds() {
    let list = value(&brsc(&["catalog", "list"]));
    assert!(list.as_array().unwrap().iter().any(|e| e["name"] == "desargues"));
    let u = value(&brsc(&["catalog", "get", "uniform", "k=1", "n=3"]));
    assert_eq!(u["facets"], serde_json::json!([[1], [2], [3]]));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(brsc(&["nonsense"]).status.code(), Some(2));
    assert_eq!(brsc(&["catalog", "get", "no-such-complex"]).status.code(), Some(2));
    assert_eq!(brsc(&["catalog", "get", "uniform", "k"]).status.code(), Some(2));
    let out = brsc_stdin(&["check", "-"], "{\"vertices\": 3,\n \"facets\": [[1,2]");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(brsc(&["reproduce", "no-such-tag"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_three() {
    assert_eq!(brsc(&["matroid", "extend", "cat:sme", "--budget", "1"]).status.code(), Some(3));
    let v = value(&brsc(&["matroid", "extend", "cat:sme"]));
    assert_eq!(v["extensions"].as_array().unwrap().len(), 7);
}

#[test]
fn classify_mngu_on_five_points() {
    let out = brsc(&["classify", "mngu", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(value(&out)["classes"], 2);
}

#[test]
fn reproduce_runs_a_tag() {
    let list = value(&brsc(&["reproduce", "--list"]));
    assert!(list.as_array().unwrap().iter().any(|s| s["tag"] == "up"));
    let out = brsc(&["reproduce", "up"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(value(&out)["pass"], true);
}

#[test]
fn tfam_and_codim() {
    let t = value(&brsc(&["tfam", "cat:desargues"]));
    assert_eq!(t["count"], 52);
    let c = value(&brsc(&["codim", "cat:desargues"]));
    assert_eq!(c["codimension"], 1);
    assert_eq!(brsc(&["tbrsc", "cat:desargues"]).status.code(), Some(0));
}
