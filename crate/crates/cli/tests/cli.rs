use std::process::{Command, Output};

use minfaith_core::chartab::io::parse_ctbl;
use minfaith_core::families::build_group;
use serde_json::Value;

fn minfaith(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minfaith"))
        .args(args)
        .env_remove("MINFAITH_DATA")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn degrees_json(spec: &str) -> Value {
    let out = minfaith(&["degrees", spec, "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn degrees_examples() {
    let r = degrees_json("abelian:4,3");
    assert_eq!((r["c"].as_u64(), r["q"].as_u64(), r["mu"].as_u64()), (Some(7), Some(7), Some(7)));
    assert_eq!(r["formulas"]["abelian-c6-rule"], 7);

    let r = degrees_json("extraspecial:2,1,q");
    assert_eq!((r["c"].as_u64(), r["q"].as_u64(), r["mu"].as_u64()), (Some(4), Some(8), Some(8)));

    let r = degrees_json("product:(extraspecial:3,1,p)x(abelian:9)");
    assert_eq!(r["c"], 18);
    assert_eq!(r["formulas"]["vz-center-basis"], 18);
    for field in ["order", "witness_c", "witness_mu", "profile"] {
        assert!(!r[field].is_null(), "{field}");
    }
}

#[test]
fn analyze_examples() {
    let text = stdout(&minfaith(&["analyze", "abelian:6"]));
    assert!(text.contains("abelian: yes"));
    assert!(text.contains("nilpotency class: 1"));

    let text = stdout(&minfaith(&["analyze", "extraspecial:3,1,p"]));
    assert!(text.contains("VZ: yes"));
    assert!(text.contains("Camina: yes, class 2"));
    assert!(text.contains("r = d(Z) = 1, k = d(G') = 1"));
}

#[test]
fn chartab_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.ctbl");
    let out = minfaith(&["chartab", "extraspecial:2,1,q", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let g = build_group("extraspecial:2,1,q").unwrap();
    let table = parse_ctbl(&std::fs::read_to_string(&path).unwrap(), &g).unwrap();
    assert_eq!(table.characters.len(), 5);
}

#[test]
fn exit_codes() {
    assert_eq!(minfaith(&["analyze", "nosuch:1"]).status.code(), Some(2));
    assert_eq!(minfaith(&["analyze", "abelian:x"]).status.code(), Some(2));
    assert_eq!(minfaith(&["--bound", "10", "analyze", "abelian:20"]).status.code(), Some(3));
    assert_eq!(minfaith(&["--bound", "0", "analyze", "abelian:2"]).status.code(), Some(2));
    assert_eq!(minfaith(&["analyze", "file:does-not-exist.grp"]).status.code(), Some(2));
}

#[test]
fn json_errors_are_structured() {
    let out = minfaith(&["--format", "json", "--bound", "10", "degrees", "abelian:20"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["exit_code"], 3);
}

#[test]
fn abelian_corpus_verification() {
    let out = minfaith(&["verify-theorems", "--corpus", "abelian", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let status = |name: &str| {
        v["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap()["status"].clone()
    };
    assert_eq!(status("abelian-t"), "pass");
    assert_eq!(status("abelian-c6-rule"), "pass");
    assert_eq!(status("camina3"), "skipped");
    assert!(!stdout(&out).contains("elapsed"));
}

#[test]
fn missing_camina3_instance_is_an_explicit_skip() {
    let out = minfaith(&["verify-theorems", "--corpus", "vz", "--include-camina3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let line = text.lines().find(|l| l.contains("camina3")).unwrap();
    assert!(line.starts_with("SKIPPED"), "{line}");
    assert!(line.contains("camina3.grp"), "{line}");
}
