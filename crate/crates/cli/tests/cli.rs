//! End-to-end tests against the compiled binary: exit codes, output shapes,
//! and the file formats.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coprime-divisor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coprime-divisor"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn analyze_divisor_group_exits_zero() {
    let out = run(&["analyze", "S 7"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("four-prime-theorem"), "{text}");
    assert!(text.contains("divisor graph"));
    assert!(text.contains("orientation:"));
}

#[test]
fn analyze_non_divisor_group_exits_one() {
    let out = run(&["analyze", "Z 30"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("NOT a divisor graph"), "{text}");
    assert!(text.contains("obstruction:"));
}

#[test]
fn analyze_spectrum_group_with_certificate() {
    let out = run(&["analyze", "SPEC M23 : 2,3,4,5,6,7,8,11,14,15,23"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("divisor graph (forcing)"), "{text}");
    assert!(text.contains("labels:"));
}

#[test]
fn analyze_rejects_bad_specs() {
    for bad in ["W 4", "Z", "D 13", "SPEC X : 6"] {
        let out = run(&["analyze", bad]);
        assert_eq!(out.status.code(), Some(2), "spec `{bad}`: {}", stdout(&out));
        assert!(stderr(&out).contains("error"), "spec `{bad}`");
    }
}

#[test]
fn analyze_json_is_deterministic() {
    let first = run(&["analyze", "--json", "D 12"]);
    let second = run(&["analyze", "--json", "D 12"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
    let value: serde_json::Value = serde_json::from_str(&stdout(&first)).expect("valid JSON");
    assert_eq!(value["verdict"]["is_divisor"], serde_json::json!(true));
    assert_eq!(value["verdict"]["method"], serde_json::json!("two-prime-theorem"));
    assert_eq!(value["radicals"], serde_json::json!([2, 3, 6]));
}

#[test]
fn analyze_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot_path = dir.path().join("radicals.dot");
    let out = run(&["analyze", "S 7", "--dot", dot_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let dot = fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("digraph radicals {"), "{dot}");
    assert!(dot.contains("->"));
}

#[test]
fn graph_is_divisor_on_net_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("net.txt");
    fs::write(&path, "a b\na c\nb c\nc x\nb y\na z\n").unwrap();
    let out = run(&["graph", "is-divisor", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("NOT a divisor graph"), "{text}");
    assert!(text.contains("witness:"), "{text}");

    let oracle = run(&["graph", "is-divisor", "--oracle", path.to_str().unwrap()]);
    assert_eq!(oracle.status.code(), Some(1));
    assert!(stdout(&oracle).contains("brute-force"));
}

#[test]
fn graph_label_k4_gets_the_chain_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.txt");
    fs::write(&path, "a b\na c\na d\nb c\nb d\nc d\n").unwrap();
    let out = run(&["graph", "label", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(
        value["labels"],
        serde_json::json!({"a": "2", "b": "6", "c": "30", "d": "210"})
    );
}

#[test]
fn graph_label_single_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.txt");
    fs::write(&path, "v\n").unwrap();
    let out = run(&["graph", "label", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(value["labels"], serde_json::json!({"v": "2"}));
}

#[test]
fn graph_label_refuses_non_divisor_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    fs::write(&path, "a b\nb c\nc d\nd e\ne a\n").unwrap();
    let out = run(&["graph", "label", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not a divisor graph"));
}

#[test]
fn graph_commands_reject_bad_input() {
    let out = run(&["graph", "is-divisor", "/nonexistent/file.txt"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "a b c d\n").unwrap();
    let out = run(&["graph", "is-divisor", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // oracle cap: 10 vertices is one too many
    let path = dir.path().join("big.txt");
    let mut text = String::new();
    for i in 0..10 {
        for j in i + 1..10 {
            text.push_str(&format!("v{i} v{j}\n"));
        }
    }
    fs::write(&path, text).unwrap();
    let out = run(&["graph", "is-divisor", "--oracle", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("capped"));
}

#[test]
fn graph_json_output_carries_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    fs::write(&path, "a b\nb c\n").unwrap();
    let out = run(&["graph", "is-divisor", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(value["verdict"]["is_divisor"], serde_json::json!(true));
    assert!(value["verdict"]["certificate"]["labels"].is_object());
}

#[test]
fn verify_theorems_writes_reports_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &["verify-theorems", "--family", "three-prime", "--out", "reports"],
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("three-prime"));
    let report: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("reports/three-prime.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(report["all_agree"], serde_json::json!(true));
    assert_eq!(report["cases"].as_array().unwrap().len(), 8);
    assert!(dir.path().join("reports/summary.json").exists());
}

#[test]
fn verify_theorems_respects_thread_env() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_coprime-divisor"))
        .current_dir(dir.path())
        .env("COPRIME_DIVISOR_THREADS", "2")
        .args(["verify-theorems", "--family", "dihedral", "--max-n", "40", "--out", "r"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let bad = Command::new(env!("CARGO_BIN_EXE_coprime-divisor"))
        .current_dir(dir.path())
        .env("COPRIME_DIVISOR_THREADS", "many")
        .args(["verify-theorems", "--family", "dihedral", "--max-n", "10", "--out", "r"])
        .output()
        .expect("binary runs");
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_theorems_sporadic_family() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &["verify-theorems", "--family", "sporadic", "--out", "reports", "--json"],
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let cases = reports[0]["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 26);
    let positives = cases.iter().filter(|c| c["recognizer"] == serde_json::json!(true)).count();
    assert_eq!(positives, 4);
}

#[test]
fn unknown_family_is_a_usage_error() {
    let out = run(&["verify-theorems", "--family", "astrology"]);
    assert_eq!(out.status.code(), Some(2));
}
