use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

fn hfsplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hfsplit")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hfsplit(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    hfsplit(args).status.code().expect("exited normally")
}

#[test]
fn reproduce_paper_prints_both_tables_quickly() {
    let start = Instant::now();
    let md = stdout(&["reproduce-paper"]);
    assert!(start.elapsed() < Duration::from_secs(5));

    for row in [
        "| j = 0 |    22 |    14 |    14 |",
        "| j = 1 |    18 |     6 |    20 |",
        "| j = 2 |    10 |    16 |    22 |",
        "| j = 3 |    10 |    22 |    16 |",
        "| j = 4 |    18 |    20 |     6 |",
        "| j = 0 |    22 |    22 |    22 |",
        "| j = 1 |    22 |    26 |    12 |",
        "| j = 2 |    22 |     8 |     2 |",
        "| j = 3 |    22 |     2 |     8 |",
        "| j = 4 |    22 |    12 |    26 |",
    ] {
        assert!(md.contains(row), "missing row {row}\n{md}");
    }
    assert!(md.contains("obstructed: true\n"));
    assert!(md.contains("slice_obstructed: true\n"));
}

#[test]
fn output_is_deterministic() {
    for format in ["md", "csv", "json"] {
        let a = hfsplit(&["reproduce-paper", "--format", format]);
        let b = hfsplit(&["reproduce-paper", "--format", format]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "format {format}");
    }
    let a = hfsplit(&["dtable", "--n", "15", "--format", "json"]);
    let b = hfsplit(&["dtable", "--n", "15", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn reproduce_json_is_exact() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["reproduce-paper", "--format", "json"])).unwrap();
    assert_eq!(v["N"], 225);
    assert_eq!(v["d_values"][0][0], "22");
    assert_eq!(v["obstructed"], true);
}

#[test]
fn appendix_convention_keeps_verdict() {
    let md = stdout(&["reproduce-paper", "--convention", "appendix"]);
    assert!(md.contains("| j = 0 |   -22 |   -14 |   -14 |"));
    assert!(md.contains("obstructed: true\n"));
}

#[test]
fn pretzel_determinant() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["alexander", "--pretzel", "15", "--format", "json"])).unwrap();
    assert_eq!(v["determinant"], 225);
    assert_eq!(v["polynomial"][0], serde_json::json!([0, 1]));
}

#[test]
fn cyclotomic_split_identity() {
    let md = stdout(&["alexander", "--split", "--p", "3", "--q", "5"]);
    assert!(md.contains("phi_6(t) = t^2 - t + 1"));
    assert!(md.contains("product = (t^15 + 1)/(t + 1): true"));
}

#[test]
fn trivial_knot_parameter() {
    let csv = stdout(&["dtable", "--n", "1", "--format", "csv"]);
    assert_eq!(csv, "m,d\n0,0\n");
}

#[test]
fn rejected_inputs_exit_with_two() {
    assert_eq!(exit_code(&["no-such-command"]), 2);
    assert_eq!(exit_code(&["dtable", "--bogus"]), 2);
    assert_eq!(exit_code(&["dtable", "--n", "7"]), 2);
    assert_eq!(exit_code(&["obstruct-split", "--n", "21", "--p", "3", "--q", "5"]), 2);
    assert_eq!(exit_code(&["alexander", "--torus", "4"]), 2);
    assert_eq!(exit_code(&["alexander", "--split", "--p", "3"]), 2);
    assert_eq!(exit_code(&["staircase", "--kind", "consecutive", "--n", "14"]), 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.json");
    let out = hfsplit(&[
        "obstruct-split",
        "--p",
        "3",
        "--q",
        "5",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["obstructed"], true);
}

fn write_levels(kind: &str, path: &Path) {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["staircase", "--kind", kind, "--format", "json"])).unwrap();
    std::fs::write(path, v["levels"].to_string()).unwrap();
}

#[test]
fn staircase_files_match_built_in_complex() {
    let dir = tempfile::tempdir().unwrap();
    let torus = dir.path().join("torus.json");
    let whitehead = dir.path().join("whitehead.json");
    write_levels("torus-14-15", &torus);
    write_levels("whitehead-22", &whitehead);

    let from_files = stdout(&[
        "dtable",
        "--n",
        "15",
        "--format",
        "csv",
        "--staircase-file",
        torus.to_str().unwrap(),
        "--staircase-file",
        whitehead.to_str().unwrap(),
    ]);
    let built_in = stdout(&["dtable", "--n", "15", "--format", "csv"]);
    assert_eq!(from_files, built_in);
    assert_eq!(from_files.lines().count(), 226);
}

#[test]
fn malformed_staircase_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "[[0, 2], [1, 1]]").unwrap();
    assert_eq!(exit_code(&["dtable", "--n", "15", "--staircase-file", path.to_str().unwrap()]), 2);
}

#[test]
fn metabolizer_candidates() {
    let md = stdout(&["obstruct-metabolizer", "--n", "15"]);
    assert!(md.contains("slice_obstructed: true"));
}
