//! End-to-end tests of the groth-kit binary: output shapes, exit codes,
//! and the scan determinism contract.

use std::process::{Command, Output};

fn kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groth-kit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// wall_time_ms is the one nondeterministic field; blank it before
/// comparing scan outputs.
fn strip_wall_time(jsonl: &str) -> String {
    jsonl
        .lines()
        .map(|line| {
            let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
            v["wall_time_ms"] = serde_json::json!(0);
            v.to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn compute_schubert_21() {
    let out = kit(&["compute", "21", "--kind", "schubert"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x1");
}

#[test]
fn compute_json_terms() {
    let out = kit(&["compute", "1342", "--kind", "groth", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms[0][0], serde_json::json!([1, 1, 0, 0]));
    assert_eq!(terms[0][1], "1");
    assert_eq!(terms[3][0], serde_json::json!([1, 1, 1, 0]));
    assert_eq!(terms[3][1], "-2");
}

#[test]
fn compute_engines_match() {
    let dd = kit(&["compute", "1342", "--variant", "double", "--engine", "dd"]);
    let bpd = kit(&["compute", "1342", "--variant", "double", "--engine", "bpd"]);
    assert!(dd.status.success() && bpd.status.success());
    assert_eq!(stdout(&dd), stdout(&bpd));
}

#[test]
fn compute_rejects_bad_permutation() {
    let out = kit(&["compute", "1322"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_subcommand_exits_1() {
    let out = kit(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bpds_count_and_render() {
    let out = kit(&["bpds", "1342", "--count"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3");
    let out = kit(&["bpds", "1342", "--render"]);
    assert!(out.status.success());
    let text = stdout(&out);
    // three 4x4 grids separated by blank lines
    assert_eq!(text.lines().filter(|l| l.len() == 4).count(), 12);
}

#[test]
fn classify_reports_witness() {
    let out = kit(&["classify", "1342", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["groth"]["patterns"], serde_json::json!(false));
    assert_eq!(v["groth"]["witness"]["coeff"], "-2");
    assert_eq!(v["schubert"]["patterns"], serde_json::json!(true));
}

#[test]
fn factor_refuses_non_zero_one() {
    let out = kit(&["factor", "1342"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn factor_paper_example() {
    let out = kit(&["factor", "58326147"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lambda"], serde_json::json!([4, 4, 2, 1, 1, 0, 0, 0]));
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);
    assert_eq!(v["verified"], serde_json::json!(true));
}

#[test]
fn factor_double_variant() {
    let out = kit(&["factor", "132", "--variant", "double"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verified"], serde_json::json!(true));
}

#[test]
fn scan_is_deterministic_across_workers() {
    let a = kit(&["scan", "--n", "4", "--workers", "1"]);
    let b = kit(&["scan", "--n", "4", "--workers", "4"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(strip_wall_time(&stdout(&a)), strip_wall_time(&stdout(&b)));
    assert_eq!(stdout(&a).lines().count(), 24);
}

#[test]
fn scan_engines_check() {
    let out = kit(&["scan", "--n", "4", "--checks", "engines"]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["engines_agree"], serde_json::json!(true));
        assert_eq!(v["lorentzian"], serde_json::json!("skipped"));
    }
}

#[test]
fn scan_n1_single_record() {
    let out = kit(&["scan", "--n", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1);
    let v: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(v["perm"], "1");
    assert_eq!(v["factorization_verified"], serde_json::json!(true));
}

#[test]
fn scan_resume_skips_existing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.jsonl");
    let full = kit(&["scan", "--n", "3", "--out", path.to_str().unwrap()]);
    assert!(full.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    assert_eq!(body.lines().count(), 6);
    // drop the last two records and resume
    let kept: Vec<&str> = body.lines().take(4).collect();
    std::fs::write(&path, format!("{}\n", kept.join("\n"))).unwrap();
    let resumed = kit(&[
        "scan", "--n", "3", "--out", path.to_str().unwrap(), "--resume",
    ]);
    assert!(resumed.status.success());
    let after = std::fs::read_to_string(&path).unwrap();
    assert_eq!(after.lines().count(), 6);
    assert_eq!(strip_wall_time(&after), strip_wall_time(&body));
}

#[test]
fn scan_rejects_out_of_range_n() {
    let out = kit(&["scan", "--n", "8"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_quick_passes() {
    let out = kit(&["verify", "--quick"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches(" pass ").count(), 11);
    assert!(text.contains("all 11 criteria pass"));
}
