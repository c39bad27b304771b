//! Command-line contract tests: flags, output formats, and exit codes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_touchard"))
}

#[test]
fn list_shows_catalog_without_hidden_entries() {
    let out = bin().arg("list").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("touchard"));
    assert!(text.contains("gen-touchard"));
    assert!(text.contains("exact+numeric"));
    assert!(!text.contains("fault-injection-demo"));
}

#[test]
fn verify_summary_line_shape() {
    let out = bin()
        .args(["verify", "--ids", "touchard", "--n-max", "40"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("touchard: 41/41 Equal"), "got: {text}");
}

#[test]
fn verify_all_exact_passes_at_small_n() {
    let status = bin()
        .args(["verify", "--ids", "all", "--n-max", "6", "--backend", "exact"])
        .stdout(std::process::Stdio::null())
        .status()
        .unwrap();
    assert!(status.success());
}

#[test]
fn csv_report_has_one_row_per_instance() {
    let out = bin()
        .args([
            "verify",
            "--ids",
            "touchard",
            "--n-max",
            "5",
            "--output",
            "csv",
        ])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "id,params,outcome,lhs,rhs,diff,reason");
    assert_eq!(lines.len(), 1 + 6, "6 instances for n in [0, 5]");
    assert!(lines[1].starts_with("touchard,n=0,equal"));
}

#[test]
fn exact_backend_rejects_non_lattice_values() {
    let out = bin()
        .args([
            "verify",
            "--ids",
            "gen-touchard",
            "--r-values",
            "1/3",
            "--backend",
            "exact",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("half-integer"), "got: {err}");
}

#[test]
fn numeric_backend_requires_numeric_capable_ids() {
    let out = bin()
        .args(["verify", "--ids", "donaghey", "--backend", "numeric"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn numeric_backend_sweeps_lattice_grid_with_skips() {
    let out = bin()
        .args([
            "verify",
            "--ids",
            "gen-touchard",
            "--backend",
            "numeric",
            "--n-max",
            "3",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("skipped"), "default grid has excluded points: {text}");
}

#[test]
fn table_emits_exact_and_decimal_columns() {
    let out = bin()
        .args(["table", "--name", "catalan", "--max", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "index,exact,decimal");
    assert_eq!(lines.len(), 7);
    assert!(lines[5].starts_with("4,14,1.4"));
}

#[test]
fn report_file_is_replaced_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    std::fs::write(&path, "stale").unwrap();
    let status = bin()
        .args([
            "verify",
            "--ids",
            "touchard",
            "--n-max",
            "3",
            "--output",
            "json",
            "--out",
        ])
        .arg(&path)
        .stdout(std::process::Stdio::null())
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with('{'));
    // no temporary droppings left behind
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn selftest_passes_and_prints_per_check_lines() {
    let out = bin().arg("selftest").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS  identities/catalog-sweep"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn tolerance_below_precision_floor_is_rejected() {
    let out = bin()
        .args([
            "verify",
            "--ids",
            "gen-touchard",
            "--backend",
            "numeric",
            "--precision",
            "64",
            "--tol",
            "1e-300",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
