use std::process::{Command, Output};

use serde_json::Value;

fn run<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oscvar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const SMALL: [&str; 10] = ["--n", "3", "--n1", "1", "--n2", "2", "--l1", "-1", "--l2", "-1"];

fn with<'a>(cmd: &'a str, extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend(SMALL);
    v.extend(extra);
    v
}

#[test]
fn classify_reports_irreducible() {
    let out = run(&with("classify", &[]));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["checks"][0]["payload"]["irreducible"], true);
    assert_eq!(v["spec"]["n"], 3);
    assert_eq!(v["spec"]["l1"], -1);
}

#[test]
fn filtration_dimensions_and_csv() {
    let out = run(&with("filtration", &["--kmax", "2"]));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["checks"][0]["payload"]["dims"], serde_json::json!([1, 4, 10]));
    let out = run(&with("filtration", &["--kmax", "2", "--out", "csv"]));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "k,dim_Mk,delta\n0,1,1\n1,4,3\n2,10,6\n");
}

#[test]
fn csv_for_non_tabular_command_is_a_usage_error() {
    let out = run(&with("classify", &["--out", "csv"]));
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_or_invalid_parameters_are_usage_errors() {
    assert_eq!(run(&["basis", "--n", "3"]).status.code(), Some(2));
    let bad = run(&["basis", "--n", "3", "--n1", "3", "--n2", "2", "--l1", "0", "--l2", "0"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn main_theorem_on_equal_blocks_passes() {
    let out = run(&["verify-main-theorem", "--n", "4", "--n1", "2", "--n2", "2", "--l1", "-1", "--l2", "-1", "--kmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["checks"][0]["payload"]["branch"], "EqualBlocks");
    assert_eq!(v["overall"], "pass");
}

#[test]
fn failing_check_exits_nonzero() {
    let out = run(&with("gkdim", &["--kmax", "3"]));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["overall"], "fail");
}

#[test]
fn unsupported_regime_is_skipped_with_zero_exit() {
    let out = run(&["annihilator", "--n", "3", "--n1", "2", "--n2", "2", "--l1", "1", "--l2", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["status"], "skipped");
        assert!(c["reason"].as_str().unwrap().contains("unsupported"));
    }
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = with("chain3", &["--seed", "11"]);
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("elapsed_ms"));
    let timed = run(&with("chain3", &["--seed", "11", "--timings"]));
    assert!(String::from_utf8_lossy(&timed.stdout).contains("elapsed_ms"));
}

#[test]
fn exhausted_budget_skips_the_suite() {
    let out = run(&["suite", "--budget-seconds", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 13);
    assert!(checks.iter().all(|c| c["status"] == "skipped"));
}

#[test]
fn text_output_lists_checks() {
    let out = run(&with("verify-filtration", &["--kmax", "2", "--out", "text"]));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[pass] closure tower equals explicit tower"));
    assert!(text.ends_with("overall: pass\n"));
}
