mod common;

use common::{bin, golden_mismatches};
use serde_json::Value;

fn code(args: &[&str]) -> i32 {
    bin(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(bin(args).stdout).unwrap()
}

#[test]
fn goldens_match() {
    assert_eq!(golden_mismatches(), Vec::<String>::new());
}

#[test]
fn compute_formats() {
    assert_eq!(stdout(&["compute", "--family", "bell-number", "--n", "5", "--format", "json"]), "\"52\"\n");
    assert_eq!(stdout(&["compute", "--family", "stirling2", "--n", "4", "--k", "2", "--format", "csv"]), "n,value\n4,7\n");
    assert_eq!(stdout(&["compute", "--family", "euler", "--alpha", "-1/2", "--n", "1"]), "x + 1/4\n");
    assert_eq!(stdout(&["compute", "--family", "bell-poly", "--n", "3", "--truncation", "5"]), "y^3 + 3*y^2 + y\n");
}

#[test]
fn table_formats() {
    let rows: Value = serde_json::from_str(&stdout(&["table", "--family", "bell-number", "--n-max", "3", "--format", "json"])).unwrap();
    assert_eq!(rows[3], serde_json::json!({"n": 3, "value": "5"}));
    assert_eq!(
        stdout(&["table", "--family", "stirling2", "--k", "2", "--n-max", "3"]),
        "n,value\n0,0\n1,0\n2,1\n3,3\n"
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--family", "euler", "--n", "2"][..],
        &["compute", "--family", "euler", "--alpha", "0.5", "--n", "2"],
        &["compute", "--family", "bell-number", "--alpha", "1", "--n", "2"],
        &["compute", "--family", "nope", "--n", "2"],
        &["compute", "--family", "bell-number", "--n", "5", "--truncation", "3"],
        &["table", "--family", "stirling2-poly", "--n-max", "3"],
        &["verify"],
        &["verify", "--id", "T9_9"],
        &["verify", "--id", "T3_3", "--n-max", "0"],
        &["verify", "--id", "T3_3", "--alphas", "1/0"],
        &["expand", "--mu", "1", "x^"],
        &["expand", "--mu", "1", "x*y"],
    ] {
        let out = bin(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&["verify", "--id", "T3_3", "--n-max", "8", "--alphas", "0,1,2,3"]), 0);
    assert_eq!(code(&["verify", "--id", "T4_4_literal"]), 1);
    assert_eq!(code(&["verify", "--id", "T4_4_corrected", "--id", "T4_4_literal"]), 1);
    assert_eq!(code(&["verify", "--all", "--n-max", "6"]), 0);
}

#[test]
fn failing_reports_are_still_emitted() {
    let reports: Value = serde_json::from_str(&stdout(&["verify", "--id", "T4_4_literal", "--id", "T3_3"])).unwrap();
    assert_eq!(reports[0]["pass"], false);
    assert_eq!(reports[0]["counterexample"]["params"]["n"], "1");
    assert_eq!(reports[1]["pass"], true);
}

#[test]
fn parallel_output_is_identical() {
    let args = ["verify", "--all", "--n-max", "5", "--no-timings"];
    let seq = bin(&args).stdout;
    let par = bin(&[&args[..], &["--parallel"]].concat()).stdout;
    assert_eq!(seq, par);
}

#[test]
fn expand_with_fixed_y() {
    let v: Value = serde_json::from_str(&stdout(&["expand", "--mu", "1", "--y", "1/2", "x"])).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["0", "1"]));
    assert_eq!(v["residual"], "0");
    let v: Value = serde_json::from_str(&stdout(&["expand", "--mu", "-2", "-x^2 + 3"])).unwrap();
    assert_eq!(v["residual"], "0");
}
