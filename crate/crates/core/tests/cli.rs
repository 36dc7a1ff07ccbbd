//! Black-box checks of the binary: determinism, exit codes, stream
//! separation, and the serialized output shapes.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lendens"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        String::from_utf8(out.stderr).expect("stderr is utf-8"),
    )
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["ns", "6,9,20", "--element", "60"][..],
        &["ns", "6,9,20", "--element", "60", "--json"][..],
        &["search", "ns", "20,28,42,73"][..],
        &["betti", "ns", "20,28,42,73", "--json"][..],
    ] {
        let first = run(args);
        let second = run(args);
        assert_eq!(first.0, 0, "{args:?} failed: {}", first.2);
        assert_eq!(first, second, "{args:?} not deterministic");
    }
}

#[test]
fn json_reports_parse_with_string_rationals() {
    let (code, stdout, _) = run(&["ns", "6,9,20", "--element", "60", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(v["length_density"], serde_json::json!("4/7"));
    assert_eq!(v["elasticity"], serde_json::json!("10/3"));
    assert_eq!(v["lengths"], serde_json::json!([3, 7, 8, 9, 10]));
    assert_eq!(v["complete"], serde_json::json!(true));
}

#[test]
fn input_errors_exit_two() {
    let (code, stdout, stderr) = run(&["ns", "6,x"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("error"));

    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["ns", "4,6"]).0, 2);
}

#[test]
fn budget_exhaustion_exits_three_with_partial_report() {
    let (code, stdout, _) = run(&["search", "ns", "6,9,20", "--budget", "10"]);
    assert_eq!(code, 3);
    assert!(stdout.contains("complete: false"));

    let (code, stdout, _) = run(&["search", "ns", "6,9,20", "--budget", "10", "--json"]);
    assert_eq!(code, 3);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("partial json");
    assert_eq!(v["complete"], serde_json::json!(false));
}

#[test]
fn csv_series_has_pinned_schema() {
    let (code, stdout, _) = run(&["puiseux", "--noasym", "0", "--series", "99,100", "--csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "n,ld_num,ld_den\n99,1,1\n100,101,701\n");
}

#[test]
fn timing_writes_to_stderr_only() {
    let plain = run(&["ns", "6,9,20", "--element", "60"]);
    let timed = run(&["ns", "6,9,20", "--element", "60", "--timing"]);
    assert_eq!(timed.0, 0);
    assert_eq!(plain.1, timed.1);
    assert!(timed.2.contains("elapsed_ms:"));
    assert!(plain.2.is_empty());
}

#[test]
fn block_elements_round_trip() {
    let (code, stdout, _) = run(&[
        "block",
        "Z5",
        "--restrict",
        "(1);(4)",
        "--element",
        "(1)^5(4)^5",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("lengths: {2, 5}"));
    assert!(stdout.contains("length_density: 1/3"));
}
