//! End-to-end tests of the `spinchar` binary: exact output strings, format
//! stability, round-tripping, and exit codes.

use std::process::{Command, Output};

fn spinchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinchar"))
        .args(args)
        .env("SPINREP_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn double_prints_the_doubled_partition() {
    let out = spinchar(&["double", "--xi", "6,5,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7,7,5,3,2,2\n");

    let out = spinchar(&["double", "--xi", "6,5,2", "--overlap"]);
    assert_eq!(stdout(&out), "6,6,4,3,2,2\n");

    // round-trip: the printed partition parses back
    let out = spinchar(&["double", "--xi", "6,5,2"]);
    let printed = stdout(&out);
    let reparsed: spinchar::combinat::Partition = printed.trim().parse().unwrap();
    assert_eq!(reparsed.to_string(), printed.trim());
}

#[test]
fn char_and_spinchar_values() {
    let out = spinchar(&["char", "--lambda", "3,1", "--pi", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");

    // Ch_3((3,3)) = −24 and Ch^spin_3((2,1)) = −12 (main-special pair)
    let out = spinchar(&["char", "--lambda", "3,3", "--pi", "3"]);
    assert_eq!(stdout(&out), "-24\n");
    let out = spinchar(&["spinchar", "--xi", "2,1", "--pi", "3"]);
    assert_eq!(stdout(&out), "-12\n");

    let out = spinchar(&["char", "--lambda", "3,1", "--pi", "1", "--format", "json"]);
    assert_eq!(stdout(&out), "{\"value\":\"4\"}\n");
}

#[test]
fn stanley_eval_agrees_with_char() {
    let direct = spinchar(&["char", "--lambda", "4,2,1", "--pi", "2,1"]);
    let stanley = spinchar(&[
        "stanley-eval",
        "--pi",
        "2,1",
        "--mode",
        "linear",
        "--lambda",
        "4,2,1",
    ]);
    assert_eq!(stdout(&direct), stdout(&stanley));

    let direct = spinchar(&["spinchar", "--xi", "4,1", "--pi", "3,1,1"]);
    let stanley = spinchar(&[
        "stanley-eval",
        "--pi",
        "3,1,1",
        "--mode",
        "spin",
        "--xi",
        "4,1",
    ]);
    assert_eq!(stdout(&direct), stdout(&stanley));

    // spin mode without --xi is a usage error
    let out = spinchar(&["stanley-eval", "--pi", "3", "--mode", "spin"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stanley_poly_json_shape() {
    let out = spinchar(&[
        "stanley-poly",
        "--pi",
        "2",
        "--l",
        "1",
        "--mode",
        "linear",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let records = parsed.as_array().unwrap();
    assert_eq!(records.len(), 2);
    for record in records {
        assert!(record["exponents"].is_array());
        assert!(record["coeff"].is_string());
    }
}

#[test]
fn maps_census_rows() {
    let out = spinchar(&["maps-census", "--pi", "1,1", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 3); // 3!! matchings on 4 slots
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["matching_id"], 0);
    assert_eq!(first["components"], 2);
    assert_eq!(first["orientable"], true);
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["double", "--xi", "9,6,2,1"],
        vec!["table", "--n", "4", "--kind", "spin"],
        vec!["stanley-poly", "--pi", "3", "--l", "2", "--mode", "spin", "--format", "json"],
        vec!["maps-census", "--pi", "2,1", "--format", "csv"],
    ] {
        let a = stdout(&spinchar(&args));
        let b = stdout(&spinchar(&args));
        assert_eq!(a, b, "unstable output for {args:?}");
        assert!(!a.is_empty());
    }
}

#[test]
fn verify_exit_codes() {
    // a fast identity passes with exit 0
    let out = spinchar(&["verify", "stirling", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["identity"], "stirling");
    assert_eq!(report["cases"], 12);
    assert!(report["failures"].as_array().unwrap().is_empty());

    // seeded mutation without the flag: failures surface as exit 1
    let out = spinchar(&["verify", "stirling", "--negative-control"]);
    assert_eq!(out.status.code(), Some(0)); // detection succeeded

    let out = spinchar(&["verify", "unknown-identity"]);
    assert_eq!(out.status.code(), Some(2));

    let out = spinchar(&["verify", "main-special", "--max-k", "5", "--max-n", "6"]);
    assert!(out.status.success());
}

#[test]
fn full_default_suite_passes_and_controls_detect() {
    let out = spinchar(&["verify", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim().lines().count(), 13);

    let out = spinchar(&["verify", "--negative-control", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    // every verifier must have caught its mutation
    for line in stdout(&out).trim().lines() {
        let failures: usize = line.split(',').nth(2).unwrap().parse().unwrap();
        assert!(failures > 0, "no detection in {line:?}");
    }
}

#[test]
fn table_is_exact_and_square() {
    let out = spinchar(&["table", "--n", "5", "--kind", "spin"]);
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let rows = parsed["rows"].as_array().unwrap();
    let cols = parsed["cols"].as_array().unwrap();
    assert_eq!(rows.len(), 3); // |SP_5|
    assert_eq!(cols.len(), 3); // |OP_5|
    assert_eq!(parsed["values"].as_array().unwrap().len(), 3);

    let out = spinchar(&["table", "--n", "3", "--kind", "linear"]);
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["rows"].as_array().unwrap().len(), 3);
    // χ^{(3)} row is all ones
    assert_eq!(parsed["values"][0][0], "1");
}

#[test]
fn parse_errors_exit_two() {
    let out = spinchar(&["char", "--lambda", "1,3", "--pi", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = spinchar(&["spinchar", "--xi", "3,3", "--pi", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = spinchar(&["spinchar", "--xi", "3,1", "--pi", "2"]);
    assert_eq!(out.status.code(), Some(2)); // even π rejected
}
