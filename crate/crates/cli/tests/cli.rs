//! End-to-end tests of the command-line surface: exact outputs, formats
//! and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fundstring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn mult_scalar_plain() {
    assert_eq!(
        stdout(&["mult", "--family", "C", "--rank", "2", "--k", "0", "--p", "1", "--weight", "1,0"]),
        "1\n"
    );
    assert_eq!(
        stdout(&[
            "mult", "--family", "D", "--rank", "3", "--k", "0", "--variant", "spin+", "--weight",
            "1/2,1/2,1/2"
        ]),
        "1\n"
    );
    // spin multiplicities vanish on the integer lattice
    assert_eq!(
        stdout(&[
            "mult", "--family", "D", "--rank", "3", "--k", "0", "--variant", "spin+", "--weight",
            "1,0,0"
        ]),
        "0\n"
    );
}

#[test]
fn mult_split_pair() {
    assert_eq!(
        stdout(&[
            "mult", "--family", "D", "--rank", "2", "--k", "0", "--variant", "split", "--weight",
            "1,1"
        ]),
        "0 1\n"
    );
    assert_eq!(
        stdout(&[
            "mult", "--family", "D", "--rank", "2", "--k", "0", "--variant", "split", "--weight",
            "1,-1"
        ]),
        "1 0\n"
    );
}

#[test]
fn mult_json_schema() {
    let text = stdout(&[
        "mult", "--family", "C", "--rank", "2", "--k", "0", "--p", "1", "--weight", "1,0",
        "--output", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("well-formed JSON");
    assert_eq!(doc["family"], "C");
    assert_eq!(doc["rank"], 2);
    assert_eq!(doc["k"], 0);
    assert_eq!(doc["p"], 1);
    assert_eq!(doc["variant"], "string");
    assert_eq!(doc["weight"], serde_json::json!(["1", "0"]));
    assert_eq!(doc["multiplicity"], "1");
}

#[test]
fn mult_csv() {
    let text = stdout(&[
        "mult", "--family", "B", "--rank", "2", "--k", "1", "--p", "2", "--weight", "1,1",
        "--output", "csv",
    ]);
    assert_eq!(
        text,
        "family,rank,k,p,variant,weight,multiplicity\nB,2,1,2,string,\"1,1\",2\n"
    );
}

#[test]
fn diagram_totals() {
    let text = stdout(&["diagram", "--family", "C", "--rank", "2", "--k", "0", "--p", "2"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6, "5 rows plus the footer:\n{text}");
    assert_eq!(lines[5], "total 5 dim 5");

    let text = stdout(&[
        "diagram", "--family", "B", "--rank", "2", "--k", "0", "--variant", "spin+",
    ]);
    assert!(text.ends_with("total 4 dim 4\n"));

    let text = stdout(&["diagram", "--family", "D", "--rank", "2", "--k", "1", "--p", "1"]);
    assert!(text.ends_with("total 9 dim 9\n"));
}

#[test]
fn diagram_is_deterministic() {
    let args = [
        "diagram", "--family", "D", "--rank", "3", "--k", "2", "--p", "3", "--output", "json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn diagram_json_closes_dimension() {
    let text = stdout(&[
        "diagram", "--family", "A", "--rank", "2", "--k", "1", "--p", "2", "--output", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    // the adjoint of rank two: six roots and a double zero weight
    assert_eq!(doc["total"], "8");
    assert_eq!(doc["dimension"], "8");
    assert_eq!(doc["rows"].as_array().unwrap().len(), 7);
}

#[test]
fn dim_and_split_dim() {
    assert_eq!(
        stdout(&["dim", "--family", "C", "--rank", "2", "--k", "0", "--p", "1"]),
        "4\n"
    );
    // the two top constituents of the rank-three family-D exterior cube
    assert_eq!(
        stdout(&["dim", "--family", "D", "--rank", "3", "--k", "0", "--variant", "split"]),
        "10 10\n"
    );
    assert_eq!(
        stdout(&["dim", "--family", "D", "--rank", "3", "--k", "0", "--p", "3"]),
        "20\n"
    );
}

#[test]
fn verify_exits_zero_with_no_mismatches() {
    let out = run(&[
        "verify", "--families", "BCD", "--max-rank", "2", "--max-k", "2", "--jobs", "2",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("0 mismatches"), "{text}");

    let out = run(&["verify", "--families", "A", "--max-rank", "3", "--max-k", "2"]);
    assert!(out.status.success());

    // report assembly does not depend on the worker count
    let single = stdout(&["verify", "--families", "D", "--max-rank", "2", "--max-k", "1", "--jobs", "1"]);
    let many = stdout(&["verify", "--families", "D", "--max-rank", "2", "--max-k", "1", "--jobs", "4"]);
    assert_eq!(single, many);
}

#[test]
fn usage_errors_exit_two() {
    let cases: Vec<Vec<&str>> = vec![
        // mixed coset weight
        vec!["mult", "--family", "C", "--rank", "2", "--k", "0", "--p", "1", "--weight", "1/2,1"],
        // p out of range
        vec!["mult", "--family", "C", "--rank", "2", "--k", "0", "--p", "3", "--weight", "1,0"],
        // variant/family mismatch
        vec!["mult", "--family", "C", "--rank", "2", "--k", "0", "--variant", "spin+", "--weight", "1,0"],
        // missing p for the string variant
        vec!["mult", "--family", "C", "--rank", "2", "--weight", "1,0"],
        // wrong coordinate count
        vec!["mult", "--family", "C", "--rank", "2", "--k", "0", "--p", "1", "--weight", "1,0,0"],
        // desk-scale guard
        vec!["diagram", "--family", "C", "--rank", "9", "--k", "0", "--p", "1"],
        // unknown flag (clap)
        vec!["mult", "--no-such-flag"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty(), "diagnostic expected for {args:?}");
    }
}

#[test]
fn bench_reports_seed_and_timings() {
    let text = stdout(&[
        "bench", "--rank", "4", "--k", "6", "--p", "2", "--samples", "5", "--seed", "7",
    ]);
    assert!(text.contains("seed 7"));
    assert!(text.contains("closed median"));
    assert!(text.contains("oracle median"));

    let text = stdout(&[
        "bench", "--rank", "20", "--k", "100", "--p", "3", "--samples", "3",
    ]);
    assert!(text.contains("oracle skipped"));
}

#[test]
fn quotient_coordinates_accepted_for_family_a() {
    // rank-n input is lifted with a trailing zero before normalizing
    let full = stdout(&["mult", "--family", "A", "--rank", "2", "--k", "1", "--p", "2", "--weight", "1,1,1"]);
    let quotient = stdout(&["mult", "--family", "A", "--rank", "2", "--k", "1", "--p", "2", "--weight", "0,0"]);
    assert_eq!(full, "2\n");
    assert_eq!(quotient, "2\n");
}
