use std::process::Command;

use ringlab::cli::run;
use serde_json::Value;

fn ringlab(args: &[&str]) -> (i32, Value) {
    let out = run(std::iter::once("ringlab").chain(args.iter().copied()));
    let doc = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    (out.code, doc)
}

#[test]
fn binary_runs_and_sets_exit_code() {
    let bin = env!("CARGO_BIN_EXE_ringlab");
    let ok = Command::new(bin)
        .args(["inverse", "Z5", "2", "--kind", "gzhou"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(doc["b"], "3");

    let bad = Command::new(bin)
        .args(["inverse", "Z5", "7", "--kind", "gzhou"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn inverse_z5_matches_worked_example() {
    let (code, doc) = ringlab(&["inverse", "Z5", "2", "--kind", "gzhou"]);
    assert_eq!(code, 0);
    assert_eq!(doc["b"], "3");
    assert_eq!(doc["n"], 4);
    assert_eq!(doc["p"], "1");
    assert_eq!(doc["w"], "0");
    assert_eq!(doc["constructive_agrees"], true);
    assert!(doc["checks"]
        .as_object()
        .unwrap()
        .values()
        .all(|v| v == true));
}

#[test]
fn tables() {
    assert_eq!(
        ringlab(&["table", "Z12", "--set", "sqrtJ"]).1,
        serde_json::json!(["0", "6"])
    );
    assert_eq!(
        ringlab(&["table", "Z8", "--set", "N"]).1,
        serde_json::json!(["0", "2", "4", "6"])
    );
    assert_eq!(
        ringlab(&["table", "Z6", "--set", "idem"]).1,
        serde_json::json!(["0", "1", "3", "4"])
    );
    assert_eq!(
        ringlab(&["table", "Z6", "--set", "U"]).1,
        serde_json::json!(["1", "5"])
    );
    let (_, units) = ringlab(&["table", "M2(Z2)", "--set", "U"]);
    assert_eq!(units.as_array().unwrap().len(), 6);
}

#[test]
fn classify_rows() {
    let (code, rows) = ringlab(&["classify", "Z4"]);
    assert_eq!(code, 0);
    let two = &rows[2];
    assert_eq!(two["gzhou"], "0");
    assert_eq!(two["nilpotent"], true);
    let (_, one) = ringlab(&["classify", "Z1"]);
    assert_eq!(one.as_array().unwrap().len(), 1);
    assert_eq!(one[0]["a"], "0");
}

#[test]
fn matrix_rings() {
    let (code, doc) = ringlab(&["inverse", "Q1", "[[2]]", "--kind", "gzhou"]);
    assert_eq!(code, 0);
    assert!(doc["b"].is_null());
    assert_eq!(doc["bound"], 2);
    assert_eq!(doc["conclusive"], true);

    let (_, doc) = ringlab(&["inverse", "Q2", "[[0,-1],[1,0]]", "--kind", "gzhou"]);
    assert_eq!(doc["b"], "[[0,1],[-1,0]]");
    assert_eq!(doc["n"], 4);

    let (_, doc) = ringlab(&["inverse", "Q2", "[[0,1],[0,0]]", "--kind", "zhou"]);
    assert_eq!(doc["b"], "[[0,0],[0,0]]");

    // Drazin inverses always exist over ℚ, even where the Zhou kinds do not
    let (_, doc) = ringlab(&["inverse", "Q1", "[[2]]", "--kind", "drazin"]);
    assert_eq!(doc["b"], "[[1/2]]");
    assert_eq!(doc["n"], 1);

    let (_, doc) = ringlab(&[
        "inverse",
        "Q3",
        "[[1,0,0],[0,0,1],[0,0,0]]",
        "--kind",
        "drazin",
    ]);
    assert_eq!(doc["b"], "[[1,0,0],[0,0,0],[0,0,0]]");
    assert_eq!(doc["n"], 2);
}

#[test]
fn short_bound_is_not_conclusive() {
    let (code, doc) = ringlab(&[
        "inverse",
        "Q2",
        "[[0,-1],[1,0]]",
        "--kind",
        "gzhou",
        "--bound",
        "3",
    ]);
    assert_eq!(code, 0);
    assert!(doc["b"].is_null());
    assert_eq!(doc["bound"], 3);
    assert_eq!(doc["conclusive"], false);
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "verify",
        "cline",
        "Z12",
        "--samples",
        "300",
        "--seed",
        "9",
        "--no-timing",
    ];
    let a = run(std::iter::once("ringlab").chain(args));
    let b = run(std::iter::once("ringlab").chain(args));
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(doc["fails"], 0);
    assert_eq!(doc["seed"], 9);
}

#[test]
fn verify_exhaustive_m2z2() {
    let (code, doc) = ringlab(&["verify", "cline", "M2(Z2)", "--exhaustive"]);
    assert_eq!(code, 0);
    assert_eq!(doc["fails"], 0);
    assert_eq!(doc["passes"], doc["population"]);
    let (code, doc) = ringlab(&["verify", "jacobson", "T2(Z2)", "--exhaustive"]);
    assert_eq!(code, 0);
    assert!(doc["notes"]
        .as_array()
        .unwrap()
        .iter()
        .any(|n| n.as_str().unwrap().contains("SignCorrected")));
}

#[test]
fn csv_output() {
    let out = run(["ringlab", "classify", "Z3", "--format", "csv"]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("a,drazin,pdrazin,zhou,gzhou"));
    let out = run(["ringlab", "table", "Z4", "--set", "N", "--format", "csv"]);
    assert_eq!(out.stdout, "element\n0\n2\n");
}

#[test]
fn usage_and_parse_errors() {
    let cases: &[&[&str]] = &[
        &["inverse", "Z5", "2"],
        &["inverse", "Z5", "2", "--kind", "moore-penrose"],
        &["verify", "nonsense", "Z5"],
        &["verify", "cline", "Z5", "--exhaustive", "--samples", "3"],
        &["table", "Z5", "--set", "X"],
        &["table", "M2(Z2", "--set", "U"],
        &["table", "Q2", "--set", "U"],
        &["inverse", "Q2", "[[1]]", "--kind", "gzhou"],
        &["inverse", "Z4", "[[1]]", "--kind", "gzhou"],
    ];
    for args in cases {
        let out = run(std::iter::once("ringlab").chain(args.iter().copied()));
        assert_eq!(out.code, 1, "{args:?}: {}", out.stdout);
    }
    let (code, doc) = ringlab(&["classify", "M3(Z4)"]);
    assert_eq!(code, 1);
    assert!(doc["error"].as_str().unwrap().contains("262144"));
    let (code, _) = ringlab(&["classify", "M2(Z3)", "--cap", "64"]);
    assert_eq!(code, 1);
}
