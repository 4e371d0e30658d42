use std::process::{Command, Output};

use serde_json::Value;

const F1: &str = "(Z + star(Z))*(dag(Z) + til(Z))";
const G1: &str = "2*star(Z)*(dag(Z) + til(Z))";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicomplex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn error(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stderr).unwrap_or_else(|_| panic!("{}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), v)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn eval_point() {
    assert_eq!(stdout(&["eval", "Z^2", "--at", "1 + j"]), "2*j\n");
    let v = json(&["eval", "Z^2", "--at", "1 + j"]);
    assert_eq!(v["value"], "2*j");
    assert_eq!(v["json"], serde_json::json!(["0", "1", "-2", "1", "0", "1", "2", "1"]));
}

#[test]
fn apply_laplacians() {
    assert_eq!(json(&["apply", "d1", F1])["text"], "0 | 0");
    assert_eq!(json(&["apply", "d5", F1])["display"], "1");
    assert_eq!(json(&["apply", "dZs^2", "star(Z)"])["text"], "0 | 0");
    assert_eq!(json(&["apply", "dZ", "Z^3"])["display"], "3*a^2 | 3*b^2");
}

#[test]
fn classify_and_decompose() {
    let v = json(&["classify", F1]);
    assert_eq!(v["signature"], serde_json::json!([2, 2, 2]));
    let v = json(&["decompose", "conjbasis", G1]);
    assert_eq!(v["display"]["1,0,1"], "2");
    assert_eq!(v["display"]["1,1,0"], "2");
    assert_eq!(stdout(&["--raw-idempotent", "apply", "dZ", "a*b | a*b"]).trim(), "b | a");
}

#[test]
fn golden_outputs() {
    for (expr, file) in [(F1, "f1.txt"), (G1, "g1.txt")] {
        let text = json(&["apply", "dZ^0", expr])["text"].as_str().unwrap().to_string();
        assert_eq!(text + "\n", golden(file));
    }
    assert_eq!(stdout(&["--json", "paper-examples"]), golden("paper_examples.json"));
}

#[test]
fn error_exit_codes() {
    let (code, v) = error(&["classify", "("]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "ParseError");
    assert_eq!(v["error"]["pos"], 1);

    let (code, v) = error(&["decompose", "rehyp-holo", F1]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "PreconditionViolation");
    assert!(v["error"]["condition"].is_string());

    assert_eq!(error(&["verify", "nope"]), (2, serde_json::json!({"error": {"kind": "UnknownSuite", "message": "unknown verification suite `nope`"}})));
    assert_eq!(error(&["apply", "d9", "Z"]).0, 2);
    assert_eq!(error(&["decompose", "main", "Z"]).0, 2);
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let args = ["--json", "--seed", "7", "--trials", "20", "verify", "all"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 7);
    let other = stdout(&["--json", "--seed", "8", "--trials", "20", "verify", "all"]);
    assert_ne!(a, other);
}

#[test]
fn verify_zero_trials() {
    let v = json(&["--trials", "0", "verify"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["trials"], 0);
}
