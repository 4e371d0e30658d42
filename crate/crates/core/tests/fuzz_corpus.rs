//! Replays the fuzz corpus seeds through the invariants the fuzz targets assert.

use std::fs;
use std::path::PathBuf;

use bicomplex_cas::expr::{self, ParseOptions};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn expression_seeds() {
    let mut accepted = 0;
    for src in seeds("parse_expr").into_iter().chain(seeds("format_roundtrip")) {
        let _ = expr::parse(&src);
        let _ = expr::parse_bicomplex(&src);
        if let Ok(f) = expr::parse_with(&src, ParseOptions::raw()) {
            accepted += 1;
            assert_eq!(expr::parse_with(&expr::format(&f), ParseOptions::raw()).unwrap(), f);
            assert_eq!(expr::parse_function_json(&expr::function_to_json(&f).to_string()).unwrap(), f);
        }
    }
    assert!(accepted > 0);
}

#[test]
fn json_seeds() {
    for src in seeds("function_json") {
        if let Ok(f) = expr::parse_function_json(&src) {
            assert_eq!(expr::function_to_json(&f).to_string(), src);
        }
    }
    for src in seeds("operator_json") {
        if let Ok(t) = expr::parse_operator_json(&src) {
            assert_eq!(expr::parse_operator_json(&expr::operator_to_json(&t).to_string()).unwrap(), t);
        }
    }
    for src in seeds("bicomplex_json") {
        if let Ok(z) = expr::parse_bicomplex_json(&src) {
            assert_eq!(expr::bicomplex_to_json(&z).to_string(), src);
        }
    }
}
