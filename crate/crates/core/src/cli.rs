//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when an operation or a verification fails,
//! 2 for usage and parse errors. Errors are written to stderr as
//! `{"error": {"kind": ..., "message": ...}}`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{classify, ClassificationReport};
use crate::decompose::{
    almansi_bicomplex, expand_conjugate_basis, expand_zstar, main_decomposition, rehyp_to_holomorphic,
    rehyp_to_polyholomorphic_a1, MainDecomposition,
};
use crate::error::Error;
use crate::expr::{self, ParseOptions};
use crate::gen::GenConfig;
use crate::operator::{Operator, Wirtinger};
use crate::poly::{f1, g1, BicomplexFunction};
use crate::verify::{self, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "bicomplex", version, about = "Exact bicomplex polynomial calculus")]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Trials per suite for `verify`.
    #[arg(long, global = true, default_value_t = 100)]
    trials: u64,
    /// Maximum exponent per variable in random samples.
    #[arg(long, global = true, default_value_t = 4)]
    max_degree: u32,
    /// Bound on numerators and denominators of random coefficients.
    #[arg(long, global = true, default_value_t = 9)]
    coeff_bound: u32,
    /// Accept the idempotent coordinates `a, ac, b, bc` in expressions.
    #[arg(long, global = true)]
    raw_idempotent: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression at a bicomplex point.
    Eval {
        expr: String,
        /// Constant expression for the point, e.g. "1 + 2*i + j".
        #[arg(long)]
        at: String,
    },
    /// Apply an operator (dZ, dZs, dZd, dZt, d1..d7, optionally `^power`).
    Apply { op: String, expr: String },
    /// Signature, class membership and Laplacian orders.
    Classify { expr: String },
    /// Run one of the decompositions.
    Decompose {
        #[arg(value_enum)]
        kind: DecomposeKind,
        expr: String,
        /// Power of d/dZ† that annihilates the input (`main`).
        #[arg(long)]
        n: Option<u32>,
        /// Power of d/dZ~ that annihilates the input (`main`).
        #[arg(long)]
        k: Option<u32>,
    },
    /// Run a verification suite, or `all`.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Reproduce the worked examples.
    PaperExamples,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DecomposeKind {
    Conjbasis,
    Zstar,
    Almansi,
    RehypHolo,
    RehypA1,
    Main,
}

enum Failure {
    Usage(String),
    Op(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Op(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Json { .. } | Error::UnknownSuite(_) | Error::LaplacianIndex(_) => 2,
        _ => 1,
    }
}

fn error_json(e: &Error) -> Value {
    let mut body = json!({ "kind": e.kind(), "message": e.to_string() });
    let extra = match e {
        Error::Parse { pos, .. } => Some(("pos", json!(pos))),
        Error::Json { path, .. } => Some(("path", json!(path))),
        Error::PreconditionViolation { condition } => Some(("condition", json!(condition))),
        _ => None,
    };
    if let (Some((k, v)), Some(obj)) = (extra, body.as_object_mut()) {
        obj.insert(k.to_string(), v);
    }
    json!({ "error": body })
}

/// Runs the CLI with explicit streams; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                2
            };
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "{}", json!({ "error": { "kind": "UsageError", "message": msg } }));
            2
        }
        Err(Failure::Op(e)) => {
            let _ = writeln!(err, "{}", error_json(&e));
            exit_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, json_mode: bool, value: &Value, text: &str) -> Result<(), Failure> {
    let written = if json_mode {
        writeln!(out, "{value}")
    } else {
        writeln!(out, "{text}")
    };
    match written {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(Failure::Usage(format!("cannot write output: {e}")))
        }
        _ => Ok(()),
    }
}

fn fn_value(f: &BicomplexFunction) -> Value {
    json!({ "display": expr::format_compact(f), "text": expr::format(f), "json": expr::function_to_json(f) })
}

fn parse_operator(spec: &str) -> Result<Operator, Failure> {
    let (name, power) = match spec.split_once('^') {
        Some((n, p)) => {
            let p: u32 = p
                .parse()
                .map_err(|_| Failure::Usage(format!("invalid operator power in `{spec}`")))?;
            (n, p)
        }
        None => (spec, 1),
    };
    let base = match name {
        "dZ" => Operator::wirtinger(Wirtinger::Z),
        "dZs" => Operator::wirtinger(Wirtinger::ZStar),
        "dZd" => Operator::wirtinger(Wirtinger::ZDagger),
        "dZt" => Operator::wirtinger(Wirtinger::ZTilde),
        _ => match name.strip_prefix('d').and_then(|i| i.parse::<u32>().ok()) {
            Some(i) => Operator::laplacian(i).map_err(|e| Failure::Usage(e.to_string()))?,
            None => {
                return Err(Failure::Usage(format!(
                    "unknown operator `{name}` (expected dZ, dZs, dZd, dZt or d1..d7)"
                )))
            }
        },
    };
    Ok(base.pow(power))
}

pub fn report_json(r: &ClassificationReport) -> Value {
    let orders: BTreeMap<String, u32> = r
        .orders
        .iter()
        .enumerate()
        .map(|(i, o)| (format!("d{}", i + 1), *o))
        .collect();
    json!({
        "signature": r.signature.as_array(),
        "bc_holomorphic": r.membership.is_bc_holomorphic,
        "a1": r.membership.a1_orders.map(|(m, n)| [m, n]),
        "zstar_order": r.membership.zstar_order,
        "orders": orders,
    })
}

fn report_text(r: &ClassificationReport) -> String {
    let s = r.signature;
    let a1 = r
        .membership
        .a1_orders
        .map_or("none".to_string(), |(m, n)| format!("({m}, {n})"));
    let zs = r.membership.zstar_order.map_or("none".to_string(), |l| l.to_string());
    let orders: Vec<String> = r.orders.iter().enumerate().map(|(i, o)| format!("d{}={o}", i + 1)).collect();
    format!(
        "signature: ({}, {}, {})\nbc-holomorphic: {}\nA1 orders: {a1}\nZ* order: {zs}\norders: {}",
        s.m,
        s.n,
        s.k,
        r.membership.is_bc_holomorphic,
        orders.join(" ")
    )
}

fn keyed<K: std::fmt::Display>(entries: impl IntoIterator<Item = (K, BicomplexFunction)>) -> (Value, String) {
    let mut parts = serde_json::Map::new();
    let mut display = serde_json::Map::new();
    let mut lines = Vec::new();
    for (k, f) in entries {
        let key = k.to_string();
        lines.push(format!("{key}: {}", expr::format_compact(&f)));
        display.insert(key.clone(), json!(expr::format_compact(&f)));
        parts.insert(key, expr::function_to_json(&f));
    }
    (json!({ "parts": parts, "display": display }), lines.join("\n"))
}

struct Triple(u32, u32, u32);

impl std::fmt::Display for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{},{}", self.0, self.1, self.2)
    }
}

struct Pair(u32, u32);

impl std::fmt::Display for Pair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{}", self.0, self.1)
    }
}

pub fn main_json(d: &MainDecomposition) -> Value {
    let (g, _) = keyed(d.g.iter().map(|(&(a, b), f)| (Pair(a, b), f.clone())));
    let refined = d
        .refined
        .as_ref()
        .map(|r| keyed(r.iter().map(|(&(a, b), f)| (Pair(a, b), f.clone()))).0);
    let non_real: Vec<Value> = d
        .non_real
        .iter()
        .map(|((a, b), c)| json!({ "index": format!("{a},{b}"), "component": c.name() }))
        .collect();
    json!({ "g": g, "refined": refined, "non_real": non_real })
}

fn main_text(d: &MainDecomposition) -> String {
    let mut out = vec!["G:".to_string()];
    out.extend(d.g.iter().map(|((a, b), f)| format!("  {a},{b}: {}", expr::format_compact(f))));
    match &d.refined {
        Some(r) => {
            out.push("refined:".into());
            out.extend(r.iter().map(|((a, b), f)| format!("  {a},{b}: {}", expr::format_compact(f))));
        }
        None => {
            let ix: Vec<String> = d
                .non_real
                .iter()
                .map(|((a, b), c)| format!("{a},{b} ({})", c.name()))
                .collect();
            out.push(format!("refined: unavailable, non-real coefficients at {}", ix.join(", ")));
        }
    }
    out.join("\n")
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let opts = ParseOptions {
        raw_idempotent: cli.raw_idempotent,
    };
    let parse = |s: &str| expr::parse_with(s, opts);
    match &cli.command {
        Command::Eval { expr: e, at } => {
            let f = parse(e)?;
            let z = expr::parse_bicomplex(at)?;
            let v = f.evaluate(&z);
            let value = json!({
                "value": v.to_string(),
                "idempotent": v.idempotent_string(),
                "json": expr::bicomplex_to_json(&v),
            });
            emit(out, cli.json, &value, &v.to_string())
        }
        Command::Apply { op, expr: e } => {
            let t = parse_operator(op)?;
            let f = parse(e)?;
            let r = t.apply(&f);
            emit(out, cli.json, &fn_value(&r), &expr::format_compact(&r))
        }
        Command::Classify { expr: e } => {
            let r = classify(&parse(e)?)?;
            emit(out, cli.json, &report_json(&r), &report_text(&r))
        }
        Command::Decompose { kind, expr: e, n, k } => {
            let f = parse(e)?;
            let (value, text) = match kind {
                DecomposeKind::Conjbasis => {
                    let x = expand_conjugate_basis(&f);
                    keyed(x.coeffs.into_iter().map(|((a, b, c), h)| (Triple(a, b, c), h)))
                }
                DecomposeKind::Zstar => keyed(expand_zstar(&f)?.into_iter().enumerate()),
                DecomposeKind::Almansi => keyed(almansi_bicomplex(&f).parts.into_iter().enumerate()),
                DecomposeKind::RehypHolo => {
                    let g = rehyp_to_holomorphic(&f)?;
                    (json!({ "f": fn_value(&g) }), expr::format_compact(&g))
                }
                DecomposeKind::RehypA1 => {
                    let inv = rehyp_to_polyholomorphic_a1(&f)?;
                    let (r, s) = inv.orders;
                    (
                        json!({ "f": fn_value(&inv.f), "orders": [r, s] }),
                        format!("{}\norders: ({r}, {s})", expr::format_compact(&inv.f)),
                    )
                }
                DecomposeKind::Main => {
                    let (Some(n), Some(k)) = (n, k) else {
                        return Err(Failure::Usage("`decompose main` requires --n and --k".into()));
                    };
                    let d = main_decomposition(&f, *n, *k)?;
                    (main_json(&d), main_text(&d))
                }
            };
            emit(out, cli.json, &value, &text)
        }
        Command::Verify { suite } => {
            let cfg = VerifyConfig {
                seed: cli.seed,
                trials: cli.trials,
                gen: GenConfig {
                    max_degree: cli.max_degree,
                    coeff_bound: cli.coeff_bound,
                    ..GenConfig::default()
                },
            };
            let report = verify::run(suite, &cfg)?;
            let text: Vec<String> = report
                .suites
                .iter()
                .map(|s| {
                    let status = if s.passed() { "PASS" } else { "FAIL" };
                    let mut line = format!(
                        "{status} {} trials={} failures={} retries={}",
                        s.name, s.trials, s.failures, s.retries
                    );
                    for n in &s.notes {
                        line.push_str(&format!("\n  note: {n}"));
                    }
                    if let Some(c) = &s.first_counterexample {
                        line.push_str(&format!("\n  counterexample: {c}"));
                    }
                    line
                })
                .collect();
            emit(out, cli.json, &report.to_json(), &text.join("\n"))?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::PaperExamples => {
            let results = verify::example_results();
            let passed = results.iter().all(|(_, ok)| *ok);
            let mut text = vec![
                format!("F1 = {}", expr::format_compact(&f1())),
                format!("G1 = {}", expr::format_compact(&g1())),
            ];
            text.extend(
                results
                    .iter()
                    .map(|(name, ok)| format!("{} {name}", if *ok { "ok" } else { "FAIL" })),
            );
            emit(out, cli.json, &paper_examples_json(), &text.join("\n"))?;
            if passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

/// Outputs of the worked examples, used for the byte-stable golden file.
pub fn paper_examples_json() -> Value {
    let checks: Vec<Value> = verify::example_results()
        .into_iter()
        .map(|(name, ok)| json!({ "name": name, "passed": ok }))
        .collect();
    let d5 = Operator::laplacian(5).expect("valid index").apply(&f1());
    let d1 = Operator::laplacian_bc().apply(&f1());
    let conj = expand_conjugate_basis(&g1());
    let (conj_value, _) = keyed(conj.coeffs.into_iter().map(|((a, b, c), h)| (Triple(a, b, c), h)));
    let rehyp_err = rehyp_to_holomorphic(&f1()).err().map(|e| error_json(&e));
    json!({
        "F1": fn_value(&f1()),
        "G1": fn_value(&g1()),
        "d1_F1": fn_value(&d1),
        "d5_F1": fn_value(&d5),
        "re_c_G1": fn_value(&g1().re_c()),
        "classify_F1": report_json(&classify(&f1()).expect("F1 classifies")),
        "classify_G1": report_json(&classify(&g1()).expect("G1 classifies")),
        "conjbasis_G1": conj_value,
        "rehyp_holo_F1": rehyp_err,
        "main_F1": main_json(&main_decomposition(&f1(), 2, 2).expect("F1 decomposes")),
        "checks": checks,
    })
}
