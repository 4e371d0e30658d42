//! Textual bicomplex expressions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! top    := expr ('|' expr)?
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary | '/' RATIONAL)*
//! unary  := '-' unary | factor
//! factor := atom ('^' NAT)?
//! atom   := NAT | 'i' | 'j' | 'k' | 'e+' | 'e-' | 'Z'
//!         | 'a' | 'ac' | 'b' | 'bc'              (raw idempotent mode only)
//!         | FUNC '(' expr ')' | '(' expr ')'
//! FUNC   := 'dag' | 'til' | 'star' | 'rehyp' | 'rec'
//! ```
//!
//! `P | M` denotes `P e+ + M e-`; it is the shape produced by [`format`].
//! The divisor after `/` must evaluate to a nonzero rational constant.

mod json;
mod lexer;
mod parser;

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{BicomplexFunction, Poly4, Var};
use crate::scalar::{Bicomplex, Conjugation, GaussianRational, Rational};

pub use json::{
    bicomplex_from_json, bicomplex_to_json, function_from_json, function_to_json, gaussian_from_json,
    gaussian_to_json, operator_from_json, operator_to_json, parse_bicomplex_json, parse_function_json,
    parse_operator_json, poly_from_json, poly_to_json,
};
pub use parser::parse_ast;

const MAX_TOTAL_DEGREE: u32 = 48;
const MAX_TERM_WORK: usize = 100_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Accept the idempotent coordinates `a, ac, b, bc` as atoms.
    pub raw_idempotent: bool,
}

impl ParseOptions {
    pub fn raw() -> Self {
        Self { raw_idempotent: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitLit {
    I,
    J,
    K,
    EPlus,
    EMinus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    Z,
    A,
    Ac,
    B,
    Bc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Dag,
    Til,
    Star,
    Rehyp,
    Rec,
}

/// Parsed expression tree. Positions are byte offsets into the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Int(BigInt),
    Unit(UnitLit),
    Var(Variable),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>, usize),
    Div(Box<Ast>, Box<Ast>, usize),
    Pow(Box<Ast>, u32, usize),
    Call(Func, Box<Ast>),
    Split(Box<Ast>, Box<Ast>, usize),
}

/// Parses in strict mode (`Z` and its conjugates only).
pub fn parse(src: &str) -> Result<BicomplexFunction> {
    parse_with(src, ParseOptions::default())
}

pub fn parse_with(src: &str, opts: ParseOptions) -> Result<BicomplexFunction> {
    lower(&parse_ast(src, opts)?)
}

/// Parses an expression that must denote a constant, e.g. an evaluation point.
pub fn parse_bicomplex(src: &str) -> Result<Bicomplex> {
    let f = parse(src)?;
    constant_value(&f).ok_or_else(|| Error::Parse {
        pos: 0,
        message: "expected a constant bicomplex number".into(),
    })
}

fn constant_value(f: &BicomplexFunction) -> Option<Bicomplex> {
    let only_const = |p: &Poly4| p.terms().all(|(e, _)| *e == [0; 4]);
    (only_const(&f.plus) && only_const(&f.minus))
        .then(|| Bicomplex::new(f.plus.coeff(&[0; 4]), f.minus.coeff(&[0; 4])))
}

fn too_large(pos: usize) -> Error {
    Error::Parse {
        pos,
        message: "expression expands beyond the supported size".into(),
    }
}

fn checked_mul(a: &BicomplexFunction, b: &BicomplexFunction, pos: usize) -> Result<BicomplexFunction> {
    let deg = a.total_degree().unwrap_or(0) + b.total_degree().unwrap_or(0);
    let work = a.plus.len() * b.plus.len() + a.minus.len() * b.minus.len();
    if deg > MAX_TOTAL_DEGREE || work > MAX_TERM_WORK {
        return Err(too_large(pos));
    }
    Ok(a * b)
}

/// Evaluates an expression tree into canonical component form.
pub fn lower(ast: &Ast) -> Result<BicomplexFunction> {
    Ok(match ast {
        Ast::Int(n) => BicomplexFunction::constant(&Bicomplex::from_rational(Rational::from_integer(n.clone()))),
        Ast::Unit(u) => BicomplexFunction::constant(&match u {
            UnitLit::I => Bicomplex::i(),
            UnitLit::J => Bicomplex::j(),
            UnitLit::K => Bicomplex::k(),
            UnitLit::EPlus => Bicomplex::e_plus(),
            UnitLit::EMinus => Bicomplex::e_minus(),
        }),
        Ast::Var(v) => match v {
            Variable::Z => BicomplexFunction::z(),
            Variable::A => BicomplexFunction::complex(Poly4::var(Var::Alpha)),
            Variable::Ac => BicomplexFunction::complex(Poly4::var(Var::AlphaBar)),
            Variable::B => BicomplexFunction::complex(Poly4::var(Var::Beta)),
            Variable::Bc => BicomplexFunction::complex(Poly4::var(Var::BetaBar)),
        },
        Ast::Neg(x) => -&lower(x)?,
        Ast::Add(x, y) => &lower(x)? + &lower(y)?,
        Ast::Sub(x, y) => &lower(x)? - &lower(y)?,
        Ast::Mul(x, y, pos) => checked_mul(&lower(x)?, &lower(y)?, *pos)?,
        Ast::Div(x, y, pos) => {
            let num = lower(x)?;
            let den = lower(y)?;
            let r = constant_value(&den)
                .filter(|c| c.alpha == c.beta && c.alpha.is_real())
                .map(|c| c.alpha.re)
                .ok_or_else(|| Error::Parse {
                    pos: *pos,
                    message: "divisor must be a rational constant".into(),
                })?;
            if r.is_zero() {
                return Err(Error::Parse {
                    pos: *pos,
                    message: "division by zero".into(),
                });
            }
            num.scale_rational(&r.recip())
        }
        Ast::Pow(x, e, pos) => {
            let base = lower(x)?;
            let mut acc = BicomplexFunction::one();
            for _ in 0..*e {
                acc = checked_mul(&acc, &base, *pos)?;
            }
            acc
        }
        Ast::Call(func, x) => {
            let f = lower(x)?;
            match func {
                Func::Dag => f.conjugate(Conjugation::Dagger),
                Func::Til => f.conjugate(Conjugation::Tilde),
                Func::Star => f.conjugate(Conjugation::Star),
                Func::Rehyp => f.re_hyp(),
                Func::Rec => f.re_c(),
            }
        }
        Ast::Split(p, m, _) => {
            let p = lower(p)?.scale(&Bicomplex::e_plus());
            let m = lower(m)?.scale(&Bicomplex::e_minus());
            &p + &m
        }
    })
}

fn write_rational(out: &mut String, r: &Rational) {
    if r.is_integer() {
        let _ = write!(out, "{}", r.numer());
    } else {
        let _ = write!(out, "{}/{}", r.numer(), r.denom());
    }
}

fn monomial_string(e: &[u32; 4]) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match e[v.index()] {
            0 => {}
            1 => parts.push(v.token().to_string()),
            n => parts.push(format!("{}^{n}", v.token())),
        }
    }
    parts.join("*")
}

/// Returns `(negative, body)` for one term.
fn term_string(e: &[u32; 4], c: &GaussianRational) -> (bool, String) {
    let mono = monomial_string(e);
    let (neg, coeff) = if c.im.is_zero() {
        let mag = c.re.abs();
        let body = if mag.is_one() && !mono.is_empty() {
            String::new()
        } else {
            let mut s = String::new();
            write_rational(&mut s, &mag);
            s
        };
        (c.re.is_negative(), body)
    } else if c.re.is_zero() {
        let mag = c.im.abs();
        let mut body = String::new();
        if !mag.is_one() {
            write_rational(&mut body, &mag);
            body.push('*');
        }
        body.push('i');
        (c.im.is_negative(), body)
    } else {
        let mut body = String::from("(");
        write_rational(&mut body, &c.re);
        body.push_str(if c.im.is_negative() { " - " } else { " + " });
        let mag = c.im.abs();
        if !mag.is_one() {
            write_rational(&mut body, &mag);
            body.push('*');
        }
        body.push_str("i)");
        (false, body)
    };
    let body = match (coeff.is_empty(), mono.is_empty()) {
        (true, _) => mono,
        (false, true) => coeff,
        (false, false) => format!("{coeff}*{mono}"),
    };
    (neg, body)
}

/// Canonical text of one component, terms in lexicographic exponent order.
pub fn format_poly(p: &Poly4) -> String {
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().enumerate() {
        let (neg, body) = term_string(e, c);
        match (idx == 0, neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical `plus | minus` text; parse it back with [`ParseOptions::raw`].
pub fn format(f: &BicomplexFunction) -> String {
    format!("{} | {}", format_poly(&f.plus), format_poly(&f.minus))
}

/// Like [`format`], but a complex-valued function (equal components) prints
/// as a single component. Also parseable in raw idempotent mode.
pub fn format_compact(f: &BicomplexFunction) -> String {
    if f.plus == f.minus {
        format_poly(&f.plus)
    } else {
        format(f)
    }
}
