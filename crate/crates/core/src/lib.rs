//! Exact computer algebra for bicomplex numbers and polynomial bicomplex functions.
//!
//! Scalars and functions are stored in idempotent coordinates
//! `Z = alpha e+ + beta e-`, where multiplication, the three conjugations and
//! every Wirtinger operator act componentwise. All arithmetic is over Gaussian
//! rationals with arbitrary-precision integers, so every kernel and
//! annihilation test is an exact equality.

pub mod classify;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod expr;
pub mod gen;
pub mod operator;
pub mod poly;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use operator::{Operator, Wirtinger};
pub use poly::{BicomplexFunction, Poly4, Var, VarPair};
pub use scalar::{Bicomplex, Conjugation, GaussianRational, Hyperbolic, Rational};
