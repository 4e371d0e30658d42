//! Sparse polynomials in `(alpha, conj(alpha), beta, conj(beta))` and the
//! bicomplex-valued functions `f = f+ e+ + f- e-` built from them.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{int, Bicomplex, Conjugation, GaussianRational, Rational};

/// Exponents of `(alpha, conj(alpha), beta, conj(beta))`.
pub type Exponents = [u32; 4];

/// The four idempotent variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Alpha = 0,
    AlphaBar = 1,
    Beta = 2,
    BetaBar = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Alpha, Var::AlphaBar, Var::Beta, Var::BetaBar];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Token used by the textual format.
    pub fn token(self) -> &'static str {
        match self {
            Var::Alpha => "a",
            Var::AlphaBar => "ac",
            Var::Beta => "b",
            Var::BetaBar => "bc",
        }
    }

    /// The variable obtained by complex conjugation.
    pub fn bar(self) -> Var {
        match self {
            Var::Alpha => Var::AlphaBar,
            Var::AlphaBar => Var::Alpha,
            Var::Beta => Var::BetaBar,
            Var::BetaBar => Var::Beta,
        }
    }
}

/// One of the two conjugate variable pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarPair {
    Alpha,
    Beta,
}

impl VarPair {
    /// `(holomorphic, antiholomorphic)` variables of the pair.
    pub fn vars(self) -> (Var, Var) {
        match self {
            VarPair::Alpha => (Var::Alpha, Var::AlphaBar),
            VarPair::Beta => (Var::Beta, Var::BetaBar),
        }
    }

    pub fn other(self) -> VarPair {
        match self {
            VarPair::Alpha => VarPair::Beta,
            VarPair::Beta => VarPair::Alpha,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VarPair::Alpha => "(alpha, conj alpha)",
            VarPair::Beta => "(beta, conj beta)",
        }
    }
}

fn bar_exponents(e: &Exponents) -> Exponents {
    [e[1], e[0], e[3], e[2]]
}

/// A polynomial with Gaussian-rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly4 {
    terms: BTreeMap<Exponents, GaussianRational>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial([0; 4], c)
    }

    pub fn monomial(exps: Exponents, c: GaussianRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Self::monomial(e, GaussianRational::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, GaussianRational)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: Exponents, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> GaussianRational {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Maximum exponent of `v`, or `None` for the zero polynomial.
    pub fn degree(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    pub fn degrees(&self) -> [Option<u32>; 4] {
        Var::ALL.map(|v| self.degree(v))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.index()] > 0)
    }

    /// True when every monomial only involves variables of `pair`.
    pub fn uses_only(&self, pair: VarPair) -> bool {
        let (a, b) = pair.other().vars();
        !self.depends_on(a) && !self.depends_on(b)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&GaussianRational::from_rational(r.clone()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Complex conjugation of the polynomial function: conjugates every
    /// coefficient and swaps each variable with its conjugate.
    pub fn bar(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (bar_exponents(e), c.conj()))
                .collect(),
        }
    }

    /// True when the polynomial takes real values everywhere (`bar(p) = p`).
    pub fn is_real_valued(&self) -> bool {
        self.bar() == *self
    }

    /// `d^n p / dv^n`.
    pub fn derivative(&self, v: Var, n: u32) -> Self {
        self.partial(&{
            let mut e = [0; 4];
            e[v.index()] = n;
            e
        })
    }

    /// Mixed partial derivative with the given multi-order.
    pub fn partial(&self, order: &Exponents) -> Self {
        if order.iter().all(|&o| o == 0) {
            return self.clone();
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if (0..4).any(|i| e[i] < order[i]) {
                continue;
            }
            let mut factor: u64 = 1;
            let mut ne = *e;
            let mut overflow = false;
            for i in 0..4 {
                for t in 0..order[i] {
                    match factor.checked_mul(u64::from(e[i] - t)) {
                        Some(f) => factor = f,
                        None => overflow = true,
                    }
                }
                ne[i] -= order[i];
            }
            let coeff = if overflow {
                let mut r = int(1);
                for i in 0..4 {
                    for t in 0..order[i] {
                        r *= int(i64::from(e[i] - t));
                    }
                }
                c.scale(&r)
            } else {
                c.scale(&Rational::from_integer(factor.into()))
            };
            out.add_term(ne, coeff);
        }
        out
    }

    /// Substitutes values for `(alpha, conj alpha, beta, conj beta)`.
    pub fn eval(&self, vals: &[GaussianRational; 4]) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..4 {
                if e[i] > 0 {
                    t = &t * &vals[i].pow(e[i]);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Keeps only the terms satisfying `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&Exponents) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| pred(e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Multiplies by the monomial with exponents `shift`.
    pub fn shift(&self, shift: &Exponents) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + shift[0], e[1] + shift[1], e[2] + shift[2], e[3] + shift[3]], c.clone()))
                .collect(),
        }
    }
}

impl Add for &Poly4 {
    type Output = Poly4;
    fn add(self, rhs: Self) -> Poly4 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly4 {
    type Output = Poly4;
    fn sub(self, rhs: Self) -> Poly4 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &Poly4 {
    type Output = Poly4;
    fn mul(self, rhs: Self) -> Poly4 {
        let mut out = Poly4::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly4 {
    type Output = Poly4;
    fn neg(self) -> Poly4 {
        Poly4 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Poly4, Add add, Sub sub, Mul mul);

/// A polynomial bicomplex-valued function `f = plus e+ + minus e-`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BicomplexFunction {
    pub plus: Poly4,
    pub minus: Poly4,
}

/// Per-variable maximum exponents of each component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FunctionDegrees {
    pub plus: [Option<u32>; 4],
    pub minus: [Option<u32>; 4],
}

impl BicomplexFunction {
    pub fn new(plus: Poly4, minus: Poly4) -> Self {
        Self { plus, minus }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(&Bicomplex::one())
    }

    pub fn constant(c: &Bicomplex) -> Self {
        Self::new(Poly4::constant(c.alpha.clone()), Poly4::constant(c.beta.clone()))
    }

    /// The complex-valued function `p`, embedded as `p e+ + p e-`.
    pub fn complex(p: Poly4) -> Self {
        Self::new(p.clone(), p)
    }

    /// The identity function `Z`.
    pub fn z() -> Self {
        Self::new(Poly4::var(Var::Alpha), Poly4::var(Var::Beta))
    }

    /// The function `Z` conjugated by `kind` (`Z†`, `Z~` or `Z*`).
    pub fn z_conj(kind: Conjugation) -> Self {
        Self::z().conjugate(kind)
    }

    /// `|Z|^2_bc = Z Z* = alpha conj(alpha) e+ + beta conj(beta) e-`.
    pub fn modulus_sqr() -> Self {
        &Self::z() * &Self::z_conj(Conjugation::Star)
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub fn scale(&self, c: &Bicomplex) -> Self {
        Self::new(self.plus.scale(&c.alpha), self.minus.scale(&c.beta))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self::new(self.plus.scale_rational(r), self.minus.scale_rational(r))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self::new(self.plus.pow(exp), self.minus.pow(exp))
    }

    /// Pointwise conjugation of the values of `f`.
    pub fn conjugate(&self, kind: Conjugation) -> Self {
        match kind {
            Conjugation::Star => Self::new(self.plus.bar(), self.minus.bar()),
            Conjugation::Dagger => Self::new(self.minus.clone(), self.plus.clone()),
            Conjugation::Tilde => Self::new(self.minus.bar(), self.plus.bar()),
        }
    }

    pub fn evaluate(&self, z: &Bicomplex) -> Bicomplex {
        let vals = [z.alpha.clone(), z.alpha.conj(), z.beta.clone(), z.beta.conj()];
        Bicomplex::new(self.plus.eval(&vals), self.minus.eval(&vals))
    }

    /// `(f + f*)/2`.
    pub fn re_hyp(&self) -> Self {
        let half = crate::scalar::rational(1, 2);
        (self + &self.conjugate(Conjugation::Star)).scale_rational(&half)
    }

    /// `(f + f† + f~ + f*)/4`.
    pub fn re_c(&self) -> Self {
        let quarter = crate::scalar::rational(1, 4);
        let sum = Conjugation::ALL
            .iter()
            .fold(self.clone(), |acc, &k| &acc + &self.conjugate(k));
        sum.scale_rational(&quarter)
    }

    /// `(re_hyp f, re_c f)`.
    pub fn real_parts(&self) -> (Self, Self) {
        (self.re_hyp(), self.re_c())
    }

    pub fn degrees(&self) -> FunctionDegrees {
        FunctionDegrees {
            plus: self.plus.degrees(),
            minus: self.minus.degrees(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.plus.total_degree().max(self.minus.total_degree())
    }

    /// Both components fixed by complex conjugation.
    pub fn is_hyperbolic_valued(&self) -> bool {
        self.plus.is_real_valued() && self.minus.is_real_valued()
    }

    pub fn is_real_valued(&self) -> bool {
        self.plus == self.minus && self.plus.is_real_valued()
    }

    /// Multiplies by the basis monomial `(Z*)^l1 (Z~)^l2 (Z†)^l3`.
    pub fn times_conjugate_powers(&self, l1: u32, l2: u32, l3: u32) -> Self {
        Self::new(self.plus.shift(&[0, l1, l3, l2]), self.minus.shift(&[l3, l2, 0, l1]))
    }
}

impl Add for &BicomplexFunction {
    type Output = BicomplexFunction;
    fn add(self, rhs: Self) -> BicomplexFunction {
        BicomplexFunction::new(&self.plus + &rhs.plus, &self.minus + &rhs.minus)
    }
}

impl Sub for &BicomplexFunction {
    type Output = BicomplexFunction;
    fn sub(self, rhs: Self) -> BicomplexFunction {
        BicomplexFunction::new(&self.plus - &rhs.plus, &self.minus - &rhs.minus)
    }
}

impl Mul for &BicomplexFunction {
    type Output = BicomplexFunction;
    fn mul(self, rhs: Self) -> BicomplexFunction {
        BicomplexFunction::new(&self.plus * &rhs.plus, &self.minus * &rhs.minus)
    }
}

impl Neg for &BicomplexFunction {
    type Output = BicomplexFunction;
    fn neg(self) -> BicomplexFunction {
        BicomplexFunction::new(-&self.plus, -&self.minus)
    }
}

forward_owned!(BicomplexFunction, Add add, Sub sub, Mul mul);

impl std::iter::Sum for BicomplexFunction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, f| &acc + &f)
    }
}

/// `F1 = (alpha + conj alpha)(beta + conj beta)`, real-valued and bc-harmonic.
pub fn f1() -> BicomplexFunction {
    let a = &Poly4::var(Var::Alpha) + &Poly4::var(Var::AlphaBar);
    let b = &Poly4::var(Var::Beta) + &Poly4::var(Var::BetaBar);
    BicomplexFunction::complex(&a * &b)
}

/// `G1 = 2 Z* (Z† + Z~)`, whose classical real part is `F1`.
pub fn g1() -> BicomplexFunction {
    let zs = BicomplexFunction::z_conj(Conjugation::Star);
    let sum = &BicomplexFunction::z_conj(Conjugation::Dagger)
        + &BicomplexFunction::z_conj(Conjugation::Tilde);
    (&zs * &sum).scale_rational(&int(2))
}
