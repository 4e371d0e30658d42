//! Exact bicomplex scalars.
//!
//! A bicomplex number `Z = z1 + j z2` (with `z1, z2` complex in `i`, `ij = ji = k`)
//! is stored by its idempotent coordinates `Z = alpha e+ + beta e-`, where
//! `e± = (1 ± k)/2`, `alpha = z1 - i z2` and `beta = z1 + i z2`. Multiplication,
//! inversion and the three conjugations are all coordinatewise in this basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    pub fn div_rational(&self, r: &Rational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(&self.re / r, &self.im / r))
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        Self::new(-self.im.clone(), self.re.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
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

forward_owned!(GaussianRational, Add add, Sub sub, Mul mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Writes `coeff*unit` with the coefficient 1 elided, always as a signed term.
fn write_unit_term(
    f: &mut fmt::Formatter<'_>,
    coeff: &Rational,
    unit: &str,
    first: bool,
) -> fmt::Result {
    let neg = coeff.is_negative();
    let mag = coeff.abs();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if unit.is_empty() {
        write_rational(f, &mag)
    } else if mag.is_one() {
        f.write_str(unit)
    } else {
        write_rational(f, &mag)?;
        write!(f, "*{unit}")
    }
}

/// Writes a sum of rational multiples of units, skipping zero entries.
fn write_unit_sum(f: &mut fmt::Formatter<'_>, parts: &[(&Rational, &str)]) -> fmt::Result {
    let mut first = true;
    for (c, unit) in parts {
        if c.is_zero() {
            continue;
        }
        write_unit_term(f, c, unit, first)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_unit_sum(f, &[(&self.re, ""), (&self.im, "i")])
    }
}

/// The three bicomplex conjugations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjugation {
    /// `Z† = z1 - j z2`; swaps the idempotent coordinates.
    Dagger,
    /// `Z~ = conj(z1) + j conj(z2)`; swaps and conjugates.
    Tilde,
    /// `Z* = conj(z1) - j conj(z2)`; conjugates both coordinates.
    Star,
}

impl Conjugation {
    pub const ALL: [Conjugation; 3] = [Conjugation::Dagger, Conjugation::Tilde, Conjugation::Star];

    pub fn name(self) -> &'static str {
        match self {
            Conjugation::Dagger => "dagger",
            Conjugation::Tilde => "tilde",
            Conjugation::Star => "star",
        }
    }

    /// Whether the conjugation exchanges the `e+` and `e-` components.
    pub fn swaps(self) -> bool {
        !matches!(self, Conjugation::Star)
    }

    /// Whether the conjugation applies complex conjugation to each component.
    pub fn bars(self) -> bool {
        !matches!(self, Conjugation::Dagger)
    }

    /// The conjugation equal to `self` followed by `other`.
    pub fn then(self, other: Conjugation) -> Option<Conjugation> {
        let swaps = self.swaps() ^ other.swaps();
        let bars = self.bars() ^ other.bars();
        match (swaps, bars) {
            (false, false) => None,
            (true, false) => Some(Conjugation::Dagger),
            (true, true) => Some(Conjugation::Tilde),
            (false, true) => Some(Conjugation::Star),
        }
    }
}

/// A bicomplex number in idempotent coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Bicomplex {
    pub alpha: GaussianRational,
    pub beta: GaussianRational,
}

impl Bicomplex {
    pub fn new(alpha: GaussianRational, beta: GaussianRational) -> Self {
        Self { alpha, beta }
    }

    /// Builds `z1 + j z2`.
    pub fn from_cartesian(z1: &GaussianRational, z2: &GaussianRational) -> Self {
        let iz2 = z2.mul_i();
        Self::new(z1 - &iz2, z1 + &iz2)
    }

    /// Returns `(z1, z2)` with `Z = z1 + j z2`.
    pub fn to_cartesian(&self) -> (GaussianRational, GaussianRational) {
        let half = rational(1, 2);
        let z1 = (&self.alpha + &self.beta).scale(&half);
        let z2 = (&self.alpha - &self.beta).mul_i().scale(&half);
        (z1, z2)
    }

    /// Builds `x0 + x1 i + x2 j + x3 k`.
    pub fn from_units(x0: Rational, x1: Rational, x2: Rational, x3: Rational) -> Self {
        Self::from_cartesian(&GaussianRational::new(x0, x1), &GaussianRational::new(x2, x3))
    }

    /// Coefficients of `1, i, j, k`.
    pub fn to_units(&self) -> [Rational; 4] {
        let (z1, z2) = self.to_cartesian();
        [z1.re, z1.im, z2.re, z2.im]
    }

    pub fn from_complex(z: GaussianRational) -> Self {
        Self::new(z.clone(), z)
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_complex(GaussianRational::from_rational(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::from_complex(GaussianRational::i())
    }

    pub fn j() -> Self {
        Self::from_cartesian(&GaussianRational::zero(), &GaussianRational::one())
    }

    pub fn k() -> Self {
        Self::new(GaussianRational::one(), -GaussianRational::one())
    }

    pub fn e_plus() -> Self {
        Self::new(GaussianRational::one(), GaussianRational::zero())
    }

    pub fn e_minus() -> Self {
        Self::new(GaussianRational::zero(), GaussianRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self::new(self.alpha.pow(exp), self.beta.pow(exp))
    }

    pub fn div_rational(&self, r: &Rational) -> Result<Self> {
        Ok(Self::new(self.alpha.div_rational(r)?, self.beta.div_rational(r)?))
    }

    pub fn conjugate(&self, kind: Conjugation) -> Self {
        match kind {
            Conjugation::Dagger => Self::new(self.beta.clone(), self.alpha.clone()),
            Conjugation::Star => Self::new(self.alpha.conj(), self.beta.conj()),
            Conjugation::Tilde => Self::new(self.beta.conj(), self.alpha.conj()),
        }
    }

    /// `det(Z) = z1^2 + z2^2`, computed from the Cartesian coordinates.
    pub fn det(&self) -> GaussianRational {
        let (z1, z2) = self.to_cartesian();
        &(&z1 * &z1) + &(&z2 * &z2)
    }

    /// Inverse; fails on the null cone (`alpha = 0` or `beta = 0`).
    pub fn invert(&self) -> Result<Self> {
        if self.alpha.is_zero() || self.beta.is_zero() {
            return Err(Error::NullCone(self.to_string()));
        }
        Ok(Self::new(self.alpha.inv()?, self.beta.inv()?))
    }

    /// `(Z + Z† + Z~ + Z*)/4`, the classical real part.
    pub fn real_part(&self) -> Rational {
        (&self.alpha.re + &self.beta.re) / int(2)
    }

    /// `(Z + Z*)/2`, the hyperbolic real part.
    pub fn hyperbolic_part(&self) -> Hyperbolic {
        Hyperbolic::new(self.alpha.re.clone(), self.beta.re.clone())
    }

    pub fn real_parts(&self) -> (Rational, Hyperbolic) {
        (self.real_part(), self.hyperbolic_part())
    }

    pub fn predicates(&self) -> Predicates {
        let is_hyperbolic = self.alpha.is_real() && self.beta.is_real();
        let is_idem = |z: &GaussianRational| z.is_zero() || z.is_one();
        Predicates {
            is_real: is_hyperbolic && self.alpha == self.beta,
            is_hyperbolic,
            is_null_cone: self.alpha.is_zero() || self.beta.is_zero(),
            is_idempotent: is_idem(&self.alpha) && is_idem(&self.beta),
        }
    }

    /// Alternate printer: `alpha | beta`.
    pub fn idempotent_string(&self) -> String {
        format!("{} | {}", self.alpha, self.beta)
    }
}

/// Exact predicates on a bicomplex scalar.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Predicates {
    pub is_real: bool,
    pub is_hyperbolic: bool,
    pub is_null_cone: bool,
    pub is_idempotent: bool,
}

impl Add for &Bicomplex {
    type Output = Bicomplex;
    fn add(self, rhs: Self) -> Bicomplex {
        Bicomplex::new(&self.alpha + &rhs.alpha, &self.beta + &rhs.beta)
    }
}

impl Sub for &Bicomplex {
    type Output = Bicomplex;
    fn sub(self, rhs: Self) -> Bicomplex {
        Bicomplex::new(&self.alpha - &rhs.alpha, &self.beta - &rhs.beta)
    }
}

impl Mul for &Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: Self) -> Bicomplex {
        Bicomplex::new(&self.alpha * &rhs.alpha, &self.beta * &rhs.beta)
    }
}

impl Neg for &Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        Bicomplex::new(-&self.alpha, -&self.beta)
    }
}

forward_owned!(Bicomplex, Add add, Sub sub, Mul mul);

impl Neg for Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        -&self
    }
}

impl fmt::Display for Bicomplex {
    /// Canonical form `a + b*i + c*j + d*k`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x0, x1, x2, x3] = self.to_units();
        write_unit_sum(f, &[(&x0, ""), (&x1, "i"), (&x2, "j"), (&x3, "k")])
    }
}

/// A hyperbolic number `x + y k = x_plus e+ + x_minus e-`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Hyperbolic {
    pub x_plus: Rational,
    pub x_minus: Rational,
}

impl Hyperbolic {
    pub fn new(x_plus: Rational, x_minus: Rational) -> Self {
        Self { x_plus, x_minus }
    }

    /// Builds `x + y k`.
    pub fn from_xy(x: &Rational, y: &Rational) -> Self {
        Self::new(x + y, x - y)
    }

    pub fn x(&self) -> Rational {
        (&self.x_plus + &self.x_minus) / int(2)
    }

    pub fn y(&self) -> Rational {
        (&self.x_plus - &self.x_minus) / int(2)
    }

    pub fn to_bicomplex(&self) -> Bicomplex {
        Bicomplex::new(
            GaussianRational::from_rational(self.x_plus.clone()),
            GaussianRational::from_rational(self.x_minus.clone()),
        )
    }
}

impl fmt::Display for Hyperbolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = (self.x(), self.y());
        write_unit_sum(f, &[(&x, ""), (&y, "k")])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(int(re), int(im))
    }

    fn units(a: i64, b: i64, c: i64, d: i64) -> Bicomplex {
        Bicomplex::from_units(int(a), int(b), int(c), int(d))
    }

    #[test]
    fn idempotent_table() {
        let (ep, em) = (Bicomplex::e_plus(), Bicomplex::e_minus());
        assert!((&ep * &em).is_zero());
        assert_eq!(&ep * &ep, ep);
        assert_eq!(&em * &em, em);
        assert_eq!(&ep + &em, Bicomplex::one());
        assert_eq!(&ep - &em, &Bicomplex::i() * &Bicomplex::j());
        assert_eq!(Bicomplex::k(), &Bicomplex::i() * &Bicomplex::j());
    }

    #[test]
    fn one_plus_j_squared_both_routes() {
        let z = units(1, 0, 1, 0);
        assert_eq!(z.alpha, gr(1, -1));
        assert_eq!(z.beta, gr(1, 1));
        // Cartesian route: (z1 + j z2)^2 = z1^2 - z2^2 + 2 j z1 z2.
        let (z1, z2) = z.to_cartesian();
        let sq_z1 = &(&z1 * &z1) - &(&z2 * &z2);
        let sq_z2 = (&z1 * &z2).scale(&int(2));
        let cartesian = Bicomplex::from_cartesian(&sq_z1, &sq_z2);
        let idem = z.pow(2);
        assert_eq!(idem, cartesian);
        assert_eq!(idem, units(0, 0, 2, 0));
        assert_eq!(idem.to_string(), "2*j");
    }

    #[test]
    fn conjugations_in_coordinates() {
        let z = Bicomplex::new(gr(1, 2), gr(3, -4));
        assert_eq!(z.conjugate(Conjugation::Dagger), Bicomplex::new(gr(3, -4), gr(1, 2)));
        assert_eq!(z.conjugate(Conjugation::Star), Bicomplex::new(gr(1, -2), gr(3, 4)));
        assert_eq!(z.conjugate(Conjugation::Tilde), Bicomplex::new(gr(3, 4), gr(1, -2)));
        for c in Conjugation::ALL {
            assert_eq!(z.conjugate(c).conjugate(c), z);
        }
        assert_eq!(
            z.conjugate(Conjugation::Dagger).conjugate(Conjugation::Tilde),
            z.conjugate(Conjugation::Star)
        );
    }

    #[test]
    fn conjugations_match_unit_definitions() {
        // Z = 1 + 2i + 3j + 4k: z1 = 1 + 2i, z2 = 3 + 4i.
        let z = units(1, 2, 3, 4);
        let dagger = Bicomplex::from_cartesian(&gr(1, 2), &gr(-3, -4));
        let tilde = Bicomplex::from_cartesian(&gr(1, -2), &gr(3, -4));
        let star = Bicomplex::from_cartesian(&gr(1, -2), &gr(-3, 4));
        assert_eq!(z.conjugate(Conjugation::Dagger), dagger);
        assert_eq!(z.conjugate(Conjugation::Tilde), tilde);
        assert_eq!(z.conjugate(Conjugation::Star), star);
    }

    #[test]
    fn rotation_table() {
        use Conjugation::*;
        assert_eq!(Dagger.then(Tilde), Some(Star));
        assert_eq!(Star.then(Tilde), Some(Dagger));
        assert_eq!(Star.then(Dagger), Some(Tilde));
        assert_eq!(Star.then(Star), None);
    }

    #[test]
    fn inversion() {
        let err = units(1, 0, 0, 1).invert().unwrap_err();
        assert!(matches!(err, Error::NullCone(_)));
        assert_eq!(units(1, 0, 0, 1), Bicomplex::e_plus().pow(1) + Bicomplex::e_plus());
        assert_eq!(Bicomplex::one().invert().unwrap(), Bicomplex::one());
        let z = Bicomplex::new(gr(2, 0), gr(4, 0));
        let inv = z.invert().unwrap();
        assert_eq!(
            inv,
            Bicomplex::new(
                GaussianRational::from_rational(rational(1, 2)),
                GaussianRational::from_rational(rational(1, 4))
            )
        );
        assert_eq!(&inv * &z, Bicomplex::one());
    }

    #[test]
    fn real_parts_example() {
        let z = units(1, 2, 3, 4);
        assert_eq!(z.alpha, gr(5, -1));
        assert_eq!(z.beta, gr(-3, 5));
        let (re_c, re_hyp) = z.real_parts();
        assert_eq!(re_hyp, Hyperbolic::new(int(5), int(-3)));
        // Cross-check: Re(z1) + Im(z2) k.
        assert_eq!(re_hyp, Hyperbolic::from_xy(&int(1), &int(4)));
        assert_eq!(re_hyp.to_string(), "1 + 4*k");
        assert_eq!(re_c, int(1));
        let i = Bicomplex::i();
        assert_eq!(i.real_part(), int(0));
        assert_eq!(i.hyperbolic_part(), Hyperbolic::default());
        let h = Hyperbolic::from_xy(&int(2), &rational(-3, 5));
        assert_eq!(h.to_bicomplex().hyperbolic_part(), h);
        assert_eq!(h.to_bicomplex().conjugate(Conjugation::Star), h.to_bicomplex());
    }

    #[test]
    fn predicate_examples() {
        let p = Bicomplex::from_int(3).predicates();
        assert!(p.is_real && p.is_hyperbolic && !p.is_null_cone && !p.is_idempotent);

        let p = Bicomplex::e_plus().predicates();
        assert!(p.is_hyperbolic && p.is_null_cone && p.is_idempotent && !p.is_real);

        let j = Bicomplex::j();
        assert_eq!(j.alpha, gr(0, -1));
        assert_eq!(j.beta, gr(0, 1));
        let p = j.predicates();
        assert!(!p.is_real && !p.is_hyperbolic && !p.is_null_cone && !p.is_idempotent);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Bicomplex::zero().to_string(), "0");
        assert_eq!(units(-1, 0, 0, -1).to_string(), "-1 - k");
        let z = Bicomplex::from_units(rational(1, 2), int(0), rational(-3, 4), int(1));
        assert_eq!(z.to_string(), "1/2 - 3/4*j + k");
        assert_eq!(units(1, 2, 3, 4).idempotent_string(), "5 - i | -3 + 5*i");
    }

    #[test]
    fn division_by_zero_rejected() {
        assert_eq!(
            Bicomplex::one().div_rational(&int(0)),
            Err(Error::DivisionByZero)
        );
    }
}
