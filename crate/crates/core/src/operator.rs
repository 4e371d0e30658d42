//! Constant-coefficient bicomplex differential operators.
//!
//! An operator `T = A1 + j A2` acts on `f = f+ e+ + f- e-` by
//! `T f = (T+ f+) e+ + (T- f-) e-` with `T± = A1 ∓ i A2`. Each component is a
//! polynomial in the derivative symbols `(d/da, d/d(ac), d/db, d/d(bc))`, so it
//! is stored as a [`Poly4`] whose exponents are derivative orders.

use crate::error::{Error, Result};
use crate::poly::{BicomplexFunction, Poly4, Var};
use crate::scalar::{rational, Bicomplex, Conjugation, GaussianRational};

/// The four first-order bicomplex Wirtinger operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Wirtinger {
    /// `d/dZ`
    Z,
    /// `d/dZ*`
    ZStar,
    /// `d/dZ†`
    ZDagger,
    /// `d/dZ~`
    ZTilde,
}

impl Wirtinger {
    pub const ALL: [Wirtinger; 4] = [Wirtinger::Z, Wirtinger::ZStar, Wirtinger::ZDagger, Wirtinger::ZTilde];

    /// Variables differentiated in the `(plus, minus)` components.
    pub fn component_vars(self) -> (Var, Var) {
        match self {
            Wirtinger::Z => (Var::Alpha, Var::Beta),
            Wirtinger::ZStar => (Var::AlphaBar, Var::BetaBar),
            Wirtinger::ZDagger => (Var::Beta, Var::Alpha),
            Wirtinger::ZTilde => (Var::BetaBar, Var::AlphaBar),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Operator {
    pub plus: Poly4,
    pub minus: Poly4,
}

impl Operator {
    pub fn new(plus: Poly4, minus: Poly4) -> Self {
        Self { plus, minus }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Multiplication by a bicomplex constant (`Id_BC` for `c = 1`).
    pub fn scalar(c: &Bicomplex) -> Self {
        Self::new(Poly4::constant(c.alpha.clone()), Poly4::constant(c.beta.clone()))
    }

    pub fn identity() -> Self {
        Self::scalar(&Bicomplex::one())
    }

    /// Multiplication by `k = ij`.
    pub fn sigma() -> Self {
        Self::scalar(&Bicomplex::k())
    }

    pub fn wirtinger(kind: Wirtinger) -> Self {
        let (p, m) = kind.component_vars();
        Self::new(Poly4::var(p), Poly4::var(m))
    }

    /// The Laplacians `Δ1..Δ7`, built as products of Wirtinger operators.
    pub fn laplacian(index: u32) -> Result<Self> {
        use Wirtinger::*;
        let w = Self::wirtinger;
        let op = match index {
            1 => w(Z).compose(&w(ZStar)),
            2 => w(Z).compose(&w(ZDagger)),
            3 => w(Z).compose(&w(ZTilde)),
            4 => w(ZStar).compose(&w(ZDagger)),
            5 => w(ZStar).compose(&w(ZTilde)),
            6 => w(ZDagger).compose(&w(ZTilde)),
            7 => w(Z).compose(&w(ZStar)).add(&w(ZDagger).compose(&w(ZTilde))),
            other => return Err(Error::LaplacianIndex(other)),
        };
        Ok(op)
    }

    /// `Δ_bc = Δ1`.
    pub fn laplacian_bc() -> Self {
        Self::wirtinger(Wirtinger::Z).compose(&Self::wirtinger(Wirtinger::ZStar))
    }

    /// Builds `A1 + j A2` from its complex components.
    pub fn from_j_parts(a1: &Poly4, a2: &Poly4) -> Self {
        let ia2 = a2.scale(&GaussianRational::i());
        Self::new(a1 - &ia2, a1 + &ia2)
    }

    /// `(A1, A2)` with `A1 = (T+ + T-)/2` and `A2 = i (T+ - T-)/2`.
    pub fn j_parts(&self) -> (Poly4, Poly4) {
        let half = rational(1, 2);
        let a1 = (&self.plus + &self.minus).scale_rational(&half);
        let a2 = (&self.plus - &self.minus).scale(&GaussianRational::new(rational(0, 1), half));
        (a1, a2)
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.plus + &other.plus, &self.minus + &other.minus)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.plus - &other.plus, &self.minus - &other.minus)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::new(&self.plus * &other.plus, &self.minus * &other.minus)
    }

    pub fn scale(&self, c: &Bicomplex) -> Self {
        Self::new(self.plus.scale(&c.alpha), self.minus.scale(&c.beta))
    }

    pub fn pow(&self, n: u32) -> Self {
        Self::new(self.plus.pow(n), self.minus.pow(n))
    }

    /// Operational conjugation: `T*op = conj(A1) - j conj(A2)`,
    /// `T†op = A1 - j A2`, `T~op = conj(A1) + j conj(A2)`.
    pub fn conjugate(&self, kind: Conjugation) -> Self {
        match kind {
            Conjugation::Star => Self::new(self.plus.bar(), self.minus.bar()),
            Conjugation::Dagger => Self::new(self.minus.clone(), self.plus.clone()),
            Conjugation::Tilde => Self::new(self.minus.bar(), self.plus.bar()),
        }
    }

    /// `(T f)± = T± f±`.
    pub fn apply(&self, f: &BicomplexFunction) -> BicomplexFunction {
        BicomplexFunction::new(apply_component(&self.plus, &f.plus), apply_component(&self.minus, &f.minus))
    }

    /// `T^n f`, applied one factor at a time.
    pub fn apply_n(&self, f: &BicomplexFunction, n: u32) -> BicomplexFunction {
        let mut g = f.clone();
        for _ in 0..n {
            if g.is_zero() {
                break;
            }
            g = self.apply(&g);
        }
        g
    }
}

fn apply_component(symbol: &Poly4, p: &Poly4) -> Poly4 {
    let mut out = Poly4::zero();
    for (order, c) in symbol.terms() {
        let d = p.partial(order);
        for (e, x) in d.terms() {
            out.add_term(*e, x * c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{f1, g1};
    use crate::scalar::int;

    fn sym(order: [u32; 4]) -> Poly4 {
        Poly4::monomial(order, GaussianRational::one())
    }

    fn v(var: Var) -> Poly4 {
        Poly4::var(var)
    }

    #[test]
    fn dzstar_on_f1() {
        let r = Operator::wirtinger(Wirtinger::ZStar).apply(&f1());
        assert_eq!(r.plus, &v(Var::Beta) + &v(Var::BetaBar));
        assert_eq!(r.minus, &v(Var::Alpha) + &v(Var::AlphaBar));
    }

    #[test]
    fn holomorphic_kernel() {
        let z3 = BicomplexFunction::z().pow(3);
        for w in [Wirtinger::ZStar, Wirtinger::ZDagger, Wirtinger::ZTilde] {
            assert!(Operator::wirtinger(w).apply(&z3).is_zero());
        }
    }

    #[test]
    fn power_rule() {
        let dz = Operator::wirtinger(Wirtinger::Z);
        for n in 1..6u32 {
            let lhs = dz.apply(&BicomplexFunction::z().pow(n));
            let rhs = BicomplexFunction::z().pow(n - 1).scale_rational(&int(i64::from(n)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn conjugates_of_dz() {
        let dz = Operator::wirtinger(Wirtinger::Z);
        assert_eq!(dz.conjugate(Conjugation::Star), Operator::wirtinger(Wirtinger::ZStar));
        assert_eq!(dz.conjugate(Conjugation::Dagger), Operator::wirtinger(Wirtinger::ZDagger));
        assert_eq!(dz.conjugate(Conjugation::Tilde), Operator::wirtinger(Wirtinger::ZTilde));
    }

    #[test]
    fn laplacian_table() {
        // Explicit idempotent forms, entered independently of the Wirtinger products.
        let table = [
            (1, sym([1, 1, 0, 0]), sym([0, 0, 1, 1])),
            (2, sym([1, 0, 1, 0]), sym([1, 0, 1, 0])),
            (3, sym([1, 0, 0, 1]), sym([0, 1, 1, 0])),
            (4, sym([0, 1, 1, 0]), sym([1, 0, 0, 1])),
            (5, sym([0, 1, 0, 1]), sym([0, 1, 0, 1])),
            (6, sym([0, 0, 1, 1]), sym([1, 1, 0, 0])),
        ];
        for (i, p, m) in table {
            assert_eq!(Operator::laplacian(i).unwrap(), Operator::new(p, m), "Δ{i}");
        }
        let d7 = Operator::laplacian(1).unwrap().add(&Operator::laplacian(6).unwrap());
        assert_eq!(Operator::laplacian(7).unwrap(), d7);
        assert_eq!(Operator::laplacian(0), Err(Error::LaplacianIndex(0)));
        assert_eq!(Operator::laplacian(8), Err(Error::LaplacianIndex(8)));
        assert_eq!(Operator::laplacian_bc(), Operator::laplacian(1).unwrap());
    }

    #[test]
    fn counterexample_laplacians() {
        assert!(Operator::laplacian(1).unwrap().apply(&f1()).is_zero());
        let d5 = Operator::laplacian(5).unwrap().apply(&f1());
        assert_eq!(d5, BicomplexFunction::one());
        let piecewise = Operator::wirtinger(Wirtinger::ZStar)
            .apply(&Operator::wirtinger(Wirtinger::ZTilde).apply(&f1()));
        assert_eq!(piecewise, d5);
        let c = BicomplexFunction::constant(&Bicomplex::from_int(5));
        assert!(Operator::laplacian(7).unwrap().apply(&c).is_zero());
    }

    #[test]
    fn scalar_operators() {
        let g = g1();
        assert_eq!(Operator::identity().apply(&g), g);
        assert_eq!(Operator::sigma().apply(&g), BicomplexFunction::new(g.plus.clone(), -&g.minus));
    }

    #[test]
    fn reduction_identities_on_g1() {
        let g = g1();
        let lap = |i| Operator::laplacian(i).unwrap();
        let d6 = lap(6).apply(&g);
        let via = lap(1).apply(&g.conjugate(Conjugation::Dagger)).conjugate(Conjugation::Dagger);
        assert_eq!(d6, via);
    }

    #[test]
    fn j_parts_round_trip() {
        let t = Operator::laplacian(3).unwrap().add(&Operator::sigma());
        let (a1, a2) = t.j_parts();
        assert_eq!(Operator::from_j_parts(&a1, &a2), t);
        // Δ2 = d^2/dz1^2 + d^2/dz2^2 has no j part.
        let (_, a2) = Operator::laplacian(2).unwrap().j_parts();
        assert!(a2.is_zero());
    }

    #[test]
    fn dagger_op_negates_j_part() {
        let t = Operator::laplacian(4).unwrap().add(&Operator::wirtinger(Wirtinger::Z));
        let (a1, a2) = t.j_parts();
        assert_eq!(t.conjugate(Conjugation::Dagger), Operator::from_j_parts(&a1, &-&a2));
        assert_eq!(t.conjugate(Conjugation::Star), Operator::from_j_parts(&a1.bar(), &-&a2.bar()));
        assert_eq!(t.conjugate(Conjugation::Tilde), Operator::from_j_parts(&a1.bar(), &a2.bar()));
    }
}
