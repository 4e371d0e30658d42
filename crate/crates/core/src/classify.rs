//! Exact-order classification of polynomial bicomplex functions.
//!
//! Every query has two routes: a closed form read off the component degrees
//! and an iterated application of the relevant operators. The harness checks
//! that they agree.

use crate::error::{Error, Result};
use crate::operator::{Operator, Wirtinger};
use crate::poly::{BicomplexFunction, Poly4, Var, VarPair};

/// Minimal `(m, n, k)` with `d_{Z*}^m f = d_{Z~}^n f = d_{Z†}^k f = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Signature {
    pub m: u32,
    pub n: u32,
    pub k: u32,
}

impl Signature {
    pub fn new(m: u32, n: u32, k: u32) -> Self {
        Self { m, n, k }
    }

    pub fn as_array(&self) -> [u32; 3] {
        [self.m, self.n, self.k]
    }
}

/// Smallest `n` with `T^n f = 0`.
///
/// The search is capped at `2 + total degree` applications, enough for every
/// degree-lowering operator; reaching the cap yields [`Error::NotNilpotent`].
pub fn polyharmonic_order(f: &BicomplexFunction, op: &Operator) -> Result<u32> {
    let cap = 2 + f.total_degree().unwrap_or(0);
    let mut g = f.clone();
    let mut n = 0;
    while !g.is_zero() {
        if n >= cap {
            return Err(Error::NotNilpotent { cap });
        }
        g = op.apply(&g);
        n += 1;
    }
    Ok(n)
}

fn pair_order(p: &Poly4, pair: VarPair) -> u32 {
    let (h, a) = pair.vars();
    p.terms()
        .map(|(e, _)| 1 + e[h.index()].min(e[a.index()]))
        .max()
        .unwrap_or(0)
}

/// `Δ_bc` order from degrees: each monomial `a^p ac^q` is killed after
/// exactly `min(p, q) + 1` applications, and distinct monomials never cancel.
pub fn laplacian_order_by_degrees(f: &BicomplexFunction) -> u32 {
    pair_order(&f.plus, VarPair::Alpha).max(pair_order(&f.minus, VarPair::Beta))
}

/// Order of a single complex polynomial under `d^2/dz dz̄` for the given pair.
pub fn complex_polyharmonic_order(p: &Poly4, pair: VarPair) -> u32 {
    pair_order(p, pair)
}

fn deg_plus_one(p: &Poly4, v: Var) -> u32 {
    p.degree(v).map_or(0, |d| d + 1)
}

/// Signature from the degree formulas
/// `m = 1 + max(deg_ac f+, deg_bc f-)`, `n = 1 + max(deg_bc f+, deg_ac f-)`,
/// `k = 1 + max(deg_b f+, deg_a f-)`.
pub fn polyholo_signature(f: &BicomplexFunction) -> Signature {
    let (p, q) = (&f.plus, &f.minus);
    Signature {
        m: deg_plus_one(p, Var::AlphaBar).max(deg_plus_one(q, Var::BetaBar)),
        n: deg_plus_one(p, Var::BetaBar).max(deg_plus_one(q, Var::AlphaBar)),
        k: deg_plus_one(p, Var::Beta).max(deg_plus_one(q, Var::Alpha)),
    }
}

fn annihilation_exponent(f: &BicomplexFunction, w: Wirtinger) -> u32 {
    let op = Operator::wirtinger(w);
    let mut g = f.clone();
    let mut n = 0;
    while !g.is_zero() {
        g = op.apply(&g);
        n += 1;
    }
    n
}

/// Signature found by applying `d_{Z*}`, `d_{Z~}`, `d_{Z†}` until the result vanishes.
pub fn signature_by_iteration(f: &BicomplexFunction) -> Signature {
    Signature {
        m: annihilation_exponent(f, Wirtinger::ZStar),
        n: annihilation_exponent(f, Wirtinger::ZTilde),
        k: annihilation_exponent(f, Wirtinger::ZDagger),
    }
}

/// Membership in the bc-holomorphic, first-kind polyholomorphic and
/// `Z*`-polyholomorphic classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassMembership {
    pub is_bc_holomorphic: bool,
    /// `(m, n)` with `f ∈ A1_{m,n}`: `f+` in `(a, ac)` with exact `ac`-degree
    /// `m - 1` and `f-` in `(b, bc)` with exact `bc`-degree `n - 1`.
    pub a1_orders: Option<(u32, u32)>,
    /// `l = max(m, n)` with `f ∈ A_l^Z[Z*]`.
    pub zstar_order: Option<u32>,
}

pub fn class_membership(f: &BicomplexFunction) -> ClassMembership {
    let first_kind = f.plus.uses_only(VarPair::Alpha) && f.minus.uses_only(VarPair::Beta);
    let is_bc_holomorphic =
        first_kind && !f.plus.depends_on(Var::AlphaBar) && !f.minus.depends_on(Var::BetaBar);
    let a1_orders = first_kind.then(|| {
        (
            deg_plus_one(&f.plus, Var::AlphaBar),
            deg_plus_one(&f.minus, Var::BetaBar),
        )
    });
    ClassMembership {
        is_bc_holomorphic,
        a1_orders,
        zstar_order: a1_orders.map(|(m, n)| m.max(n)),
    }
}

/// Kernel-side check: `d_{Z*}^l f = 0`, `d_{Z†} f = 0` and `d_{Z~} f = 0`.
pub fn in_zstar_kernel(f: &BicomplexFunction, l: u32) -> bool {
    Operator::wirtinger(Wirtinger::ZStar).apply_n(f, l).is_zero()
        && Operator::wirtinger(Wirtinger::ZDagger).apply(f).is_zero()
        && Operator::wirtinger(Wirtinger::ZTilde).apply(f).is_zero()
}

/// Full report: signature, class membership and the order under each Laplacian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub signature: Signature,
    pub membership: ClassMembership,
    /// Orders under `Δ1..Δ7`.
    pub orders: [u32; 7],
}

pub fn classify(f: &BicomplexFunction) -> Result<ClassificationReport> {
    let mut orders = [0; 7];
    for (i, slot) in orders.iter_mut().enumerate() {
        *slot = polyharmonic_order(f, &Operator::laplacian(i as u32 + 1)?)?;
    }
    Ok(ClassificationReport {
        signature: polyholo_signature(f),
        membership: class_membership(f),
        orders,
    })
}
