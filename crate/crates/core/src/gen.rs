//! Random samples for the verification harness.
//!
//! Plain generators draw sparse monomials with bounded exponents and bounded
//! Gaussian-rational coefficients. Class-constrained generators build members
//! of a class directly from its defining shape instead of filtering.

use num_bigint::BigInt;
use rand::Rng;

use crate::operator::Operator;
use crate::poly::{BicomplexFunction, Exponents, Poly4, Var};
use crate::scalar::{Bicomplex, Conjugation, GaussianRational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenConfig {
    /// Upper bound for each variable exponent of a random monomial.
    pub max_degree: u32,
    /// Bound for coefficient numerators (in absolute value) and denominators.
    pub coeff_bound: u32,
    /// Maximum number of monomials drawn per component.
    pub max_terms: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        Self {
            max_degree: 4,
            coeff_bound: 9,
            max_terms: 5,
        }
    }
}

impl GenConfig {
    fn bound(&self) -> i64 {
        i64::from(self.coeff_bound.max(1))
    }
}

pub fn rational<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Rational {
    let b = cfg.bound();
    Rational::new(BigInt::from(rng.gen_range(-b..=b)), BigInt::from(rng.gen_range(1..=b)))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Rational {
    let b = cfg.bound();
    let mut n = rng.gen_range(1..=b);
    if rng.gen_bool(0.5) {
        n = -n;
    }
    Rational::new(BigInt::from(n), BigInt::from(rng.gen_range(1..=b)))
}

pub fn gaussian<R: Rng>(rng: &mut R, cfg: &GenConfig) -> GaussianRational {
    GaussianRational::new(rational(rng, cfg), rational(rng, cfg))
}

pub fn nonzero_gaussian<R: Rng>(rng: &mut R, cfg: &GenConfig) -> GaussianRational {
    loop {
        let c = gaussian(rng, cfg);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn bicomplex<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Bicomplex {
    Bicomplex::new(gaussian(rng, cfg), gaussian(rng, cfg))
}

/// `[alpha, conj alpha, beta, conj beta]` exponent caps; a cap of 0 excludes the variable.
pub type DegreeBox = [u32; 4];

pub fn poly_in_box<R: Rng>(rng: &mut R, cfg: &GenConfig, caps: DegreeBox) -> Poly4 {
    let n = rng.gen_range(0..=cfg.max_terms);
    Poly4::from_terms((0..n).map(|_| {
        let e: Exponents = caps.map(|c| rng.gen_range(0..=c));
        (e, nonzero_gaussian(rng, cfg))
    }))
}

pub fn poly<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Poly4 {
    poly_in_box(rng, cfg, [cfg.max_degree; 4])
}

pub fn function<R: Rng>(rng: &mut R, cfg: &GenConfig) -> BicomplexFunction {
    BicomplexFunction::new(poly(rng, cfg), poly(rng, cfg))
}

/// A random constant-coefficient operator of order at most 2 in each symbol.
pub fn operator<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Operator {
    let small = GenConfig {
        max_degree: cfg.max_degree.min(2),
        ..*cfg
    };
    Operator::new(poly(rng, &small), poly(rng, &small))
}

pub fn conjugation<R: Rng>(rng: &mut R) -> Conjugation {
    Conjugation::ALL[rng.gen_range(0..3)]
}

/// Univariate polynomial in `v` of exact degree `deg` (nonzero leading coefficient).
fn univariate_exact<R: Rng>(rng: &mut R, cfg: &GenConfig, v: Var, deg: u32) -> Poly4 {
    let mut p = Poly4::zero();
    for d in 0..deg {
        if rng.gen_bool(0.5) {
            p.add_term(mono(v, d), gaussian(rng, cfg));
        }
    }
    p.add_term(mono(v, deg), nonzero_gaussian(rng, cfg));
    p
}

fn univariate<R: Rng>(rng: &mut R, cfg: &GenConfig, v: Var) -> Poly4 {
    let caps = {
        let mut c = [0; 4];
        c[v.index()] = cfg.max_degree;
        c
    };
    poly_in_box(rng, cfg, caps)
}

fn mono(v: Var, d: u32) -> Exponents {
    let mut e = [0; 4];
    e[v.index()] = d;
    e
}

/// `phi(alpha) e+ + psi(beta) e-`.
pub fn bc_holomorphic<R: Rng>(rng: &mut R, cfg: &GenConfig) -> BicomplexFunction {
    BicomplexFunction::new(univariate(rng, cfg, Var::Alpha), univariate(rng, cfg, Var::Beta))
}

/// bc-holomorphic with real constant terms, i.e. zero hyperbolic-imaginary part at 0.
pub fn bc_holomorphic_normalized<R: Rng>(rng: &mut R, cfg: &GenConfig) -> BicomplexFunction {
    let mut f = bc_holomorphic(rng, cfg);
    for p in [&mut f.plus, &mut f.minus] {
        let c = p.coeff(&[0; 4]);
        p.add_term([0; 4], GaussianRational::new(Rational::from_integer(0.into()), -c.im));
    }
    f
}

/// `Σ_{q<m} conj(z)^q h_q(z)` in one pair with `h_{m-1}` of degree at least `m - 1`,
/// so that the top slot carries a monomial reaching order `m`.
fn polyanalytic_generic<R: Rng>(rng: &mut R, cfg: &GenConfig, h: Var, a: Var, m: u32) -> Poly4 {
    let mut p = Poly4::zero();
    if m == 0 {
        return p;
    }
    for q in 0..m - 1 {
        for (e, c) in univariate(rng, cfg, h).terms() {
            let mut e = *e;
            e[a.index()] = q;
            p.add_term(e, c.clone());
        }
    }
    let top = rng.gen_range(m - 1..=cfg.max_degree.max(m - 1));
    for (e, c) in univariate_exact(rng, cfg, h, top).terms() {
        let mut e = *e;
        e[a.index()] = m - 1;
        p.add_term(e, c.clone());
    }
    p
}

/// A member of `A1_{m,n}`: `f+` polyanalytic of exact order `m` in `(a, ac)`,
/// `f-` of exact order `n` in `(b, bc)`.
pub fn a1_generic<R: Rng>(rng: &mut R, cfg: &GenConfig, m: u32, n: u32) -> BicomplexFunction {
    BicomplexFunction::new(
        polyanalytic_generic(rng, cfg, Var::Alpha, Var::AlphaBar, m),
        polyanalytic_generic(rng, cfg, Var::Beta, Var::BetaBar, n),
    )
}

/// `A1_{m,n}` member with no monomial `z^p conj(z)^q` for `q > p` and real
/// diagonal coefficients: the normal form returned by real-part inversion.
pub fn a1_normalized<R: Rng>(rng: &mut R, cfg: &GenConfig, m: u32, n: u32) -> BicomplexFunction {
    let norm = |p: &Poly4, h: Var, a: Var| {
        let mut out = Poly4::zero();
        for (e, c) in p.terms() {
            let (ph, pa) = (e[h.index()], e[a.index()]);
            if ph > pa {
                out.add_term(*e, c.clone());
            } else if ph == pa {
                let re = if c.re == Rational::from_integer(0.into()) {
                    Rational::from_integer(1.into())
                } else {
                    c.re.clone()
                };
                out.add_term(*e, GaussianRational::from_rational(re));
            }
        }
        out
    };
    let f = a1_generic(rng, cfg, m, n);
    BicomplexFunction::new(
        norm(&f.plus, Var::Alpha, Var::AlphaBar),
        norm(&f.minus, Var::Beta, Var::BetaBar),
    )
}

/// A member of `A2_{m,n,k}` with exact signature `(m, n, k)` whenever all of
/// `m, n, k` are positive.
///
/// `f+ = Σ ac^l1 bc^l2 b^l3 h(a)`, `f- = Σ bc^l1 ac^l2 a^l3 g(b)` over
/// `l1 < m, l2 < n, l3 < k`. The corner index `(m-1, n-1, k-1)` is always
/// present with a coefficient of degree at least `m - 1`.
pub fn a2_generic<R: Rng>(rng: &mut R, cfg: &GenConfig, m: u32, n: u32, k: u32) -> BicomplexFunction {
    if m == 0 || n == 0 || k == 0 {
        return BicomplexFunction::zero();
    }
    let mut component = |h: Var, layout: fn(u32, u32, u32) -> [u32; 4]| {
        let mut p = Poly4::zero();
        let extra = rng.gen_range(0..=cfg.max_terms);
        let mut slots: Vec<(u32, u32, u32)> =
            (0..extra).map(|_| (rng.gen_range(0..m), rng.gen_range(0..n), rng.gen_range(0..k))).collect();
        slots.push((m - 1, n - 1, k - 1));
        for (idx, (l1, l2, l3)) in slots.into_iter().enumerate() {
            let is_corner = idx == extra;
            let coeff = if is_corner {
                let top = rng.gen_range(m - 1..=cfg.max_degree.max(m - 1));
                univariate_exact(rng, cfg, h, top)
            } else {
                univariate(rng, cfg, h)
            };
            let shift = layout(l1, l2, l3);
            p = &p + &coeff.shift(&shift);
        }
        p
    };
    let plus = component(Var::Alpha, |l1, l2, l3| [0, l1, l3, l2]);
    let minus = component(Var::Beta, |l1, l2, l3| [l3, l2, 0, l1]);
    BicomplexFunction::new(plus, minus)
}

/// `(u + conj u)` per component: a hyperbolic-valued function whose
/// components stay inside the given degree boxes.
pub fn hyperbolic_valued_in_box<R: Rng>(
    rng: &mut R,
    cfg: &GenConfig,
    plus_box: DegreeBox,
    minus_box: DegreeBox,
) -> BicomplexFunction {
    let sym = |p: Poly4| &p + &p.bar();
    BicomplexFunction::new(sym(poly_in_box(rng, cfg, plus_box)), sym(poly_in_box(rng, cfg, minus_box)))
}

pub fn hyperbolic_valued<R: Rng>(rng: &mut R, cfg: &GenConfig) -> BicomplexFunction {
    function(rng, cfg).re_hyp()
}

/// Hyperbolic-valued `F` in `ker d_{Z†}^n ∩ ker d_{Z~}^k` whose main-theorem
/// coefficient functions are all real-valued.
///
/// `F+ = Σ a_{l1,l2}(a, ac) b^l1 bc^l2` with `a_{l1,l2} = a_{l2,l1}` real-valued,
/// and symmetrically for `F-`.
pub fn main_theorem_real<R: Rng>(rng: &mut R, cfg: &GenConfig, n: u32, k: u32) -> BicomplexFunction {
    let bound = n.min(k);
    let mut component = |inner: [usize; 2], outer: [usize; 2]| {
        let mut p = Poly4::zero();
        if bound == 0 {
            return p;
        }
        let slots = rng.gen_range(1..=cfg.max_terms.max(1));
        for _ in 0..slots {
            let (l1, l2) = (rng.gen_range(0..bound), rng.gen_range(0..bound));
            let mut caps = [0; 4];
            caps[inner[0]] = cfg.max_degree;
            caps[inner[1]] = cfg.max_degree;
            let a = poly_in_box(rng, cfg, caps);
            let a = &a + &a.bar();
            let a = real_coefficients(&a);
            for (x, y) in [(l1, l2), (l2, l1)] {
                let mut shift = [0; 4];
                shift[outer[0]] = x;
                shift[outer[1]] = y;
                p = &p + &a.shift(&shift);
            }
        }
        p
    };
    let plus = component([0, 1], [2, 3]);
    let minus = component([2, 3], [0, 1]);
    BicomplexFunction::new(plus, minus)
}

/// Drops the imaginary part of every coefficient; keeps bar-symmetry when the
/// input is bar-symmetric.
fn real_coefficients(p: &Poly4) -> Poly4 {
    Poly4::from_terms(p.terms().map(|(e, c)| (*e, GaussianRational::from_rational(c.re.clone()))))
}

/// Hyperbolic-valued `F` in `ker d_{Z†}^n ∩ ker d_{Z~}^k` with generic
/// (usually non-real) coefficient functions.
pub fn main_theorem_generic<R: Rng>(rng: &mut R, cfg: &GenConfig, n: u32, k: u32) -> BicomplexFunction {
    let b = n.min(k).saturating_sub(1);
    let d = cfg.max_degree;
    if n.min(k) == 0 {
        return BicomplexFunction::zero();
    }
    hyperbolic_valued_in_box(rng, cfg, [d, d, b, b], [b, b, d, d])
}

/// Hyperbolic-imaginary perturbation `i H` (`H` hyperbolic-valued) whose
/// monomials lie strictly below the per-variable degrees of `f`.
pub fn bounded_imaginary_perturbation<R: Rng>(
    rng: &mut R,
    cfg: &GenConfig,
    f: &BicomplexFunction,
) -> BicomplexFunction {
    let cap = |p: &Poly4| -> Option<DegreeBox> {
        let m = p.degrees().iter().map(|d| d.unwrap_or(0)).min().unwrap_or(0);
        (m > 0 && !p.is_zero()).then(|| [m - 1; 4])
    };
    let part = |rng: &mut R, p: &Poly4| match cap(p) {
        Some(b) => {
            let u = poly_in_box(rng, cfg, b);
            (&u + &u.bar()).scale(&GaussianRational::i())
        }
        None => Poly4::zero(),
    };
    let plus = part(rng, &f.plus);
    let minus = part(rng, &f.minus);
    BicomplexFunction::new(plus, minus)
}
