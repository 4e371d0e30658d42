//! Constructive expansions and real-part inversions.

use std::collections::BTreeMap;

use crate::classify::{class_membership, complex_polyharmonic_order, laplacian_order_by_degrees};
use crate::error::{Error, Result};
use crate::operator::{Operator, Wirtinger};
use crate::poly::{BicomplexFunction, Poly4, Var, VarPair};
use crate::scalar::int;

/// `f = Σ (Z*)^l1 (Z~)^l2 (Z†)^l3 H_{l1,l2,l3}` with every `H` bc-holomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ConjugateExpansion {
    pub coeffs: BTreeMap<(u32, u32, u32), BicomplexFunction>,
}

impl ConjugateExpansion {
    pub fn reconstruct(&self) -> BicomplexFunction {
        self.coeffs
            .iter()
            .map(|(&(l1, l2, l3), h)| h.times_conjugate_powers(l1, l2, l3))
            .sum()
    }
}

/// Coefficient extraction in the conjugate basis.
///
/// A monomial `a^p ac^q b^r bc^s` of `f+` belongs to index `(q, s, r)` with
/// holomorphic coefficient `a^p`; in `f-` it belongs to `(s, q, p)` with
/// coefficient `b^r`.
pub fn expand_conjugate_basis(f: &BicomplexFunction) -> ConjugateExpansion {
    let mut coeffs: BTreeMap<(u32, u32, u32), BicomplexFunction> = BTreeMap::new();
    for (e, c) in f.plus.terms() {
        let h = coeffs.entry((e[1], e[3], e[2])).or_default();
        h.plus.add_term([e[0], 0, 0, 0], c.clone());
    }
    for (e, c) in f.minus.terms() {
        let h = coeffs.entry((e[3], e[1], e[0])).or_default();
        h.minus.add_term([0, 0, e[2], 0], c.clone());
    }
    ConjugateExpansion { coeffs }
}

/// `f = Σ_{k<l} (Z*)^k g_k` for `f ∈ A_l^Z[Z*]`, returned as `[g_0, ..., g_{l-1}]`.
pub fn expand_zstar(f: &BicomplexFunction) -> Result<Vec<BicomplexFunction>> {
    let l = class_membership(f).zstar_order.ok_or_else(|| {
        Error::NotInClass(
            "A^Z[Z*] requires f+ to depend only on (alpha, conj alpha) and f- only on (beta, conj beta)"
                .into(),
        )
    })?;
    let mut parts = vec![BicomplexFunction::zero(); l as usize];
    for (e, c) in f.plus.terms() {
        parts[e[1] as usize].plus.add_term([e[0], 0, 0, 0], c.clone());
    }
    for (e, c) in f.minus.terms() {
        parts[e[3] as usize].minus.add_term([0, 0, e[2], 0], c.clone());
    }
    Ok(parts)
}

pub fn reconstruct_zstar(parts: &[BicomplexFunction]) -> BicomplexFunction {
    parts
        .iter()
        .enumerate()
        .map(|(k, g)| g.times_conjugate_powers(k as u32, 0, 0))
        .sum()
}

/// `u = Σ_{k<m} |·|^{2k} h_k` with every part harmonic.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlmansiDecomposition<T> {
    pub parts: Vec<T>,
}

impl AlmansiDecomposition<Poly4> {
    /// `Σ (z z̄)^k h_k` in the given pair.
    pub fn reconstruct(&self, pair: VarPair) -> Poly4 {
        let mut out = Poly4::zero();
        for (k, h) in self.parts.iter().enumerate() {
            out = &out + &h.shift(&modulus_shift(pair, k as u32));
        }
        out
    }
}

impl AlmansiDecomposition<BicomplexFunction> {
    /// `Σ (Z Z*)^k H_k`.
    pub fn reconstruct(&self) -> BicomplexFunction {
        let m = BicomplexFunction::modulus_sqr();
        self.parts
            .iter()
            .enumerate()
            .map(|(k, h)| &m.pow(k as u32) * h)
            .sum()
    }
}

fn modulus_shift(pair: VarPair, k: u32) -> [u32; 4] {
    let (h, a) = pair.vars();
    let mut s = [0; 4];
    s[h.index()] = k;
    s[a.index()] = k;
    s
}

/// Splits each monomial `z^p z̄^q` (other variables riding along) into slot
/// `min(p, q)` with residual `z^{p-q}` or `z̄^{q-p}`.
fn almansi_split(p: &Poly4, pair: VarPair) -> Vec<Poly4> {
    let (h, a) = pair.vars();
    let mut parts = vec![Poly4::zero(); complex_polyharmonic_order(p, pair) as usize];
    for (e, c) in p.terms() {
        let k = e[h.index()].min(e[a.index()]);
        let mut r = *e;
        r[h.index()] -= k;
        r[a.index()] -= k;
        parts[k as usize].add_term(r, c.clone());
    }
    parts
}

/// Complex Almansi decomposition of a polynomial in one variable pair.
pub fn almansi_complex(u: &Poly4, pair: VarPair) -> Result<AlmansiDecomposition<Poly4>> {
    if !u.uses_only(pair) {
        return Err(Error::WrongVariables { expected: pair.name() });
    }
    Ok(AlmansiDecomposition {
        parts: almansi_split(u, pair),
    })
}

/// Bicomplex Almansi decomposition `F = Σ_{k<m} (Z Z*)^k H_k`, `Δ_bc H_k = 0`,
/// where `m` is the `Δ_bc` order of `F`.
pub fn almansi_bicomplex(f: &BicomplexFunction) -> AlmansiDecomposition<BicomplexFunction> {
    let plus = almansi_split(&f.plus, VarPair::Alpha);
    let minus = almansi_split(&f.minus, VarPair::Beta);
    let m = laplacian_order_by_degrees(f) as usize;
    let parts = (0..m)
        .map(|k| {
            BicomplexFunction::new(
                plus.get(k).cloned().unwrap_or_default(),
                minus.get(k).cloned().unwrap_or_default(),
            )
        })
        .collect();
    AlmansiDecomposition { parts }
}

/// Polyanalytic `f` with `Re f = u` for a real-valued `u` in one pair.
///
/// Keeps `z^p z̄^q` for `p > q` with doubled coefficient and the diagonal
/// `p = q` with its (real) coefficient; no monomial with `q > p` is emitted.
/// Other variables of `u` are treated as parameters.
pub fn repart_to_polyanalytic(u: &Poly4, pair: VarPair) -> Result<Poly4> {
    if !u.is_real_valued() {
        return Err(Error::NotRealValued);
    }
    let (h, a) = pair.vars();
    let two = int(2);
    let mut f = Poly4::zero();
    for (e, c) in u.terms() {
        let (p, q) = (e[h.index()], e[a.index()]);
        if p > q {
            f.add_term(*e, c.scale(&two));
        } else if p == q {
            f.add_term(*e, c.clone());
        }
    }
    Ok(f)
}

fn require_hyperbolic(f: &BicomplexFunction) -> Result<()> {
    if f.is_hyperbolic_valued() {
        Ok(())
    } else {
        Err(Error::NotHyperbolicValued)
    }
}

fn require_kernel(f: &BicomplexFunction, w: Wirtinger, power: u32, name: &str) -> Result<()> {
    if Operator::wirtinger(w).apply_n(f, power).is_zero() {
        Ok(())
    } else if power == 1 {
        Err(Error::precondition(format!("{name} F != 0")))
    } else {
        Err(Error::precondition(format!("{name}^{power} F != 0")))
    }
}

/// Componentwise real-part inversion of a hyperbolic-valued function whose
/// components live in their own variable pairs.
fn invert_first_kind(f: &BicomplexFunction) -> Result<BicomplexFunction> {
    Ok(BicomplexFunction::new(
        repart_to_polyanalytic(&f.plus, VarPair::Alpha)?,
        repart_to_polyanalytic(&f.minus, VarPair::Beta)?,
    ))
}

/// bc-holomorphic `f` with `Re_hyp f = F`, normalised to zero
/// hyperbolic-imaginary part at the origin.
///
/// Requires `F` hyperbolic-valued, `Δ_bc F = 0`, `d_{Z†} F = 0`, `d_{Z~} F = 0`.
pub fn rehyp_to_holomorphic(f: &BicomplexFunction) -> Result<BicomplexFunction> {
    require_hyperbolic(f)?;
    if !Operator::laplacian_bc().apply(f).is_zero() {
        return Err(Error::precondition("Delta_bc F != 0"));
    }
    require_kernel(f, Wirtinger::ZDagger, 1, "d/dZ†")?;
    require_kernel(f, Wirtinger::ZTilde, 1, "d/dZ~")?;
    invert_first_kind(f)
}

/// Result of inverting `Re_hyp` into the first-kind class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A1Inversion {
    pub f: BicomplexFunction,
    /// `(r, s)` with `f ∈ A1_{r,s}`.
    pub orders: (u32, u32),
}

/// `f ∈ A1_{r,s}` with `Re_hyp f = F` and `max(r, s)` equal to the `Δ_bc` order of `F`.
///
/// Requires `F` hyperbolic-valued with `d_{Z†} F = d_{Z~} F = 0`.
pub fn rehyp_to_polyholomorphic_a1(f: &BicomplexFunction) -> Result<A1Inversion> {
    require_hyperbolic(f)?;
    require_kernel(f, Wirtinger::ZDagger, 1, "d/dZ†")?;
    require_kernel(f, Wirtinger::ZTilde, 1, "d/dZ~")?;
    let g = invert_first_kind(f)?;
    let orders = class_membership(&g)
        .a1_orders
        .expect("componentwise inversion stays in its variable pairs");
    Ok(A1Inversion { f: g, orders })
}

/// Which idempotent component a coefficient belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    Plus,
    Minus,
}

impl Component {
    pub fn name(self) -> &'static str {
        match self {
            Component::Plus => "plus",
            Component::Minus => "minus",
        }
    }
}

/// Decomposition `F = Σ_{l1<n, l2<k} G_{l1,l2} (Z†)^l1 (Z~)^l2`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MainDecomposition {
    /// `G_{l1,l2} = a_{l1,l2}(a, ac) e+ + b_{l1,l2}(b, bc) e-`.
    pub g: BTreeMap<(u32, u32), BicomplexFunction>,
    /// `f_{l1,l2} ∈ A1` with `Re_hyp f_{l1,l2} = G_{l1,l2}`, present only
    /// when every coefficient function is real-valued.
    pub refined: Option<BTreeMap<(u32, u32), BicomplexFunction>>,
    /// Coefficient functions that are not real-valued, which blocks `refined`.
    pub non_real: Vec<((u32, u32), Component)>,
}

impl MainDecomposition {
    pub fn reconstruct(&self) -> BicomplexFunction {
        reconstruct_dagger_tilde(&self.g)
    }

    /// `Σ Re_hyp(f_{l1,l2}) (Z†)^l1 (Z~)^l2`, when the refined form exists.
    pub fn reconstruct_refined(&self) -> Option<BicomplexFunction> {
        self.refined.as_ref().map(|r| {
            let re: BTreeMap<_, _> = r.iter().map(|(ix, f)| (*ix, f.re_hyp())).collect();
            reconstruct_dagger_tilde(&re)
        })
    }
}

fn reconstruct_dagger_tilde(map: &BTreeMap<(u32, u32), BicomplexFunction>) -> BicomplexFunction {
    map.iter()
        .map(|(&(l1, l2), g)| g.times_conjugate_powers(0, l2, l1))
        .sum()
}

/// Main-theorem decomposition of a hyperbolic-valued `F` with
/// `d_{Z†}^n F = 0` and `d_{Z~}^k F = 0`.
pub fn main_decomposition(f: &BicomplexFunction, n: u32, k: u32) -> Result<MainDecomposition> {
    require_hyperbolic(f)?;
    require_kernel(f, Wirtinger::ZDagger, n, "d/dZ†")?;
    require_kernel(f, Wirtinger::ZTilde, k, "d/dZ~")?;

    let mut g: BTreeMap<(u32, u32), BicomplexFunction> = BTreeMap::new();
    for (e, c) in f.plus.terms() {
        g.entry((e[Var::Beta.index()], e[Var::BetaBar.index()]))
            .or_default()
            .plus
            .add_term([e[0], e[1], 0, 0], c.clone());
    }
    for (e, c) in f.minus.terms() {
        g.entry((e[Var::Alpha.index()], e[Var::AlphaBar.index()]))
            .or_default()
            .minus
            .add_term([0, 0, e[2], e[3]], c.clone());
    }
    if g.is_empty() {
        g.insert((0, 0), BicomplexFunction::zero());
    }

    let mut non_real = Vec::new();
    for (ix, gf) in &g {
        if !gf.plus.is_real_valued() {
            non_real.push((*ix, Component::Plus));
        }
        if !gf.minus.is_real_valued() {
            non_real.push((*ix, Component::Minus));
        }
    }
    let refined = if non_real.is_empty() {
        let mut r = BTreeMap::new();
        for (ix, gf) in &g {
            r.insert(*ix, invert_first_kind(gf)?);
        }
        Some(r)
    } else {
        None
    };
    Ok(MainDecomposition { g, refined, non_real })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::polyharmonic_order;
    use crate::poly::{f1, g1};
    use crate::scalar::{rational, Bicomplex, Conjugation, GaussianRational, Hyperbolic};

    fn mono(e: [u32; 4], n: i64) -> Poly4 {
        Poly4::monomial(e, GaussianRational::from_int(n))
    }

    fn v(var: Var) -> Poly4 {
        Poly4::var(var)
    }

    #[test]
    fn conjugate_basis_g1() {
        let exp = expand_conjugate_basis(&g1());
        let two = BicomplexFunction::constant(&Bicomplex::from_int(2));
        let expected: BTreeMap<_, _> = [((1, 0, 1), two.clone()), ((1, 1, 0), two)].into();
        assert_eq!(exp.coeffs, expected);
        assert_eq!(exp.reconstruct(), g1());
    }

    #[test]
    fn conjugate_basis_holomorphic_and_single() {
        let f = &BicomplexFunction::z().pow(3) + &BicomplexFunction::one();
        let exp = expand_conjugate_basis(&f);
        assert_eq!(exp.coeffs.len(), 1);
        assert_eq!(exp.coeffs[&(0, 0, 0)], f);

        let f = &BicomplexFunction::z_conj(Conjugation::Star) * &BicomplexFunction::z_conj(Conjugation::Dagger);
        let exp = expand_conjugate_basis(&f);
        let expected: BTreeMap<_, _> = [((1, 0, 1), BicomplexFunction::one())].into();
        assert_eq!(exp.coeffs, expected);
    }

    #[test]
    fn zstar_expansion() {
        let f = BicomplexFunction::new(mono([0, 2, 0, 0], 1), v(Var::BetaBar));
        let parts = expand_zstar(&f).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts[0].is_zero());
        assert_eq!(parts[1], BicomplexFunction::constant(&Bicomplex::e_minus()));
        assert_eq!(parts[2], BicomplexFunction::constant(&Bicomplex::e_plus()));
        assert_eq!(reconstruct_zstar(&parts), f);

        let h = BicomplexFunction::z().pow(2);
        assert_eq!(expand_zstar(&h).unwrap(), vec![h]);
        assert!(matches!(expand_zstar(&f1()), Err(Error::NotInClass(_))));
    }

    #[test]
    fn almansi_complex_examples() {
        let u = mono([2, 3, 0, 0], 1);
        let d = almansi_complex(&u, VarPair::Alpha).unwrap();
        assert_eq!(d.parts.len(), 3);
        assert!(d.parts[0].is_zero() && d.parts[1].is_zero());
        assert_eq!(d.parts[2], v(Var::AlphaBar));
        assert_eq!(d.reconstruct(VarPair::Alpha), u);

        let harmonic = &mono([3, 0, 0, 0], 2) + &mono([0, 1, 0, 0], -1);
        assert_eq!(almansi_complex(&harmonic, VarPair::Alpha).unwrap().parts, vec![harmonic]);

        let u = mono([2, 2, 0, 0], 1);
        let d = almansi_complex(&u, VarPair::Alpha).unwrap();
        assert_eq!(d.parts, vec![Poly4::zero(), Poly4::zero(), Poly4::one()]);

        let mixed = mono([1, 0, 1, 0], 1);
        assert!(matches!(
            almansi_complex(&mixed, VarPair::Alpha),
            Err(Error::WrongVariables { .. })
        ));
        let beta = mono([0, 0, 1, 2], 1);
        assert_eq!(almansi_complex(&beta, VarPair::Beta).unwrap().reconstruct(VarPair::Beta), beta);
    }

    #[test]
    fn almansi_bicomplex_examples() {
        let d = almansi_bicomplex(&f1());
        assert_eq!(d.parts, vec![f1()]);

        let d = almansi_bicomplex(&BicomplexFunction::modulus_sqr());
        assert_eq!(d.parts, vec![BicomplexFunction::zero(), BicomplexFunction::one()]);

        let f = BicomplexFunction::new(mono([2, 1, 0, 0], 1), Poly4::zero());
        let d = almansi_bicomplex(&f);
        assert_eq!(d.parts.len(), 2);
        assert!(d.parts[0].is_zero());
        assert_eq!(d.parts[1], BicomplexFunction::new(v(Var::Alpha), Poly4::zero()));
        assert_eq!(d.reconstruct(), f);
    }

    #[test]
    fn repart_examples() {
        let u = &mono([2, 1, 0, 0], 1) + &mono([1, 2, 0, 0], 1);
        assert_eq!(repart_to_polyanalytic(&u, VarPair::Alpha).unwrap(), mono([2, 1, 0, 0], 2));

        let half = rational(1, 2);
        let u = (&v(Var::Alpha) + &v(Var::AlphaBar)).scale_rational(&half);
        assert_eq!(repart_to_polyanalytic(&u, VarPair::Alpha).unwrap(), v(Var::Alpha));

        let u = mono([1, 1, 0, 0], 1);
        assert_eq!(repart_to_polyanalytic(&u, VarPair::Alpha).unwrap(), u);

        assert_eq!(
            repart_to_polyanalytic(&v(Var::Alpha), VarPair::Alpha),
            Err(Error::NotRealValued)
        );
    }

    #[test]
    fn rehyp_holomorphic_examples() {
        let half = rational(1, 2);
        let f = BicomplexFunction::new(
            (&mono([2, 0, 0, 0], 1) + &mono([0, 2, 0, 0], 1)).scale_rational(&half),
            (&v(Var::Beta) + &v(Var::BetaBar)).scale_rational(&half),
        );
        let g = rehyp_to_holomorphic(&f).unwrap();
        assert_eq!(g, BicomplexFunction::new(mono([2, 0, 0, 0], 1), v(Var::Beta)));
        assert_eq!(g.re_hyp(), f);

        let c = BicomplexFunction::constant(&Hyperbolic::from_xy(&int(1), &int(4)).to_bicomplex());
        assert_eq!(rehyp_to_holomorphic(&c).unwrap(), c);

        match rehyp_to_holomorphic(&f1()) {
            Err(Error::PreconditionViolation { condition }) => assert!(condition.contains("Z†")),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(rehyp_to_holomorphic(&BicomplexFunction::z()), Err(Error::NotHyperbolicValued));
        let poly = BicomplexFunction::modulus_sqr();
        assert!(matches!(
            rehyp_to_holomorphic(&poly),
            Err(Error::PreconditionViolation { .. })
        ));
    }

    #[test]
    fn rehyp_a1_examples() {
        let f = BicomplexFunction::modulus_sqr();
        let inv = rehyp_to_polyholomorphic_a1(&f).unwrap();
        assert_eq!(inv.f, f);
        assert_eq!(inv.orders, (2, 2));

        let c = BicomplexFunction::constant(&Bicomplex::from_int(3));
        let inv = rehyp_to_polyholomorphic_a1(&c).unwrap();
        assert_eq!(inv.f, c);
        assert_eq!(inv.orders, (1, 1));

        let u = &mono([2, 1, 0, 0], 1) + &mono([1, 2, 0, 0], 1);
        let inv = rehyp_to_polyholomorphic_a1(&BicomplexFunction::new(u, Poly4::zero())).unwrap();
        assert_eq!(inv.f, BicomplexFunction::new(mono([2, 1, 0, 0], 2), Poly4::zero()));
        assert_eq!(inv.orders, (2, 0));
    }

    #[test]
    fn main_decomposition_f1() {
        let d = main_decomposition(&f1(), 2, 2).unwrap();
        let asum = &v(Var::Alpha) + &v(Var::AlphaBar);
        let bsum = &v(Var::Beta) + &v(Var::BetaBar);
        let g = BicomplexFunction::new(asum, bsum);
        let expected: BTreeMap<_, _> = [((0, 1), g.clone()), ((1, 0), g)].into();
        assert_eq!(d.g, expected);
        assert_eq!(d.reconstruct(), f1());
        assert!(d.non_real.is_empty());
        let refined = d.refined.as_ref().unwrap();
        let holo = BicomplexFunction::new(mono([1, 0, 0, 0], 2), mono([0, 0, 1, 0], 2));
        assert_eq!(refined[&(1, 0)], holo);
        assert_eq!(refined[&(0, 1)], holo);
        assert_eq!(d.reconstruct_refined().unwrap(), f1());
        let order = polyharmonic_order(&f1(), &Operator::laplacian_bc()).unwrap();
        for gf in d.g.values() {
            assert!(polyharmonic_order(gf, &Operator::laplacian_bc()).unwrap() <= order);
        }
    }

    #[test]
    fn main_decomposition_simple_cases() {
        let c = BicomplexFunction::constant(&Hyperbolic::from_xy(&int(2), &int(-1)).to_bicomplex());
        let d = main_decomposition(&c, 2, 3).unwrap();
        assert_eq!(d.g.len(), 1);
        assert_eq!(d.g[&(0, 0)], c);

        let m = BicomplexFunction::modulus_sqr();
        let d = main_decomposition(&m, 1, 1).unwrap();
        assert_eq!(d.g.len(), 1);
        assert_eq!(d.g[&(0, 0)], m);

        assert!(matches!(
            main_decomposition(&f1(), 1, 2),
            Err(Error::PreconditionViolation { .. })
        ));
    }

    #[test]
    fn main_decomposition_reports_non_real_coefficients() {
        // F+ = i a b - i ac bc is real-valued but its coefficient i a is not.
        let i = GaussianRational::i();
        let plus = &Poly4::monomial([1, 0, 1, 0], i.clone()) + &Poly4::monomial([0, 1, 0, 1], -i);
        let f = BicomplexFunction::new(plus, Poly4::zero());
        assert!(f.is_hyperbolic_valued());
        let d = main_decomposition(&f, 2, 2).unwrap();
        assert!(d.refined.is_none());
        assert_eq!(d.non_real, vec![((0, 1), Component::Plus), ((1, 0), Component::Plus)]);
        assert_eq!(d.reconstruct(), f);
    }
}
