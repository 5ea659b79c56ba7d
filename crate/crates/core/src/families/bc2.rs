//! Two-variable Jack polynomials `Z_{m,l}^γ`, BC₂ Jacobi polynomials
//! `R_{n,k}^{α,β,γ}` and the symmetric chart `(x, y) ↔ (ξ, η) = (x+y, xy)`.

use std::collections::BTreeMap;

use num_traits::One;

use crate::exactalg::{
    int, rat, AlgebraError, BigRational, Monomial, MultiPoly, RationalFunction, Var,
};
use crate::qseries::{factorial, hyp_terminating_parts, pochhammer, pochhammer_factors, ParamAffine};

use super::gegenbauer::gegenbauer_homog_xieta_with;
use super::jacobi::{alpha, beta, compose_x, jacobi_r_with};
use super::FamilyError;

pub(crate) fn gamma() -> ParamAffine {
    ParamAffine::param(Var::Gamma)
}

/// Rewrites a polynomial symmetric in `x, y` in terms of `ξ = x+y`, `η = xy`.
pub fn chart_convert(p: &MultiPoly) -> Result<MultiPoly, FamilyError> {
    if p.swap_vars(Var::X, Var::Y) != *p {
        return Err(AlgebraError::NotSymmetric.into());
    }
    // (deg x, deg y) -> coefficient polynomial in everything else
    let mut rest: BTreeMap<(i16, i16), MultiPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let key = (m.exp(Var::X), m.exp(Var::Y));
        let mut other = *m;
        other.set_exp(Var::X, 0);
        other.set_exp(Var::Y, 0);
        let e = rest.entry(key).or_insert_with(MultiPoly::zero);
        *e = &*e + &MultiPoly::monomial(other, c.clone());
    }
    let mut out = MultiPoly::zero();
    let binom = |n: i16, k: i16| -> BigRational {
        let n = n as u32;
        let k = k as u32;
        BigRational::new(factorial(n), factorial(k) * factorial(n - k))
    };
    loop {
        rest.retain(|_, c| !c.is_zero());
        // highest total degree, then highest x exponent
        let Some((&(a, b), c)) = rest.iter().max_by_key(|((a, b), _)| (a + b, *a)) else {
            break;
        };
        if a < b {
            return Err(AlgebraError::NotSymmetric.into());
        }
        let c = c.clone();
        let d = a - b;
        out = &out + &c.mul_monomial(&Monomial::from_pairs(&[(Var::Xi, d), (Var::Eta, b)]));
        // subtract c (x+y)^d (xy)^b
        for i in 0..=d {
            let key = (d - i + b, i + b);
            let e = rest.entry(key).or_insert_with(MultiPoly::zero);
            *e = &*e - &c.scale(&binom(d, i));
        }
    }
    Ok(out)
}

/// `chart_convert` for a value whose denominator is free of `x, y`.
pub fn chart_convert_rf(r: &RationalFunction) -> Result<RationalFunction, FamilyError> {
    if r.denom().contains_var(Var::X) || r.denom().contains_var(Var::Y) {
        return Err(AlgebraError::NotSymmetric.into());
    }
    Ok(RationalFunction::ratio(chart_convert(r.numer())?, r.denom().clone()))
}

fn inverse_bindings() -> [(Var, RationalFunction); 2] {
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    [
        (Var::Xi, RationalFunction::from_poly(&x + &y)),
        (Var::Eta, RationalFunction::from_poly(&x * &y)),
    ]
}

/// `ξ ↦ x+y`, `η ↦ xy`.
pub fn chart_inverse(p: &MultiPoly) -> MultiPoly {
    crate::exactalg::substitute(p, &inverse_bindings())
        .and_then(|r| r.to_poly())
        .expect("polynomial substitution")
}

pub fn chart_inverse_rf(r: &RationalFunction) -> RationalFunction {
    r.substitute(&inverse_bindings()).expect("polynomial substitution")
}

fn jack_prefactor(m: u32, l: u32, g: &ParamAffine) -> Result<RationalFunction, FamilyError> {
    let d = m - l;
    let den = pochhammer(&g.add_const(&rat(1, 2)), d);
    if den.is_zero() {
        return Err(FamilyError::ZeroDenominator(format!("(γ+1/2)_{d} at γ = {g}")));
    }
    Ok(RationalFunction::ratio(
        MultiPoly::constant(BigRational::from_integer(factorial(d))),
        den,
    ))
}

/// `Z_{m,l}^γ(x+y, xy) = (xy)^l (m-l)! / (γ+½)_{m-l} · (xy)^{(m-l)/2} C_{m-l}^{(γ+½)}(…)`,
/// in the `(x, y)` chart.
pub fn jack_z(m: u32, l: u32) -> Result<RationalFunction, FamilyError> {
    jack_z_with(m, l, &gamma())
}

pub fn jack_z_with(m: u32, l: u32, g: &ParamAffine) -> Result<RationalFunction, FamilyError> {
    let xieta = jack_z_xieta_with(m, l, g)?;
    Ok(chart_inverse_rf(&xieta))
}

/// `Z_{m,l}^γ` in the `(ξ, η)` chart.
pub fn jack_z_xieta_with(m: u32, l: u32, g: &ParamAffine) -> Result<RationalFunction, FamilyError> {
    if l > m {
        return Err(FamilyError::InvalidIndices(format!("jack_z needs m >= l, got ({m}, {l})")));
    }
    let pre = jack_prefactor(m, l, g)?;
    let body = gegenbauer_homog_xieta_with(m - l, &g.add_const(&rat(1, 2))).shift(Var::Eta, l as i16);
    Ok(pre.mul_poly(&body))
}

/// Numerator polynomial and linear denominator factors of a Pochhammer
/// quotient.
fn poch_parts(num: &[(ParamAffine, u32)], den: &[(ParamAffine, u32)]) -> Result<(MultiPoly, Vec<MultiPoly>), FamilyError> {
    let mut n = MultiPoly::one();
    for (a, k) in num {
        n = &n * &pochhammer(a, *k);
    }
    let mut d = Vec::new();
    for (a, k) in den {
        d.extend(pochhammer_factors(a, *k));
    }
    if d.iter().any(|f| f.is_zero()) {
        return Err(FamilyError::ZeroDenominator("Pochhammer product in the expansion coefficient".into()));
    }
    Ok((n, d))
}

fn poch_ratio(num: &[(ParamAffine, u32)], den: &[(ParamAffine, u32)]) -> Result<RationalFunction, FamilyError> {
    let (n, d) = poch_parts(num, den)?;
    Ok(RationalFunction::from_factored(n, &d)?)
}

/// Expansion coefficient `c_{n,k;m,l}^{α,β,γ}` of `R_{n,k}` in the Jack basis.
pub fn bc2_coefficient(
    n: u32,
    k: u32,
    m: u32,
    l: u32,
    a: &ParamAffine,
    b: &ParamAffine,
    g: &ParamAffine,
) -> Result<RationalFunction, FamilyError> {
    if !(l <= k && k <= n && l <= m && m <= n) {
        return Err(FamilyError::InvalidIndices(format!(
            "expansion coefficient needs l <= k <= n and l <= m <= n, got n={n} k={k} m={m} l={l}"
        )));
    }
    let (ni, ki, mi, li) = (n as i64, k as i64, m as i64, l as i64);
    let half = rat(1, 2);
    let three_halves = rat(3, 2);
    let ab = a.add(b);
    let (pre_num, mut factors) = poch_parts(
        &[
            (ParamAffine::int(-ki), l),
            (g.neg().add_int(-ni).add_const(&-&half), l),
            (ParamAffine::int(-ni), m),
            (ab.add(g).add_int(ni).add_const(&three_halves), m),
            (ab.add_int(ki + 1), l),
            (g.add_const(&three_halves), m - l),
        ],
        &[
            (ParamAffine::int(-ni), l),
            (a.add_int(1), l),
            (a.add(g).add_const(&three_halves), m),
            (g.add_const(&three_halves), m),
        ],
    )?;
    if pre_num.is_zero() {
        return Ok(RationalFunction::zero());
    }
    factors.push(MultiPoly::constant(BigRational::from_integer(factorial(l) * factorial(m - l))));
    let upper = [
        ParamAffine::int(li - mi),
        ParamAffine::int(ki - ni),
        ab.neg().add_int(-ni - ki - 1),
        g.add_const(&half),
    ];
    let lower = [
        ParamAffine::int(li - ni),
        ab.add(g).neg().add_int(-ni - mi).add_const(&-&half),
        g.scale(&int(2)).add_int(1),
    ];
    let (f_num, f_factors) = hyp_terminating_parts(&upper, &lower, &RationalFunction::one(), n)?;
    factors.extend(f_factors);
    Ok(RationalFunction::from_factored(&pre_num * &f_num, &factors)?)
}

fn check_normalized(r: &RationalFunction) -> Result<(), FamilyError> {
    let at0 = r.substitute(&[
        (Var::Xi, RationalFunction::zero()),
        (Var::Eta, RationalFunction::zero()),
    ])?;
    if !at0.is_one() {
        return Err(FamilyError::Normalization(at0.to_string()));
    }
    Ok(())
}

/// `R_{n,k}^{α,β,γ}(ξ, η) = Σ_{l≤k} Σ_{l≤m≤n} c_{n,k;m,l} Z_{m,l}^γ`.
pub fn bc2_r(n: u32, k: u32) -> Result<RationalFunction, FamilyError> {
    bc2_r_with(n, k, &alpha(), &beta(), &gamma())
}

pub fn bc2_r_with(
    n: u32,
    k: u32,
    a: &ParamAffine,
    b: &ParamAffine,
    g: &ParamAffine,
) -> Result<RationalFunction, FamilyError> {
    if k > n {
        return Err(FamilyError::InvalidIndices(format!("bc2_r needs n >= k, got ({n}, {k})")));
    }
    let mut terms = Vec::new();
    for l in 0..=k {
        for m in l..=n {
            let c = bc2_coefficient(n, k, m, l, a, b, g)?;
            if c.is_zero() {
                continue;
            }
            terms.push(&c * &jack_z_xieta_with(m, l, g)?);
        }
    }
    let r = RationalFunction::sum(terms.iter());
    check_normalized(&r)?;
    Ok(r)
}

/// The `k = 0` case through its single-sum form.
pub fn bc2_r_n0(n: u32) -> Result<RationalFunction, FamilyError> {
    bc2_r_n0_with(n, &alpha(), &beta(), &gamma())
}

pub fn bc2_r_n0_with(n: u32, a: &ParamAffine, b: &ParamAffine, g: &ParamAffine) -> Result<RationalFunction, FamilyError> {
    let ni = n as i64;
    let half = rat(1, 2);
    let mut terms = Vec::new();
    for m in 0..=n {
        let c = poch_ratio(
            &[
                (ParamAffine::int(-ni), m),
                (a.add(b).add(&g.scale(&int(2))).add_int(ni + 2), m),
                (g.add_const(&half), m),
            ],
            &[
                (a.add(g).add_const(&rat(3, 2)), m),
                (g.scale(&int(2)).add_int(1), m),
            ],
        )?
        .scale(&BigRational::new(1.into(), factorial(m)));
        terms.push(&c * &jack_z_xieta_with(m, 0, g)?);
    }
    let r = RationalFunction::sum(terms.iter());
    check_normalized(&r)?;
    Ok(r)
}

/// `R_{n,k}` at a rational `γ`, built with symbolic `γ` and specialized
/// afterwards so that removable singularities (as at `γ = -½`) cancel first.
pub fn bc2_r_at_gamma(n: u32, k: u32, gamma_value: &BigRational) -> Result<RationalFunction, FamilyError> {
    let r = bc2_r(n, k)?;
    Ok(r.substitute(&[(Var::Gamma, RationalFunction::constant(gamma_value.clone()))])?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfSign {
    Minus,
    Plus,
}

impl HalfSign {
    pub fn value(self) -> BigRational {
        match self {
            HalfSign::Minus => rat(-1, 2),
            HalfSign::Plus => rat(1, 2),
        }
    }
}

fn one_minus_two(v: Var) -> MultiPoly {
    &MultiPoly::one() - &MultiPoly::var(v).scale(&int(2))
}

/// `R_{n,k}^{α,β,±½}(x+y, xy)` as products of one-variable Jacobi
/// polynomials, in the `(x, y)` chart.
pub fn bc2_gamma_half(n: u32, k: u32, sign: HalfSign) -> Result<RationalFunction, FamilyError> {
    bc2_gamma_half_with(n, k, sign, &alpha(), &beta())
}

pub fn bc2_gamma_half_with(
    n: u32,
    k: u32,
    sign: HalfSign,
    a: &ParamAffine,
    b: &ParamAffine,
) -> Result<RationalFunction, FamilyError> {
    if k > n {
        return Err(FamilyError::InvalidIndices(format!("bc2_gamma_half needs n >= k, got ({n}, {k})")));
    }
    let (sx, sy) = (one_minus_two(Var::X), one_minus_two(Var::Y));
    let top = match sign {
        HalfSign::Minus => n,
        HalfSign::Plus => n + 1,
    };
    let rt = jacobi_r_with(top, a, b)?;
    let rk = jacobi_r_with(k, a, b)?;
    let (tx, ty) = (compose_x(&rt, &sx)?, compose_x(&rt, &sy)?);
    let (kx, ky) = (compose_x(&rk, &sx)?, compose_x(&rk, &sy)?);
    match sign {
        HalfSign::Minus => {
            let s = &(&tx * &ky) + &(&kx * &ty);
            Ok(s.scale(&rat(1, 2)))
        }
        HalfSign::Plus => {
            let anti = &(&tx * &ky) - &(&kx * &ty);
            let xy = &MultiPoly::var(Var::X) - &MultiPoly::var(Var::Y);
            let quotient = anti.numer().divide_exact(&xy)?;
            let anti = RationalFunction::ratio(quotient, anti.denom().clone());
            let width = BigRational::from_integer(((n - k + 1) as i64).into());
            let den = a.add(b).add_int((n + k) as i64 + 2).to_poly().scale(&width);
            let pre = RationalFunction::ratio(a.add_int(1).to_poly().scale(&-BigRational::one()), den);
            Ok(&pre * &anti)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: Var) -> MultiPoly {
        MultiPoly::var(v)
    }

    #[test]
    fn chart_examples() {
        let (x, y) = (p(Var::X), p(Var::Y));
        assert_eq!(chart_convert(&(&x + &y)).unwrap(), p(Var::Xi));
        let sq = &(&x * &x) + &(&y * &y);
        let expected = &(&p(Var::Xi) * &p(Var::Xi)) - &p(Var::Eta).scale(&int(2));
        assert_eq!(chart_convert(&sq).unwrap(), expected);
        assert!(matches!(
            chart_convert(&(&x - &y)),
            Err(FamilyError::Algebra(AlgebraError::NotSymmetric))
        ));
        assert_eq!(chart_inverse(&expected), sq);
    }

    #[test]
    fn chart_round_trip_with_parameters() {
        let (x, y) = (p(Var::X), p(Var::Y));
        let g = p(Var::Gamma);
        let f = &(&(&g * &(&x * &x).pow(2)) + &(&(&x * &y) * &(&x + &y))) + &(&g * &(&y * &y).pow(2));
        let conv = chart_convert(&f).unwrap();
        assert_eq!(chart_inverse(&conv), f);
    }

    #[test]
    fn jack_low_degree() {
        let (x, y) = (p(Var::X), p(Var::Y));
        assert_eq!(jack_z(1, 0).unwrap(), RationalFunction::from_poly(&x + &y));
        assert_eq!(jack_z(1, 1).unwrap(), RationalFunction::from_poly(&x * &y));
        assert!(jack_z(0, 0).unwrap().is_one());
        for m in 0..5 {
            for l in 0..=m {
                let z = jack_z(m, l).unwrap();
                for (mono, _) in z.numer().terms() {
                    assert_eq!(mono.exp(Var::X) + mono.exp(Var::Y), (m + l) as i16);
                }
            }
        }
        assert!(matches!(
            jack_z_with(2, 0, &ParamAffine::constant(rat(-1, 2))),
            Err(FamilyError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn bc2_low_degree() {
        assert!(bc2_r(0, 0).unwrap().is_one());
        let (a, b, g) = (p(Var::Alpha), p(Var::Beta), p(Var::Gamma));
        let num = &(&(&a + &b) + &g.scale(&int(2))) + &MultiPoly::int(3);
        let den = &(&a.scale(&int(2)) + &g.scale(&int(2))) + &MultiPoly::int(3);
        let expected = RationalFunction::one() - RationalFunction::ratio(&num * &p(Var::Xi), den);
        assert_eq!(bc2_r(1, 0).unwrap(), expected);
        let r = bc2_r_with(1, 0, &alpha(), &alpha(), &gamma()).unwrap();
        assert_eq!(r, RationalFunction::from_poly(&MultiPoly::one() - &p(Var::Xi)));
    }

    #[test]
    fn single_sum_agrees() {
        for n in 0..=4 {
            assert_eq!(bc2_r(n, 0).unwrap(), bc2_r_n0(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn gamma_half_low_degree() {
        assert!(bc2_gamma_half(0, 0, HalfSign::Minus).unwrap().is_one());
        assert!(bc2_gamma_half(0, 0, HalfSign::Plus).unwrap().is_one());
        let r1 = jacobi_r_with(1, &alpha(), &beta()).unwrap();
        let expected = (&compose_x(&r1, &one_minus_two(Var::X)).unwrap()
            + &compose_x(&r1, &one_minus_two(Var::Y)).unwrap())
            .scale(&rat(1, 2));
        assert_eq!(bc2_gamma_half(1, 0, HalfSign::Minus).unwrap(), expected);
    }

    #[test]
    fn gamma_half_matches_expansion_small() {
        for (n, k) in [(1, 0), (1, 1), (2, 1)] {
            for sign in [HalfSign::Minus, HalfSign::Plus] {
                let prod = chart_convert_rf(&bc2_gamma_half(n, k, sign).unwrap()).unwrap();
                let exp = bc2_r_at_gamma(n, k, &sign.value()).unwrap();
                assert_eq!(prod, exp, "n={n} k={k} {sign:?}");
            }
        }
    }

    #[test]
    fn zero_coefficient_when_m_exceeds_n_is_rejected() {
        let r = bc2_coefficient(1, 0, 2, 0, &alpha(), &beta(), &gamma());
        assert!(matches!(r, Err(FamilyError::InvalidIndices(_))));
    }
}
