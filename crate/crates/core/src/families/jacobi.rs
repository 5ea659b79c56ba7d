//! Jacobi polynomials `P_n^{(α,β)}` and their normalized form `R_n^{(α,β)}`,
//! with the homogeneous `(z, w)` chart and the rational chart
//! `x ↦ (1-x²)/(1+x²)`.

use crate::exactalg::{rat, BigRational, Monomial, MultiPoly, RationalFunction, Var};
use crate::qseries::{factorial, hyp_terminating, pochhammer, ParamAffine};

use super::FamilyError;

pub(crate) fn alpha() -> ParamAffine {
    ParamAffine::param(Var::Alpha)
}

pub(crate) fn beta() -> ParamAffine {
    ParamAffine::param(Var::Beta)
}

/// `R_n^{(α,β)}(x) = ₂F₁(-n, n+α+β+1; α+1; (1-x)/2)`.
pub fn jacobi_r(n: u32) -> Result<RationalFunction, FamilyError> {
    jacobi_r_with(n, &alpha(), &beta())
}

pub fn jacobi_r_with(n: u32, a: &ParamAffine, b: &ParamAffine) -> Result<RationalFunction, FamilyError> {
    let upper = [ParamAffine::int(-(n as i64)), a.add(b).add_int(n as i64 + 1)];
    let lower = [a.add_int(1)];
    let arg = RationalFunction::from_poly((&MultiPoly::one() - &MultiPoly::var(Var::X)).scale(&rat(1, 2)));
    Ok(hyp_terminating(&upper, &lower, &arg, n)?)
}

/// `P_n^{(α,β)}(x) = (α+1)_n / n! · R_n^{(α,β)}(x)`, asserted polynomial.
pub fn jacobi_p(n: u32) -> Result<MultiPoly, FamilyError> {
    jacobi_p_with(n, &alpha(), &beta())
}

pub fn jacobi_p_with(n: u32, a: &ParamAffine, b: &ParamAffine) -> Result<MultiPoly, FamilyError> {
    let r = jacobi_r_with(n, a, b)?;
    let scale = pochhammer(&a.add_int(1), n).scale(&BigRational::new(1.into(), factorial(n)));
    Ok(r.mul_poly(&scale).to_poly()?)
}

/// Value of a family polynomial in `x` at a polynomial argument.
pub fn compose_x(f: &RationalFunction, arg: &MultiPoly) -> Result<RationalFunction, FamilyError> {
    Ok(f.substitute(&[(Var::X, RationalFunction::from_poly(arg.clone()))])?)
}

/// `Σ_j b_j A^j B^{n-j}` for `P_n = Σ_j b_j x^j`, i.e. `B^n P_n(A/B)`.
fn homogenize(p: &MultiPoly, n: u32, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut ap = vec![MultiPoly::one()];
    let mut bp = vec![MultiPoly::one()];
    for i in 0..n as usize {
        ap.push(&ap[i] * a);
        bp.push(&bp[i] * b);
    }
    let mut acc = MultiPoly::zero();
    for (j, c) in p.coefficients_in(Var::X) {
        let j = j as usize;
        acc = &acc + &(&c * &(&ap[j] * &bp[n as usize - j]));
    }
    acc
}

/// `(zw)^n P_n^{(α,β)}((z/w + w/z)/2)`.
pub fn jacobi_homog(n: u32) -> Result<MultiPoly, FamilyError> {
    jacobi_homog_with(n, &alpha(), &beta())
}

pub fn jacobi_homog_with(n: u32, a: &ParamAffine, b: &ParamAffine) -> Result<MultiPoly, FamilyError> {
    let p = jacobi_p_with(n, a, b)?;
    let z = MultiPoly::var(Var::Z);
    let w = MultiPoly::var(Var::W);
    let num = (&(&z * &z) + &(&w * &w)).scale(&rat(1, 2));
    Ok(homogenize(&p, n, &num, &(&z * &w)))
}

/// `(1+x²)^n P_n^{(α,β)}((1-x²)/(1+x²))`.
pub fn jacobi_rational(n: u32) -> Result<MultiPoly, FamilyError> {
    jacobi_rational_with(n, &alpha(), &beta())
}

pub fn jacobi_rational_with(n: u32, a: &ParamAffine, b: &ParamAffine) -> Result<MultiPoly, FamilyError> {
    let p = jacobi_p_with(n, a, b)?;
    let xx = MultiPoly::monomial(Monomial::var(Var::X, 2), BigRational::from_integer(1.into()));
    let one = MultiPoly::one();
    Ok(homogenize(&p, n, &(&one - &xx), &(&one + &xx)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn a() -> MultiPoly {
        MultiPoly::var(Var::Alpha)
    }
    fn b() -> MultiPoly {
        MultiPoly::var(Var::Beta)
    }
    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }

    #[test]
    fn degree_one() {
        let ab2 = &(&a() + &b()) + &MultiPoly::int(2);
        let one = MultiPoly::one();
        let expected = RationalFunction::one()
            - RationalFunction::ratio(&ab2 * &(&one - &x()), (&a() + &one).scale(&int(2)));
        assert_eq!(jacobi_r(1).unwrap(), expected);
        let p1 = (&(&ab2 * &x()) + &(&a() - &b())).scale(&rat(1, 2));
        assert_eq!(jacobi_p(1).unwrap(), p1);
        assert!(jacobi_r(0).unwrap().is_one());
    }

    #[test]
    fn value_at_one() {
        for n in 0..6 {
            let at1 = compose_x(&RationalFunction::from_poly(jacobi_p(n).unwrap()), &MultiPoly::one()).unwrap();
            let expected = pochhammer(&alpha().add_int(1), n).scale(&BigRational::new(1.into(), factorial(n)));
            assert_eq!(at1, RationalFunction::from_poly(expected));
            let r1 = compose_x(&jacobi_r(n).unwrap(), &MultiPoly::one()).unwrap();
            assert!(r1.is_one());
        }
    }

    #[test]
    fn homogeneous_chart_degree_one() {
        let z = MultiPoly::var(Var::Z);
        let w = MultiPoly::var(Var::W);
        let ab2 = &(&a() + &b()) + &MultiPoly::int(2);
        let expected = (&(&ab2 * &(&(&z * &z) + &(&w * &w))) + &(&(&a() - &b()) * &(&z * &w)).scale(&int(2)))
            .scale(&rat(1, 4));
        assert_eq!(jacobi_homog(1).unwrap(), expected);
        for n in 0..5 {
            let h = jacobi_homog(n).unwrap();
            assert_eq!(h.swap_vars(Var::Z, Var::W), h);
        }
    }
}
