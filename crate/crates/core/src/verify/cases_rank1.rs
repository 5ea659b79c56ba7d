//! One-variable identities: ultraspherical and Jacobi ladder formulas in
//! their polynomial charts, the Jack ladder, and quadratic transformations.

use crate::exactalg::{int, rat, KernelPoly, MultiPoly, RationalFunction, SymbolicExponent, Var};
use crate::families::{
    compose_x, gegenbauer_homog, gegenbauer_tan, gegenbauer_x, jack_z, jacobi_homog, jacobi_p, jacobi_p_with,
    jacobi_r_with, jacobi_rational,
};
use crate::operators::{fsd_minus, fsd_plus, fsd_zero, sl2_e, sl2_f, sl2_h, DiffOp};
use crate::qseries::{factorial, pochhammer, ParamAffine};

use super::{BuildFailure, Check, Ctx};

type Out = Result<Vec<Check>, BuildFailure>;

fn v(var: Var) -> RationalFunction {
    RationalFunction::var(var)
}

fn c(n: i64) -> RationalFunction {
    RationalFunction::int(n)
}

fn half() -> RationalFunction {
    RationalFunction::constant(rat(1, 2))
}

fn x() -> RationalFunction {
    v(Var::X)
}

fn lam() -> RationalFunction {
    v(Var::Lambda)
}

fn al() -> RationalFunction {
    v(Var::Alpha)
}

fn be() -> RationalFunction {
    v(Var::Beta)
}

fn mul(c: RationalFunction) -> DiffOp {
    DiffOp::multiplication(c)
}

fn d(var: Var, k: u8) -> DiffOp {
    DiffOp::partial(var, k)
}

fn rf(p: MultiPoly) -> RationalFunction {
    RationalFunction::from_poly(p)
}

fn one_minus_x2() -> RationalFunction {
    &c(1) - &(&x() * &x())
}

fn geg(n: i64) -> RationalFunction {
    rf(gegenbauer_x(n as u32))
}

fn tan(n: i64) -> RationalFunction {
    rf(gegenbauer_tan(n as u32))
}

fn homog(n: i64) -> RationalFunction {
    rf(gegenbauer_homog(n as u32))
}

fn jp(n: i64) -> Result<RationalFunction, BuildFailure> {
    Ok(rf(jacobi_p(n as u32)?))
}

fn jrat(n: i64) -> Result<RationalFunction, BuildFailure> {
    Ok(rf(jacobi_rational(n as u32)?))
}

fn jhom(n: i64) -> Result<RationalFunction, BuildFailure> {
    Ok(rf(jacobi_homog(n as u32)?))
}

/// `n + 2λ - 1`, or `n + 2λ` under mutation.
fn geg_lower_factor(ctx: &Ctx) -> RationalFunction {
    &(&c(ctx.n) + &lam().scale(&int(2))) - &c(ctx.pick(1, 0))
}

pub(super) fn case_2_06(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let op = mul(one_minus_x2()).compose(&d(Var::X, 1)).add(&mul(&c(n) * &x()));
    Ok(vec![Check::new("lowering", op.apply(&geg(n)), &geg_lower_factor(ctx) * &geg(n - 1))])
}

pub(super) fn case_2_07(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let k = &(&c(n - 1) + &lam().scale(&int(2))) * &x();
    let op = mul(one_minus_x2()).compose(&d(Var::X, 1)).sub(&mul(k));
    Ok(vec![Check::new("raising", op.apply(&geg(n - 1)), &c(-ctx.pick(n, n + 1)) * &geg(n))])
}

pub(super) fn case_2_01(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let lhs = d(Var::X, 1).apply(&tan(n));
    Ok(vec![Check::new("tan chart lowering", lhs, &geg_lower_factor(ctx) * &tan(n - 1))])
}

fn kernel_1px2() -> MultiPoly {
    &MultiPoly::one() + &MultiPoly::var_pow(Var::X, 2)
}

/// `-(n) - λ` as an exponent.
fn exp_lam(constant: i64) -> SymbolicExponent {
    SymbolicExponent::new(constant, &[(Var::Lambda, int(-1))])
}

pub(super) fn case_2_02(ctx: &Ctx) -> Out {
    let n = ctx.n;
    // (1+x²)^{-(n-1)/2-λ} C_{n-1}(x/√(1+x²)) = (1+x²)^{-(n-1)-λ} g_{n-1}
    let inner = KernelPoly::single(tan(n - 1), kernel_1px2(), exp_lam(-(n - 1)));
    let rhs = KernelPoly::single(&c(-ctx.pick(n, n + 1)) * &tan(n), kernel_1px2(), exp_lam(-n));
    Ok(vec![Check::new("kernel raising", inner.derivative(Var::X), rhs)])
}

pub(super) fn case_2_03(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let mut lhs = KernelPoly::single(c(1), kernel_1px2(), exp_lam(0));
    for _ in 0..n {
        lhs = lhs.derivative(Var::X);
    }
    let fact = factorial(ctx.pick(n, n + 1) as u32);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let coeff = RationalFunction::constant(crate::exactalg::BigRational::from_integer(fact * sign));
    let rhs = KernelPoly::single(&coeff * &tan(n), kernel_1px2(), exp_lam(-n));
    Ok(vec![Check::new("n-fold derivative of (1+x^2)^-l", lhs, rhs)])
}

pub(super) fn genfun_taylor(ctx: &Ctx) -> Out {
    let n = ctx.n;
    // 1 + (x - z)²
    let xz = &MultiPoly::var(Var::X) - &MultiPoly::var(Var::Z);
    let kernel = &MultiPoly::one() + &(&xz * &xz);
    let mut f = KernelPoly::single(c(1), kernel, exp_lam(0));
    for _ in 0..n {
        f = f.derivative(Var::Z);
    }
    let at0 = f.substitute(&[(Var::Z, RationalFunction::zero())])?;
    let fact = factorial(ctx.pick(n, n + 1) as u32);
    let inv = RationalFunction::constant(crate::exactalg::BigRational::new(1.into(), fact));
    let lhs = at0.scale(&inv);
    let rhs = KernelPoly::single(tan(n), kernel_1px2(), exp_lam(-n));
    Ok(vec![Check::new("Taylor coefficient", lhs, rhs)])
}

pub(super) fn case_2_10(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let lhs = fsd_minus().apply(&homog(n));
    Ok(vec![Check::new("(Dx+Dy) f_n", lhs, &geg_lower_factor(ctx) * &homog(n - 1))])
}

pub(super) fn case_2_11(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let lhs = sl2_e().apply(&homog(n - 1));
    Ok(vec![Check::new("E f_{n-1}", lhs, &c(ctx.pick(n, n + 1)) * &homog(n))])
}

pub(super) fn case_2_16(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let e = sl2_e();
    let mut f = c(1);
    for _ in 0..n {
        f = e.apply(&f);
    }
    let fact = factorial(ctx.pick(n, n + 1) as u32);
    let lhs = f.scale(&crate::exactalg::BigRational::new(1.into(), fact));
    Ok(vec![Check::new("E^n(1)/n!", lhs, homog(n))])
}

pub(super) fn sl2(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let (h, e, f) = (sl2_h(), sl2_e(), sl2_f());
    let two = ctx.pick(2, 3);
    let fn_ = homog(n);
    Ok(vec![
        Check::new("[H,E] = 2E", h.commutator(&e), e.scale(&int(two))),
        Check::new("[H,F] = -2F", h.commutator(&f), f.scale(&int(-2))),
        Check::new("[E,F] = H", e.commutator(&f), h.clone()),
        Check::new(
            "F f_n",
            f.apply(&fn_),
            &(-&(&(&c(n) + &lam().scale(&int(2))) - &c(1))) * &homog(n - 1),
        ),
        Check::new("E f_{n-1}", e.apply(&homog(n - 1)), &c(n) * &fn_),
        Check::new("H f_n", h.apply(&fn_), &(&c(n) + &lam()).scale(&int(2)) * &fn_),
    ])
}

pub(super) fn case_1_04(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let ab = &al() + &be();
    let first = &(&be() - &al()) - &(&(&ab + &c(2)) * &x());
    let eig = &c(n) * &(&(&ab + &c(n)) + &c(ctx.pick(1, 2)));
    let op = mul(one_minus_x2())
        .compose(&d(Var::X, 2))
        .add(&mul(first).compose(&d(Var::X, 1)))
        .add(&mul(eig));
    Ok(vec![Check::new("Jacobi ODE", op.apply(&jp(n)?), RationalFunction::zero())])
}

fn bessel_like() -> DiffOp {
    let coef = (&(&al().scale(&int(2)) + &c(1)) * &RationalFunction::var_pow(Var::X, -1)).clone();
    d(Var::X, 2).add(&mul(coef).compose(&d(Var::X, 1)))
}

pub(super) fn case_1_01(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let k = &c(-4) * &(&(&c(n) + &al()) * &(&c(ctx.pick(n, n + 1)) + &be()));
    Ok(vec![Check::new(
        "rational chart lowering",
        bessel_like().apply(&jrat(n)?),
        &k * &jrat(n - 1)?,
    )])
}

fn exp_ab(constant: i64) -> SymbolicExponent {
    SymbolicExponent::new(constant, &[(Var::Alpha, int(-1)), (Var::Beta, int(-1))])
}

pub(super) fn case_1_06(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let inner = KernelPoly::single(jrat(n - 1)?, kernel_1px2(), exp_ab(-2 * n + 1));
    let lhs = bessel_like().apply_kernel(&inner)?;
    let k = &c(-4 * ctx.pick(n, n + 1)) * &(&c(n) + &(&al() + &be()));
    let rhs = KernelPoly::single(&k * &jrat(n)?, kernel_1px2(), exp_ab(-2 * n - 1));
    Ok(vec![Check::new("kernel raising", lhs, rhs)])
}

fn nab(n: i64) -> RationalFunction {
    &(&c(2 * n) + &al()) + &be()
}

pub(super) fn case_1_05(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let first = &nab(n) * &one_minus_x2();
    let zeroth = &c(n) * &(&(&nab(n) * &x()) + &(&be() - &al()));
    let op = mul(first).compose(&d(Var::X, 1)).add(&mul(zeroth));
    let k = &c(2) * &(&(&c(n) + &al()) * &(&c(ctx.pick(n, n + 1)) + &be()));
    Ok(vec![Check::new("lowering", op.apply(&jp(n)?), &k * &jp(n - 1)?)])
}

pub(super) fn case_1_09(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let first = &nab(n) * &one_minus_x2();
    let zeroth = &(&(&c(n) + &al()) + &be()) * &(&(&nab(n) * &x()) + &(&al() - &be()));
    let op = mul(first).compose(&d(Var::X, 1)).sub(&mul(zeroth));
    let k = &c(-2 * ctx.pick(n, n + 1)) * &(&c(n) + &(&al() + &be()));
    Ok(vec![Check::new("raising", op.apply(&jp(n - 1)?), &k * &jp(n)?)])
}

fn cubic() -> RationalFunction {
    &(&c(1) + &x()) * &one_minus_x2()
}

pub(super) fn case_1_03(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let first = &(&c(1) + &x()).scale(&int(2)) * &(&(&c(n - 1) * &x()) - &(&c(n) + &al()));
    let zeroth = &c(n) * &(&(&c(-(n - 1)) * &x()) + &(&c(n + 1) + &al().scale(&int(2))));
    let op = mul(cubic())
        .compose(&d(Var::X, 2))
        .add(&mul(first).compose(&d(Var::X, 1)))
        .add(&mul(zeroth));
    let k = &c(-2) * &(&(&c(n) + &al()) * &(&c(ctx.pick(n, n + 1)) + &be()));
    Ok(vec![Check::new("intermediate lowering", op.apply(&jp(n)?), &k * &jp(n - 1)?)])
}

pub(super) fn case_1_08(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let nab1 = &(&(&c(n + 1) + &al()) + &be()) * &x();
    let first = &(&c(1) + &x()).scale(&int(2)) * &(&(&c(n) + &be()) - &nab1);
    let na = &(&c(n) + &al()) + &be();
    let zeroth = &na * &(&(&(&c(n - 1) - &al()) + &be()) - &nab1);
    let op = mul(cubic())
        .compose(&d(Var::X, 2))
        .add(&mul(first).compose(&d(Var::X, 1)))
        .add(&mul(zeroth));
    let k = &c(-2 * ctx.pick(n, n + 1)) * &na;
    Ok(vec![Check::new("intermediate raising", op.apply(&jp(n - 1)?), &k * &jp(n)?)])
}

fn zw_sum() -> DiffOp {
    d(Var::Z, 1).add(&d(Var::W, 1))
}

fn zw_euler() -> DiffOp {
    let z2 = rf(MultiPoly::var_pow(Var::Z, 2));
    let w2 = rf(MultiPoly::var_pow(Var::W, 2));
    mul(z2).compose(&d(Var::Z, 1)).add(&mul(w2).compose(&d(Var::W, 1)))
}

fn z_plus_w() -> MultiPoly {
    &MultiPoly::var(Var::Z) + &MultiPoly::var(Var::W)
}

pub(super) fn case_1_12(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let s = zw_sum();
    let coef = RationalFunction::ratio((&be().scale(&int(4)) + &c(2)).numer().clone(), z_plus_w());
    let op = s.compose(&s).add(&mul(coef).compose(&s));
    let k = &c(4) * &(&(&c(n) + &al()) * &(&c(ctx.pick(n, n + 1)) + &be()));
    Ok(vec![Check::new("homogeneous lowering", op.apply(&jhom(n)?), &k * &jhom(n - 1)?)])
}

/// Raising operator in the `(z, w)` chart. The first-order coefficient
/// `(α+β+1)(z+w) - (2β+1)zw/(z+w)` enters with weight `first_order_weight`;
/// the identity holds for all `n` only with weight 2 (weight 1 is correct
/// at `n = 1` alone).
pub(crate) fn homog_raising_operator(first_order_weight: i64) -> DiffOp {
    let e = zw_euler();
    let ab1 = &(&al() + &be()) + &c(1);
    let z = v(Var::Z);
    let w = v(Var::W);
    let zw = &z * &w;
    let frac = RationalFunction::ratio((&(&be().scale(&int(2)) + &c(1)) * &zw).numer().clone(), z_plus_w());
    let first = (&(&ab1 * &(&z + &w)) - &frac).scale(&int(first_order_weight));
    let sq = &(&z * &z) + &(&w * &w);
    let zeroth = &ab1 * &(&(&(&ab1 + &c(1)) * &sq) + &(&(&al() - &be()).scale(&int(2)) * &zw));
    e.compose(&e).add(&mul(first).compose(&e)).add(&mul(zeroth))
}

pub(super) fn case_1_16(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let op = homog_raising_operator(2);
    let k = &c(4 * ctx.pick(n, n + 1)) * &(&c(n) + &(&al() + &be()));
    Ok(vec![Check::new("homogeneous raising", op.apply(&jhom(n - 1)?), &k * &jhom(n)?)])
}

pub(super) fn case_1_11(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let lhs = jp(n)?.substitute(&[(Var::X, -x())])?;
    let swapped = rf(jacobi_p_with(n as u32, &ParamAffine::param(Var::Beta), &ParamAffine::param(Var::Alpha))?);
    let sign = if (n + ctx.pick(0, 1)) % 2 == 0 { 1 } else { -1 };
    Ok(vec![Check::new("reflection", lhs, &c(sign) * &swapped)])
}

fn lam_shift(c: (i64, i64)) -> ParamAffine {
    ParamAffine::param(Var::Lambda).add_const(&rat(c.0, c.1))
}

fn half_poch(k: u32) -> RationalFunction {
    rf(pochhammer(&ParamAffine::constant(rat(1, 2)), k))
}

fn two_x2_minus_one() -> MultiPoly {
    &MultiPoly::var_pow(Var::X, 2).scale(&int(2)) - &MultiPoly::one()
}

pub(super) fn qt_even(ctx: &Ctx) -> Out {
    let n = ctx.n as u32;
    let p = jacobi_p_with(n, &lam_shift((-1, 2)), &ParamAffine::constant(rat(-1, 2)))?;
    let composed = compose_x(&rf(p), &two_x2_minus_one())?;
    let top = rf(pochhammer(&ParamAffine::param(Var::Lambda), ctx.pick(n, n + 1)));
    let pre = (&top / &half_poch(n))?;
    Ok(vec![Check::new("C_2n", geg(2 * ctx.n), &pre * &composed)])
}

pub(super) fn qt_odd(ctx: &Ctx) -> Out {
    let n = ctx.n as u32;
    let p = jacobi_p_with(n, &lam_shift((-1, 2)), &ParamAffine::constant(rat(1, 2)))?;
    let composed = compose_x(&rf(p), &two_x2_minus_one())?;
    let top = rf(pochhammer(&ParamAffine::param(Var::Lambda), ctx.pick(n + 1, n + 2)));
    let pre = (&top / &half_poch(n + 1))?;
    Ok(vec![Check::new("C_2n+1", geg(2 * ctx.n + 1), &(&pre * &x()) * &composed)])
}

fn raa(n: i64) -> Result<RationalFunction, BuildFailure> {
    if n < 0 {
        return Ok(RationalFunction::zero());
    }
    let a = ParamAffine::param(Var::Alpha);
    Ok(jacobi_r_with(n as u32, &a, &a)?)
}

/// `n(n+2α+1)`, with `n+2α+2` under mutation.
fn eig_aa(ctx: &Ctx) -> RationalFunction {
    &c(ctx.n) * &(&c(ctx.n + ctx.pick(1, 2)) + &al().scale(&int(2)))
}

pub(super) fn case_4_01(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let op = mul(one_minus_x2()).compose(&d(Var::X, 1)).add(&mul(&c(n) * &x()));
    Ok(vec![Check::new("lowering", op.apply(&raa(n)?), &c(ctx.pick(n, n + 1)) * &raa(n - 1)?)])
}

pub(super) fn case_4_02(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let f = &c(n + 1) + &al().scale(&int(2));
    let op = mul(&f * &one_minus_x2())
        .compose(&d(Var::X, 1))
        .add(&mul(&(&c(n) * &f) * &x()));
    Ok(vec![Check::new("scaled lowering", op.apply(&raa(n)?), &eig_aa(ctx) * &raa(n - 1)?)])
}

pub(super) fn case_4_03(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let op = mul(one_minus_x2())
        .compose(&d(Var::X, 2))
        .sub(&mul(&(&al() + &c(1)).scale(&int(2)) * &x()).compose(&d(Var::X, 1)));
    Ok(vec![Check::new("eigen equation", op.apply(&raa(n)?), &(-&eig_aa(ctx)) * &raa(n)?)])
}

pub(super) fn case_4_05(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let arg = &MultiPoly::one() - &MultiPoly::var(Var::X).scale(&int(2));
    let f = |m: i64| -> Result<RationalFunction, BuildFailure> {
        if m < 0 {
            return Ok(RationalFunction::zero());
        }
        Ok(compose_x(&raa(m)?, &arg)?)
    };
    let second = &(&x() * &(&c(1) - &x())) * &(&c(1) - &x().scale(&int(2)));
    let first = &(&(&al() + &c(1)) + &(&c(2 * (n - 1)) * &x())) - &(&c(2 * (n - 1)) * &(&x() * &x()));
    let op = mul(second).compose(&d(Var::X, 2)).add(&mul(first).compose(&d(Var::X, 1)));
    Ok(vec![Check::new("lowering in 1-2x", op.apply(&f(n)?), &(-&eig_aa(ctx)) * &f(n - 1)?)])
}

fn zm(m: i64) -> Result<RationalFunction, BuildFailure> {
    if m < 0 {
        return Ok(RationalFunction::zero());
    }
    Ok(jack_z(m as u32, 0)?)
}

pub(super) fn case_4_06(ctx: &Ctx) -> Out {
    let m = ctx.n;
    let g = v(Var::Gamma);
    let num = &c(m) * &(&g.scale(&int(2)) + &c(ctx.pick(m, m + 1)));
    let den = &(&g + &c(m)) - &half();
    let k = (&num / &den)?;
    Ok(vec![Check::new("D- Z_m", fsd_minus().apply(&zm(m)?), &k * &zm(m - 1)?)])
}

pub(super) fn case_4_07(ctx: &Ctx) -> Out {
    let m = ctx.n;
    let k = &(&v(Var::Gamma) + &c(ctx.pick(m, m + 1))) + &half();
    Ok(vec![Check::new("D+ Z_m", fsd_plus().apply(&zm(m)?), &k * &zm(m + 1)?)])
}

pub(super) fn case_4_08(ctx: &Ctx) -> Out {
    let m = ctx.n;
    Ok(vec![Check::new("D0 Z_m", fsd_zero().apply(&zm(m)?), &c(ctx.pick(m, m + 1)) * &zm(m)?)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raising_residual(weight: i64, n: i64) -> RationalFunction {
        let k = &c(4 * n) * &(&c(n) + &(&al() + &be()));
        &homog_raising_operator(weight).apply(&jhom(n - 1).unwrap()) - &(&k * &jhom(n).unwrap())
    }

    #[test]
    fn printed_homogeneous_raising_holds_only_at_one() {
        assert!(raising_residual(1, 1).is_zero());
        assert!(!raising_residual(1, 2).is_zero());
        for n in 1..=4 {
            assert!(raising_residual(2, n).is_zero(), "n={n}");
        }
    }
}
