//! BC₂ identities: the γ = ±½ reductions of the Jack expansion, the
//! single-sum form at k = 0, and the ladder operators for `R_{n,0}`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::exactalg::{rat, RationalFunction, Var};
use crate::families::{bc2_gamma_half, bc2_r, bc2_r_n0, bc2_r_n0_with, chart_inverse_rf, HalfSign};
use crate::operators::{bc2_lowering_410, bc2_raising_411};
use crate::qseries::ParamAffine;

use super::{BuildFailure, Check, Ctx};

type Out = Result<Vec<Check>, BuildFailure>;

/// `R_{n,k}^{α,β,γ}` from the Jack expansion, built once per index pair.
fn expansion(n: i64, k: i64) -> Result<RationalFunction, BuildFailure> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), RationalFunction>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().expect("cache lock").get(&(n, k)) {
        return Ok(r.clone());
    }
    let r = bc2_r(n as u32, k as u32)?;
    cache.lock().expect("cache lock").insert((n, k), r.clone());
    Ok(r)
}

fn at_gamma(n: i64, k: i64, value: (i64, i64)) -> Result<RationalFunction, BuildFailure> {
    let r = expansion(n, k)?;
    let g = RationalFunction::constant(rat(value.0, value.1));
    Ok(chart_inverse_rf(&r.substitute(&[(Var::Gamma, g)])?))
}

pub(super) fn case_3_03(ctx: &Ctx) -> Out {
    let lhs = at_gamma(ctx.n, ctx.k, (-1, 2))?;
    let rhs = bc2_gamma_half(ctx.n as u32, ctx.k as u32, HalfSign::Minus)?;
    let rhs = rhs.scale(&ctx.pick(rat(1, 1), rat(2, 1)));
    Ok(vec![Check::new("gamma = -1/2", lhs, rhs)])
}

pub(super) fn case_3_04(ctx: &Ctx) -> Out {
    let lhs = at_gamma(ctx.n, ctx.k, (1, 2))?;
    let rhs = bc2_gamma_half(ctx.n as u32, ctx.k as u32, HalfSign::Plus)?;
    // perturbs -(α+1) into -(α+2)
    let a = RationalFunction::var(Var::Alpha);
    let bump = (&(&a + &RationalFunction::int(2)) / &(&a + &RationalFunction::int(1)))?;
    let rhs = if ctx.mutate { &rhs * &bump } else { rhs };
    Ok(vec![Check::new("gamma = 1/2", lhs, rhs)])
}

pub(super) fn case_3_05(ctx: &Ctx) -> Out {
    let lhs = expansion(ctx.n, 0)?;
    let rhs = bc2_r_n0(ctx.n as u32)?;
    let rhs = if ctx.mutate {
        &rhs + &RationalFunction::var(Var::Xi)
    } else {
        rhs
    };
    Ok(vec![Check::new("double sum at k = 0 vs single sum", lhs, rhs)])
}

/// `R_{n,0}^{α,α,γ}(x+y, xy)`, zero for negative `n`.
fn r_aa(n: i64) -> Result<RationalFunction, BuildFailure> {
    if n < 0 {
        return Ok(RationalFunction::zero());
    }
    let a = ParamAffine::param(Var::Alpha);
    let g = ParamAffine::param(Var::Gamma);
    Ok(chart_inverse_rf(&bc2_r_n0_with(n as u32, &a, &a, &g)?))
}

pub(super) fn case_4_10(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let a2 = RationalFunction::var(Var::Alpha).scale(&rat(2, 1));
    let k = &RationalFunction::int(-n) * &(&RationalFunction::int(n + ctx.pick(1, 2)) + &a2);
    let lhs = bc2_lowering_410(n).apply(&r_aa(n)?);
    Ok(vec![Check::new("lowering", lhs, &k * &r_aa(n - 1)?)])
}

/// `-(n+2γ+1)(n+2α+2γ+2)`.
pub(crate) fn raising_constant(n: i64, mutate: bool) -> RationalFunction {
    let a2 = RationalFunction::var(Var::Alpha).scale(&rat(2, 1));
    let g2 = RationalFunction::var(Var::Gamma).scale(&rat(2, 1));
    let first = &RationalFunction::int(n + 1) + &g2;
    let second = &(&RationalFunction::int(n + if mutate { 3 } else { 2 }) + &a2) + &g2;
    -(&first * &second)
}

pub(super) fn case_4_11(ctx: &Ctx) -> Out {
    let n = ctx.n;
    let lhs = bc2_raising_411(n).apply(&r_aa(n)?);
    Ok(vec![Check::new(
        "raising",
        lhs,
        &raising_constant(n, ctx.mutate) * &r_aa(n + 1)?,
    )])
}
