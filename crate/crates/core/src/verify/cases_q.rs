//! q-case identities: Kirillov–Noumi operators on `J_{n,0}`, the z-chart
//! ladder, and the operator relations.

use std::collections::BTreeMap;

use crate::exactalg::{Monomial, MultiPoly, RationalFunction, Var};
use crate::families::{cq_ultra_z, macdonald_j_n0};
use crate::operators::{
    kn_a, kn_k1minus, kn_k1plus, kn_m1minus, kn_m1plus, kn_omega, q_rf, upow, z_ladder_lhs, z_ladder_rhs_factor,
    ShiftOp, ZLadder,
};

use super::{BuildFailure, Check, Ctx};

fn v(var: Var) -> RationalFunction {
    RationalFunction::var(var)
}

fn one() -> RationalFunction {
    RationalFunction::one()
}

fn j(n: i64) -> RationalFunction {
    RationalFunction::from_poly(macdonald_j_n0(n as u32))
}

fn qpow(e: i64) -> RationalFunction {
    upow(2 * e)
}

fn t2() -> RationalFunction {
    &v(Var::T) * &v(Var::T)
}

pub(super) fn k1_raise(ctx: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    let n = ctx.n;
    let rhs = ctx.pick(j(n + 1), &q_rf() * &j(n + 1));
    Ok(vec![
        Check::new("K1+ J_n = J_{n+1}", kn_k1plus().apply(&j(n)), rhs.clone()),
        Check::new("K1- J_n = J_{n+1}", kn_k1minus().apply(&j(n)), rhs),
    ])
}

pub(super) fn m1_lower_constant(n: i64, mutate: bool) -> RationalFunction {
    let second = if mutate { qpow(n) } else { qpow(n - 1) };
    &(&one() - &qpow(n)) * &(&one() - &(&t2() * &second))
}

pub(super) fn m1_lower(ctx: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    let n = ctx.n;
    let lower = if n == 0 { RationalFunction::zero() } else { j(n - 1) };
    let rhs = &m1_lower_constant(n, ctx.mutate) * &lower;
    Ok(vec![
        Check::new("M1+ J_n", kn_m1plus().apply(&j(n)), rhs.clone()),
        Check::new("M1- J_n", kn_m1minus().apply(&j(n)), rhs),
    ])
}

fn cz(n: i64) -> RationalFunction {
    if n < 0 {
        RationalFunction::zero()
    } else {
        cq_ultra_z(n as u32)
    }
}

/// Ladder factor of a z-chart identity, with the q-power of its second
/// term raised by one under mutation.
fn z_factor(variant: ZLadder, n: i64, mutate: bool) -> RationalFunction {
    if !mutate {
        return z_ladder_rhs_factor(variant, n);
    }
    match variant {
        ZLadder::Raise1 | ZLadder::Raise2 => &upow(-n) - &upow(n + 4),
        ZLadder::Lower1 | ZLadder::Lower2 => &upow(-n) - &(&t2() * &upow(n)),
        ZLadder::Difference => RationalFunction::zero(),
    }
}

pub(super) fn z_ladder(variant: ZLadder) -> impl Fn(&Ctx) -> Result<Vec<Check>, BuildFailure> {
    move |ctx: &Ctx| {
        let n = ctx.n;
        let lhs = z_ladder_lhs(variant, n).apply(&cz(n));
        let rhs = match variant.step() {
            Some(s) => &z_factor(variant, n, ctx.mutate) * &cz(n + s),
            None => ctx.pick(RationalFunction::zero(), cz(n)),
        };
        Ok(vec![Check::new(format!("{} on C_n[z]", variant.id()), lhs, rhs)])
    }
}

pub(super) fn z_equivalence(ctx: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    let n = ctx.n;
    let r = RationalFunction::from_poly(&MultiPoly::var(Var::Z) + &MultiPoly::var_pow(Var::Z, -1));
    let r = ctx.pick(-&r, r);
    let diff = z_ladder_lhs(ZLadder::Difference, n).left_mul(&r);
    let raise = z_ladder_lhs(ZLadder::Raise1, n).sub(&z_ladder_lhs(ZLadder::Raise2, n));
    let lower = z_ladder_lhs(ZLadder::Lower1, n).sub(&z_ladder_lhs(ZLadder::Lower2, n));
    Ok(vec![
        Check::new("6.04 - 6.05 = -(z+1/z) 6.08", raise, diff.clone()),
        Check::new("6.06 - 6.07 = -(z+1/z) 6.08", lower, diff),
    ])
}

pub(super) fn kn_structural(ctx: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    let xy = &v(Var::X) * &v(Var::Y);
    let s = &v(Var::X) + &v(Var::Y);
    let w = ctx.pick(&xy * &s, &(&xy * &s) * &v(Var::X));
    Ok(vec![
        Check::new("K1+ - K1- = xy(x+y) Omega", kn_k1plus().sub(&kn_k1minus()), kn_omega().left_mul(&w)),
        Check::new("M1+ - M1- = (x+y) Omega", kn_m1plus().sub(&kn_m1minus()), kn_omega().left_mul(&s)),
    ])
}

/// Coefficient of `(x+y)Ω` in `ΩK₁⁺ - q²K₁⁺Ω`: `1 - q²`, or the printed
/// `(1 - q)²`, which leaves the residual `2q(1-q)(x+y)Ω`.
pub(crate) fn omega_k_coefficient(printed: bool) -> RationalFunction {
    let q = q_rf();
    if printed {
        let d = &one() - &q;
        &d * &d
    } else {
        &one() - &(&q * &q)
    }
}

pub(super) fn kn_relations(ctx: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    let (a, om, k, m) = (kn_a(), kn_omega(), kn_k1plus(), kn_m1plus());
    let q = q_rf();
    let q2 = &q * &q;
    let s = &v(Var::X) + &v(Var::Y);
    let one_minus_q = &one() - &q;
    let quad = &(&(&v(Var::X) * &v(Var::X)) + &(&v(Var::X) * &v(Var::Y))) + &(&v(Var::Y) * &v(Var::Y));
    let q2m1 = &q2 - &one();
    let heis_rhs = ShiftOp::multiplication(q2m1.clone())
        .add(&a.left_mul(&(&one_minus_q * &(&q + &t2()))))
        .add(&om.left_mul(&(&q2m1 * &quad)));
    let a_k_factor = ctx.pick(q.clone(), q2.clone());
    Ok(vec![
        Check::new("A Omega = q^-2 Omega A", a.compose(&om), om.compose(&a).left_mul(&qpow(-2))),
        Check::new("A K1+ = q K1+ A", a.compose(&k), k.compose(&a).left_mul(&a_k_factor)),
        Check::new("A M1+ = q^-1 M1+ A", a.compose(&m), m.compose(&a).left_mul(&qpow(-1))),
        Check::new(
            "Omega K1+ = q^2 K1+ Omega + (1-q^2) (x+y) Omega",
            om.compose(&k),
            k.compose(&om).left_mul(&q2).add(&om.left_mul(&(&omega_k_coefficient(false) * &s))),
        ),
        Check::new("Omega M1+ = M1+ Omega", om.compose(&m), m.compose(&om)),
        Check::new(
            "q^2 K1+ M1+ - M1+ K1+",
            k.compose(&m).left_mul(&q2).sub(&m.compose(&k)),
            heis_rhs,
        ),
    ])
}

pub(super) fn kn_subspace(ctx: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    let f = j(ctx.n);
    let (a, k, m) = (kn_a(), kn_k1plus(), kn_m1plus());
    let q = q_rf();
    let q2 = &q * &q;
    let lhs = &(&q2 * &k.apply(&m.apply(&f))) - &m.apply(&k.apply(&f));
    let c0 = ctx.pick(&q2 - &one(), &q2 + &one());
    let rhs = &(&c0 * &f) + &(&(&(&one() - &q) * &(&q + &t2())) * &a.apply(&f));
    Ok(vec![
        Check::new("q^2 K1+ M1+ - M1+ K1+ on J_n", lhs, rhs),
        Check::new("A K1+ = q K1+ A on J_n", a.apply(&k.apply(&f)), &q * &k.apply(&a.apply(&f))),
        Check::new(
            "A M1+ = q^-1 M1+ A on J_n",
            a.apply(&m.apply(&f)),
            &qpow(-1) * &m.apply(&a.apply(&f)),
        ),
    ])
}

/// Symmetric monomial basis of degree `n`: `x^{n-k}y^k + x^k y^{n-k}` for
/// `2k < n` and `(xy)^{n/2}`.
fn symmetric_basis(n: i64) -> Vec<MultiPoly> {
    (0..=n / 2)
        .map(|k| {
            let a = &MultiPoly::var_pow(Var::X, (n - k) as i16) * &MultiPoly::var_pow(Var::Y, k as i16);
            if 2 * k == n {
                a
            } else {
                &a + &(&MultiPoly::var_pow(Var::X, k as i16) * &MultiPoly::var_pow(Var::Y, (n - k) as i16))
            }
        })
        .collect()
}

/// Null space of a matrix over the field of rational functions, by
/// Gauss–Jordan elimination.
fn null_space(rows: Vec<Vec<RationalFunction>>, ncols: usize) -> Result<Vec<Vec<RationalFunction>>, BuildFailure> {
    let mut a = rows;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip()?;
        a[r] = a[r].iter().map(|e| &inv * e).collect();
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                a[i] = a[i].iter().zip(&pivot_row).map(|(e, pe)| e - &(&f * pe)).collect();
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut vec = vec![RationalFunction::zero(); ncols];
            vec[f] = RationalFunction::one();
            for (row, &pc) in pivots.iter().enumerate() {
                vec[pc] = -&a[row][f];
            }
            vec
        })
        .collect())
}

pub(super) fn omega_kernel(ctx: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    let n = ctx.n;
    let om = kn_omega();
    let basis = symmetric_basis(n);
    // images grouped by spatial monomial
    let mut rows: BTreeMap<Monomial, Vec<RationalFunction>> = BTreeMap::new();
    for (col, b) in basis.iter().enumerate() {
        let img = om.apply_poly(b);
        let groups = img
            .split_spatial()
            .ok_or_else(|| BuildFailure::Other("Omega image is not a polynomial".into()))?;
        for (mono, c) in groups {
            rows.entry(mono).or_insert_with(|| vec![RationalFunction::zero(); basis.len()])[col] = c;
        }
    }
    let kernel = null_space(rows.into_values().collect(), basis.len())?;
    let mut checks = vec![Check::new(
        "dim ker Omega = 1",
        RationalFunction::int(kernel.len() as i64),
        RationalFunction::int(ctx.pick(1, 2)),
    )];
    if let Some(vec) = kernel.first() {
        let jn = j(n);
        let lead = jn
            .split_spatial()
            .and_then(|g| g.into_iter().find(|(m, _)| m.exp(Var::X) == n as i16).map(|(_, c)| c))
            .ok_or_else(|| BuildFailure::Other("J_{n,0} has no x^n term".into()))?;
        let scale = (&lead / &vec[0])?;
        let combo = RationalFunction::sum(
            vec.iter()
                .zip(&basis)
                .map(|(c, b)| (&scale * c).mul_poly(b))
                .collect::<Vec<_>>()
                .iter(),
        );
        checks.push(Check::new("kernel vector = J_{n,0}", combo, jn.clone()));
        checks.push(Check::new("Omega J_{n,0} = 0", om.apply(&jn), RationalFunction::zero()));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_omega_k_coefficient_leaves_residual() {
        let (om, k) = (kn_omega(), kn_k1plus());
        let q = q_rf();
        let s = &v(Var::X) + &v(Var::Y);
        let lhs = om.compose(&k).sub(&k.compose(&om).left_mul(&(&q * &q)));
        let printed = om.left_mul(&(&omega_k_coefficient(true) * &s));
        let expected = om.left_mul(&(&q.scale(&crate::exactalg::int(2)) * &(&(&one() - &q) * &s)));
        assert_eq!(lhs.sub(&printed), expected);
        assert_eq!(lhs, om.left_mul(&(&omega_k_coefficient(false) * &s)));
    }

    #[test]
    fn null_space_of_rank_one_matrix() {
        let r = |n| RationalFunction::int(n);
        let ns = null_space(vec![vec![r(1), r(2)], vec![r(2), r(4)]], 2).unwrap();
        assert_eq!(ns, vec![vec![r(-2), r(1)]]);
    }
}
