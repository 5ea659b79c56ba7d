//! The concrete operators: Kirillov–Noumi operators in `(x, y)`, the sl(2)
//! triple, the first-order operators of the Jack chart, the BC₂ shift
//! operator in `(ξ, η)`, and the z-chart ladder operators.

use crate::exactalg::{rat, MultiPoly, RationalFunction, Var};

use super::diff::DiffOp;
use super::shift::ShiftOp;

fn v(var: Var) -> RationalFunction {
    RationalFunction::var(var)
}

fn p(var: Var) -> MultiPoly {
    MultiPoly::var(var)
}

fn c(n: i64) -> RationalFunction {
    RationalFunction::int(n)
}

fn q() -> RationalFunction {
    RationalFunction::var_pow(Var::U, 2)
}

fn frac(num: MultiPoly, den: MultiPoly) -> RationalFunction {
    RationalFunction::ratio(num, den)
}

/// `(t x - y)/(x - y)`.
fn kn_ratio_x() -> RationalFunction {
    frac(&(&p(Var::T) * &p(Var::X)) - &p(Var::Y), &p(Var::X) - &p(Var::Y))
}

/// `(t y - x)/(y - x)`.
fn kn_ratio_y() -> RationalFunction {
    kn_ratio_x().swap_vars(Var::X, Var::Y)
}

/// `1 - (tx-y)/(x-y) T_{q,x}` and its mirror image.
fn kn_plus_parts() -> (ShiftOp, ShiftOp) {
    let px = ShiftOp::identity().sub(&ShiftOp::term(kn_ratio_x(), [1, 0, 0]));
    let py = ShiftOp::identity().sub(&ShiftOp::term(kn_ratio_y(), [0, 1, 0]));
    (px, py)
}

/// `-t T_{q,x}T_{q,y} + (x-ty)/(x-y) T_{q,y}` and its mirror image.
fn kn_minus_parts() -> (ShiftOp, ShiftOp) {
    let tt = ShiftOp::term(-v(Var::T), [1, 1, 0]);
    let rx = frac(&p(Var::X) - &(&p(Var::T) * &p(Var::Y)), &p(Var::X) - &p(Var::Y));
    let ry = rx.swap_vars(Var::X, Var::Y);
    let mx = tt.add(&ShiftOp::term(rx, [0, 1, 0]));
    let my = tt.add(&ShiftOp::term(ry, [1, 0, 0]));
    (mx, my)
}

fn weighted(parts: (ShiftOp, ShiftOp), wx: RationalFunction, wy: RationalFunction) -> ShiftOp {
    parts.0.left_mul(&wx).add(&parts.1.left_mul(&wy))
}

pub fn kn_k1plus() -> ShiftOp {
    weighted(kn_plus_parts(), v(Var::X), v(Var::Y))
}

pub fn kn_k1minus() -> ShiftOp {
    weighted(kn_minus_parts(), v(Var::X), v(Var::Y))
}

pub fn kn_m1plus() -> ShiftOp {
    weighted(kn_plus_parts(), RationalFunction::var_pow(Var::X, -1), RationalFunction::var_pow(Var::Y, -1))
}

pub fn kn_m1minus() -> ShiftOp {
    weighted(kn_minus_parts(), RationalFunction::var_pow(Var::X, -1), RationalFunction::var_pow(Var::Y, -1))
}

pub fn kn_a() -> ShiftOp {
    ShiftOp::tqx(1).compose(&ShiftOp::tqy(1))
}

pub fn kn_omega() -> ShiftOp {
    let rx = kn_ratio_x();
    let ry = frac(&p(Var::X) - &(&p(Var::T) * &p(Var::Y)), &p(Var::X) - &p(Var::Y));
    let inner = ShiftOp::identity()
        .sub(&ShiftOp::term(rx, [1, 0, 0]))
        .sub(&ShiftOp::term(ry, [0, 1, 0]))
        .add(&ShiftOp::term(v(Var::T), [1, 1, 0]));
    inner.left_mul(&frac(MultiPoly::one(), &p(Var::X) * &p(Var::Y)))
}

fn euler() -> DiffOp {
    DiffOp::multiplication(v(Var::X))
        .compose(&DiffOp::partial(Var::X, 1))
        .add(&DiffOp::multiplication(v(Var::Y)).compose(&DiffOp::partial(Var::Y, 1)))
}

fn square_euler() -> DiffOp {
    DiffOp::multiplication(&v(Var::X) * &v(Var::X))
        .compose(&DiffOp::partial(Var::X, 1))
        .add(&DiffOp::multiplication(&v(Var::Y) * &v(Var::Y)).compose(&DiffOp::partial(Var::Y, 1)))
}

fn x_plus_y() -> RationalFunction {
    &v(Var::X) + &v(Var::Y)
}

/// `H = 2(x∂_x + y∂_y + λ)`.
pub fn sl2_h() -> DiffOp {
    euler().add(&DiffOp::multiplication(v(Var::Lambda))).scale(&rat(2, 1))
}

/// `E = x²∂_x + y²∂_y + λ(x+y)`.
pub fn sl2_e() -> DiffOp {
    square_euler().add(&DiffOp::multiplication(&v(Var::Lambda) * &x_plus_y()))
}

/// `F = -(∂_x + ∂_y)`.
pub fn sl2_f() -> DiffOp {
    fsd_minus().neg()
}

/// `∂_x + ∂_y`.
pub fn fsd_minus() -> DiffOp {
    DiffOp::partial(Var::X, 1).add(&DiffOp::partial(Var::Y, 1))
}

/// `x²∂_x + y²∂_y + (γ+½)(x+y)`.
pub fn fsd_plus() -> DiffOp {
    square_euler().add(&DiffOp::multiplication(&gamma_half() * &x_plus_y()))
}

/// `x∂_x + y∂_y`.
pub fn fsd_zero() -> DiffOp {
    euler()
}

fn gamma_half() -> RationalFunction {
    &v(Var::Gamma) + &RationalFunction::constant(rat(1, 2))
}

/// `¼(∂_ξξ + ξ∂_ξη + η∂_ηη + (γ+3/2)∂_η)`.
pub fn bc2_d_minus() -> DiffOp {
    let dxixi = DiffOp::partial(Var::Xi, 2);
    let dxieta = DiffOp::multiplication(v(Var::Xi)).compose(&DiffOp::partial(Var::Xi, 1).compose(&DiffOp::partial(Var::Eta, 1)));
    let detaeta = DiffOp::multiplication(v(Var::Eta)).compose(&DiffOp::partial(Var::Eta, 2));
    let deta = DiffOp::multiplication(&v(Var::Gamma) + &RationalFunction::constant(rat(3, 2)))
        .compose(&DiffOp::partial(Var::Eta, 1));
    dxixi.add(&dxieta).add(&detaeta).add(&deta).scale(&rat(1, 4))
}

/// `D₋D₀ - 3D₀² + 2D₊D₀ + (α+γ+½)D₋`, shared by both BC₂ ladder operators.
fn bc2_ladder_common() -> DiffOp {
    let (dm, dp, d0) = (fsd_minus(), fsd_plus(), fsd_zero());
    let agh = &v(Var::Alpha) + &gamma_half();
    dm.compose(&d0)
        .sub(&d0.compose(&d0).scale(&rat(3, 1)))
        .add(&dp.compose(&d0).scale(&rat(2, 1)))
        .add(&dm.left_mul(&agh))
}

/// `D₊ - γ - ½`.
fn shifted_plus() -> DiffOp {
    fsd_plus().sub(&DiffOp::multiplication(gamma_half()))
}

/// Lowering operator for `R_{n,0}` in the `(x, y)` chart (with `β = α`).
pub fn bc2_lowering_410(n: i64) -> DiffOp {
    // + 2(n - 2γ - ½)D₀ - 2n(D₊ - γ - ½)
    let k0 = &(&c(2 * n) - &v(Var::Gamma).scale(&rat(4, 1))) - &c(1);
    bc2_ladder_common()
        .add(&fsd_zero().left_mul(&k0))
        .sub(&shifted_plus().scale(&rat(2 * n, 1)))
}

/// Raising operator for `R_{n,0}` in the `(x, y)` chart (with `β = α`).
pub fn bc2_raising_411(n: i64) -> DiffOp {
    // - 2(n + 2α + 4γ + 5/2)D₀ + 2(n + 2α + 2γ + 2)(D₊ - γ - ½)
    let k0 = &(&(&c(2 * n) + &v(Var::Alpha).scale(&rat(4, 1))) + &v(Var::Gamma).scale(&rat(8, 1))) + &c(5);
    let kp = &(&(&c(2 * n) + &v(Var::Alpha).scale(&rat(4, 1))) + &v(Var::Gamma).scale(&rat(4, 1))) + &c(4);
    bc2_ladder_common()
        .sub(&fsd_zero().left_mul(&k0))
        .add(&shifted_plus().left_mul(&kp))
}

/// The z-chart ladder operators acting on `C_n[z]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZLadder {
    /// First raising form.
    Raise1,
    /// Second raising form.
    Raise2,
    /// First lowering form.
    Lower1,
    /// Second lowering form.
    Lower2,
    /// Second-order q-difference operator annihilating `C_n[z]`.
    Difference,
}

impl ZLadder {
    pub const ALL: [ZLadder; 5] = [
        ZLadder::Raise1,
        ZLadder::Raise2,
        ZLadder::Lower1,
        ZLadder::Lower2,
        ZLadder::Difference,
    ];

    /// Registry identifier of the identity the operator appears in.
    pub fn id(self) -> &'static str {
        match self {
            ZLadder::Raise1 => "6.04",
            ZLadder::Raise2 => "6.05",
            ZLadder::Lower1 => "6.06",
            ZLadder::Lower2 => "6.07",
            ZLadder::Difference => "6.08",
        }
    }

    pub fn from_id(id: &str) -> Option<ZLadder> {
        ZLadder::ALL.into_iter().find(|z| z.id() == id)
    }

    /// Index shift of the right-hand side: `+1`, `-1`, or `None` for the
    /// annihilating operator.
    pub fn step(self) -> Option<i64> {
        match self {
            ZLadder::Raise1 | ZLadder::Raise2 => Some(1),
            ZLadder::Lower1 | ZLadder::Lower2 => Some(-1),
            ZLadder::Difference => None,
        }
    }
}

fn zpow(e: i16) -> MultiPoly {
    MultiPoly::var_pow(Var::Z, e)
}

/// `u^e` as a rational function.
pub(crate) fn upow(e: i64) -> RationalFunction {
    RationalFunction::var_pow(Var::U, e as i16)
}

/// The left-hand operator of the z-chart identity for `C_n[z]`.
pub fn z_ladder_lhs(variant: ZLadder, n: i64) -> ShiftOp {
    let t = p(Var::T);
    let one = MultiPoly::one();
    let zz = &zpow(1) - &zpow(-1);
    let r = RationalFunction::from_poly(&zpow(1) + &zpow(-1));
    let over = |num: MultiPoly| frac(num, zz.clone());
    let t_z2 = &t * &zpow(2);
    let t_zm2 = &t * &zpow(-2);
    let (plus, minus, mult) = match variant {
        ZLadder::Raise1 => (
            -over(&t_z2 - &one),
            over(&t_zm2 - &one),
            &upow(-n) * &r,
        ),
        ZLadder::Raise2 => (
            -over(&zpow(-2) - &t),
            over(&zpow(2) - &t),
            -(&(&upow(n) * &v(Var::T)) * &r),
        ),
        ZLadder::Lower1 => (
            -over(&t - &zpow(-2)),
            over(&t - &zpow(2)),
            &upow(-n) * &r,
        ),
        ZLadder::Lower2 => (
            -over(&one - &t_z2),
            over(&one - &t_zm2),
            -(&(&upow(n) * &v(Var::T)) * &r),
        ),
        ZLadder::Difference => (
            frac(&one - &t_z2, &one - &zpow(2)),
            frac(&one - &t_zm2, &one - &zpow(-2)),
            -(&upow(-n) + &(&upow(n) * &v(Var::T))),
        ),
    };
    ShiftOp::term(plus, [0, 0, 1])
        .add(&ShiftOp::term(minus, [0, 0, -1]))
        .add(&ShiftOp::multiplication(mult))
}

/// Right-hand factor of the z-chart identity: the coefficient of
/// `C_{n±1}[z]` (zero for the annihilating operator).
pub fn z_ladder_rhs_factor(variant: ZLadder, n: i64) -> RationalFunction {
    match variant {
        ZLadder::Raise1 | ZLadder::Raise2 => &upow(-n) - &upow(n + 2),
        ZLadder::Lower1 | ZLadder::Lower2 => &upow(-n) - &(&(&v(Var::T) * &v(Var::T)) * &upow(n - 2)),
        ZLadder::Difference => RationalFunction::zero(),
    }
}

/// `q` as a rational function in `u`.
pub fn q_rf() -> RationalFunction {
    q()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bc2_r_with, chart_inverse_rf, cq_ultra_z, macdonald_j_n0};
    use crate::qseries::ParamAffine;

    fn j(n: u32) -> RationalFunction {
        RationalFunction::from_poly(macdonald_j_n0(n))
    }

    #[test]
    fn sl2_commutators() {
        let (h, e, f) = (sl2_h(), sl2_e(), sl2_f());
        assert_eq!(h.commutator(&e), e.scale(&rat(2, 1)));
        assert_eq!(h.commutator(&f), f.scale(&rat(-2, 1)));
        assert_eq!(e.commutator(&f), h);
    }

    #[test]
    fn kn_differences_are_multiples_of_omega() {
        let xy = &v(Var::X) * &v(Var::Y);
        let k = kn_k1plus().sub(&kn_k1minus());
        assert_eq!(k, kn_omega().left_mul(&(&xy * &x_plus_y())));
        let m = kn_m1plus().sub(&kn_m1minus());
        assert_eq!(m, kn_omega().left_mul(&x_plus_y()));
    }

    #[test]
    fn m1plus_on_j1() {
        // (1-q)(1-t^2)
        let expect = &(&c(1) - &q()) * &(&c(1) - &(&v(Var::T) * &v(Var::T)));
        assert_eq!(kn_m1plus().apply(&j(1)), expect);
    }

    #[test]
    fn omega_annihilates_j() {
        for n in 0..=5 {
            assert!(kn_omega().apply(&j(n)).is_zero(), "n={n}");
        }
    }

    #[test]
    fn raising_on_j() {
        for n in 0..=4 {
            assert_eq!(kn_k1plus().apply(&j(n)), j(n + 1), "K+ n={n}");
            assert_eq!(kn_k1minus().apply(&j(n)), j(n + 1), "K- n={n}");
        }
    }

    #[test]
    fn fsd_minus_on_z10() {
        assert_eq!(fsd_minus().apply(&x_plus_y()), c(2));
    }

    #[test]
    fn lowering_410_at_one() {
        let f = &c(1) - &x_plus_y();
        let expect = (&v(Var::Alpha) + &c(1)).scale(&rat(-2, 1));
        assert_eq!(bc2_lowering_410(1).apply(&f), expect);
    }

    #[test]
    fn ladder_410_411_low_degree() {
        let a = ParamAffine::param(Var::Alpha);
        let g = ParamAffine::param(Var::Gamma);
        let r = |n: u32| chart_inverse_rf(&bc2_r_with(n, 0, &a, &a, &g).unwrap());
        for n in 1..=3i64 {
            let nn = v(Var::Alpha).scale(&rat(2, 1));
            let lam = &c(n) * &(&c(n + 1) + &nn);
            let lhs = bc2_lowering_410(n).apply(&r(n as u32));
            assert_eq!(lhs, -(&lam * &r(n as u32 - 1)), "4.10 n={n}");
        }
    }

    #[test]
    fn z_ladder_raise_and_difference() {
        for n in 0..=4i64 {
            let cn = cq_ultra_z(n as u32);
            let cn1 = cq_ultra_z(n as u32 + 1);
            for zl in [ZLadder::Raise1, ZLadder::Raise2] {
                let lhs = z_ladder_lhs(zl, n).apply(&cn);
                assert_eq!(lhs, &z_ladder_rhs_factor(zl, n) * &cn1, "{} n={n}", zl.id());
            }
            assert!(z_ladder_lhs(ZLadder::Difference, n).apply(&cn).is_zero());
        }
    }
}
