//! Numeric counterparts of the registered identities. Each one evaluates
//! both sides at a sample point straight from the formulas: families come
//! from the float recurrences, differential operators act through jet
//! derivatives and shift operators through closures over point functions.

use std::f64::consts::PI;
use std::rc::Rc;

use num_complex::Complex64;

use super::jet::Jet;
use super::special::{
    bc2_r, bc2_r_n0, factorial, gegenbauer, homogenize, jack_z, jacobi_p, jacobi_r, macdonald_j, poch, qultra,
};
use super::{guard, NumError, NumericSample};

type C = Complex64;
type Res<T> = Result<T, NumError>;
pub(crate) type Pairs = Vec<(C, C)>;
pub(crate) type Shadow = fn(i64, i64, &NumericSample, bool) -> Res<Pairs>;

fn cr(v: f64) -> C {
    C::new(v, 0.0)
}

fn pick<T>(mutate: bool, exact: T, perturbed: T) -> T {
    if mutate {
        perturbed
    } else {
        exact
    }
}

fn un(n: i64) -> u32 {
    n as u32
}

// ---------------------------------------------------------------------------
// shift operators on point functions

type Fxy = Rc<dyn Fn(C, C) -> Res<C>>;

#[derive(Clone, Copy)]
struct Kn {
    t: f64,
    q: f64,
}

/// `(a x - y)/(x - y)` with the pole guarded.
fn kn_frac(num: C, x: C, y: C) -> Res<C> {
    let d = guard(x - y, x.norm() + y.norm(), "x - y")?;
    Ok(num / d)
}

fn k_plus(f: &Fxy, kn: Kn, w: fn(C) -> C) -> Fxy {
    let f = f.clone();
    Rc::new(move |x, y| {
        let (t, q) = (kn.t, kn.q);
        let fx = f(x, y)?;
        let a = fx - kn_frac(t * x - y, x, y)? * f(q * x, y)?;
        let b = fx - kn_frac(t * y - x, y, x)? * f(x, q * y)?;
        Ok(w(x) * a + w(y) * b)
    })
}

fn k_minus(f: &Fxy, kn: Kn, w: fn(C) -> C) -> Fxy {
    let f = f.clone();
    Rc::new(move |x, y| {
        let (t, q) = (kn.t, kn.q);
        let both = f(q * x, q * y)?;
        let a = -t * both + kn_frac(x - t * y, x, y)? * f(x, q * y)?;
        let b = -t * both + kn_frac(y - t * x, y, x)? * f(q * x, y)?;
        Ok(w(x) * a + w(y) * b)
    })
}

fn ident(v: C) -> C {
    v
}

fn inv(v: C) -> C {
    cr(1.0) / v
}

fn omega(f: &Fxy, kn: Kn) -> Fxy {
    let f = f.clone();
    Rc::new(move |x, y| {
        let (t, q) = (kn.t, kn.q);
        let s = f(x, y)? - kn_frac(t * x - y, x, y)? * f(q * x, y)? - kn_frac(x - t * y, x, y)? * f(x, q * y)?
            + t * f(q * x, q * y)?;
        Ok(s / (x * y))
    })
}

fn a_op(f: &Fxy, kn: Kn) -> Fxy {
    let f = f.clone();
    Rc::new(move |x, y| f(kn.q * x, kn.q * y))
}

fn kn_of(s: &NumericSample) -> Kn {
    Kn { t: s.t, q: s.q() }
}

fn j_fun(n: i64, kn: Kn) -> Fxy {
    Rc::new(move |x, y| {
        if n < 0 {
            return Ok(cr(0.0));
        }
        Ok(macdonald_j(un(n), kn.t, kn.q, &Jet::constant(x, 0), &Jet::constant(y, 0)).value())
    })
}

/// A general polynomial of degree 4 with the sample's coefficients.
fn test_poly(s: &NumericSample) -> Fxy {
    let c = s.coeffs.clone();
    Rc::new(move |x, y| {
        let mut acc = cr(0.0);
        let mut idx = 0;
        for d in 0..=4 {
            for j in 0..=d {
                acc += c[idx] * x.powi(d - j) * y.powi(j);
                idx += 1;
            }
        }
        Ok(acc)
    })
}

fn point(s: &NumericSample) -> (C, C) {
    (cr(s.x), cr(s.y))
}

fn kn_raise(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let kn = kn_of(s);
    let (x, y) = point(s);
    let j = j_fun(n, kn);
    let rhs = j_fun(n + 1, kn)(x, y)? * pick(m, 1.0, kn.q);
    Ok(vec![
        (k_plus(&j, kn, ident)(x, y)?, rhs),
        (k_minus(&j, kn, ident)(x, y)?, rhs),
    ])
}

fn kn_lower(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let kn = kn_of(s);
    let (x, y) = point(s);
    let (t, q) = (kn.t, kn.q);
    let second = pick(m, q.powi(n as i32 - 1), q.powi(n as i32));
    let k = (1.0 - q.powi(n as i32)) * (1.0 - t * t * second);
    let j = j_fun(n, kn);
    let rhs = j_fun(n - 1, kn)(x, y)? * k;
    Ok(vec![
        (k_plus(&j, kn, inv)(x, y)?, rhs),
        (k_minus(&j, kn, inv)(x, y)?, rhs),
    ])
}

fn omega_kernel(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let kn = kn_of(s);
    let (x, y) = point(s);
    let j = j_fun(n, kn);
    let lhs = omega(&j, kn)(x, y)?;
    let rhs = pick(m, cr(0.0), j(x, y)?);
    Ok(vec![(lhs, rhs)])
}

fn kn_structural(_n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let kn = kn_of(s);
    let (x, y) = point(s);
    let f = test_poly(s);
    let om = omega(&f, kn)(x, y)?;
    let w = pick(m, x * y * (x + y), x * y * (x + y) * x);
    Ok(vec![
        (k_plus(&f, kn, ident)(x, y)? - k_minus(&f, kn, ident)(x, y)?, w * om),
        (k_plus(&f, kn, inv)(x, y)? - k_minus(&f, kn, inv)(x, y)?, (x + y) * om),
    ])
}

fn kn_relations(_n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let kn = kn_of(s);
    let (q, t) = (kn.q, kn.t);
    let (x, y) = point(s);
    let f = test_poly(s);
    let kp = |g: &Fxy| k_plus(g, kn, ident);
    let mp = |g: &Fxy| k_plus(g, kn, inv);
    let om = |g: &Fxy| omega(g, kn);
    let a = |g: &Fxy| a_op(g, kn);
    let q2 = q * q;
    let quad = x * x + x * y + y * y;
    let heis = (q2 - 1.0) * f(x, y)? + (1.0 - q) * (q + t * t) * a(&f)(x, y)? + (q2 - 1.0) * quad * om(&f)(x, y)?;
    Ok(vec![
        (a(&om(&f))(x, y)?, om(&a(&f))(x, y)? / q2),
        (a(&kp(&f))(x, y)?, kp(&a(&f))(x, y)? * pick(m, q, q2)),
        (a(&mp(&f))(x, y)?, mp(&a(&f))(x, y)? / q),
        (
            om(&kp(&f))(x, y)?,
            kp(&om(&f))(x, y)? * q2 + (1.0 - q2) * (x + y) * om(&f)(x, y)?,
        ),
        (om(&mp(&f))(x, y)?, mp(&om(&f))(x, y)?),
        (kp(&mp(&f))(x, y)? * q2 - mp(&kp(&f))(x, y)?, heis),
    ])
}

fn kn_subspace(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let kn = kn_of(s);
    let (q, t) = (kn.q, kn.t);
    let (x, y) = point(s);
    let f = j_fun(n, kn);
    let kp = |g: &Fxy| k_plus(g, kn, ident);
    let mp = |g: &Fxy| k_plus(g, kn, inv);
    let a = |g: &Fxy| a_op(g, kn);
    let q2 = q * q;
    let c0 = pick(m, q2 - 1.0, q2 + 1.0);
    Ok(vec![
        (
            kp(&mp(&f))(x, y)? * q2 - mp(&kp(&f))(x, y)?,
            c0 * f(x, y)? + (1.0 - q) * (q + t * t) * a(&f)(x, y)?,
        ),
        (a(&kp(&f))(x, y)?, kp(&a(&f))(x, y)? * q),
        (a(&mp(&f))(x, y)?, mp(&a(&f))(x, y)? / q),
    ])
}

// ---------------------------------------------------------------------------
// z-chart q-difference identities

type Fz = Rc<dyn Fn(C) -> C>;

fn cz(n: i64, s: &NumericSample) -> Fz {
    let (t, q) = (s.t, s.q());
    Rc::new(move |z: C| {
        if n < 0 {
            return cr(0.0);
        }
        qultra(un(n), t, q, &Jet::constant((z + z.inv()) * 0.5, 0)).value()
    })
}

/// Left side of the z-chart identity with the given ladder id.
fn z_lhs(id: &str, n: i64, s: &NumericSample, f: &Fz, z: C) -> C {
    let (t, u) = (s.t, s.u());
    let zz = z - z.inv();
    let r = z + z.inv();
    let (z2, zm2) = (z * z, (z * z).inv());
    let up = f(z * u);
    let dn = f(z / u);
    let (un_, upn) = (u.powi(-(n as i32)), u.powi(n as i32));
    match id {
        "6.04" => -(t * z2 - 1.0) / zz * up + (t * zm2 - 1.0) / zz * dn + un_ * r * f(z),
        "6.05" => -(zm2 - t) / zz * up + (z2 - t) / zz * dn - upn * t * r * f(z),
        "6.06" => -(t - zm2) / zz * up + (t - z2) / zz * dn + un_ * r * f(z),
        "6.07" => -(1.0 - t * z2) / zz * up + (1.0 - t * zm2) / zz * dn - upn * t * r * f(z),
        "6.08" => (1.0 - t * z2) / (1.0 - z2) * up + (1.0 - t * zm2) / (1.0 - zm2) * dn - (un_ + upn * t) * f(z),
        _ => unreachable!("not a z-chart ladder id: {id}"),
    }
}

fn unit_z(s: &NumericSample) -> Res<C> {
    let z = C::from_polar(1.0, s.theta);
    guard(z - z.inv(), 2.0, "z - 1/z")?;
    Ok(z)
}

fn z_ladder(id: &'static str, n: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let z = unit_z(s)?;
    let (t, u) = (s.t, s.u());
    let f = cz(n, s);
    let lhs = z_lhs(id, n, s, &f, z);
    let ni = n as i32;
    let rhs = match id {
        "6.04" | "6.05" => (u.powi(-ni) - pick(m, u.powi(ni + 2), u.powi(ni + 4))) * cz(n + 1, s)(z),
        "6.06" | "6.07" => (u.powi(-ni) - t * t * pick(m, u.powi(ni - 2), u.powi(ni))) * cz(n - 1, s)(z),
        _ => pick(m, cr(0.0), f(z)),
    };
    Ok(vec![(lhs, rhs)])
}

fn z604(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    z_ladder("6.04", n, s, m)
}

fn z605(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    z_ladder("6.05", n, s, m)
}

fn z606(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    z_ladder("6.06", n, s, m)
}

fn z607(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    z_ladder("6.07", n, s, m)
}

fn z608(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    z_ladder("6.08", n, s, m)
}

fn z_equivalence(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let z = unit_z(s)?;
    let c = s.coeffs.clone();
    // a generic Laurent polynomial
    let f: Fz = Rc::new(move |z: C| (0..7).map(|j| c[j] * z.powi(j as i32 - 3)).sum());
    let l = |id| z_lhs(id, n, s, &f, z);
    let r = z + z.inv();
    let diff = pick(m, -r, r) * l("6.08");
    Ok(vec![(l("6.04") - l("6.05"), diff), (l("6.06") - l("6.07"), diff)])
}

// ---------------------------------------------------------------------------
// one-variable charts

fn sx(s: &NumericSample, order: usize) -> Jet {
    Jet::seed(cr(s.s), 0, order)
}

fn d1(f: &Jet) -> C {
    f.partial(1, 0)
}

fn d2(f: &Jet) -> C {
    f.partial(2, 0)
}

fn geg(n: i64, l: f64, x: &Jet) -> Jet {
    if n < 0 {
        return Jet::real(0.0, x.order());
    }
    gegenbauer(un(n), l, x)
}

fn lower_factor(n: i64, l: f64, m: bool) -> f64 {
    n as f64 + 2.0 * l - pick(m, 1.0, 0.0)
}

fn case_2_06(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let x = sx(s, 1);
    let c = geg(n, s.lambda, &x);
    let xv = cr(s.s);
    let lhs = (1.0 - xv * xv) * d1(&c) + n as f64 * xv * c.value();
    Ok(vec![(lhs, lower_factor(n, s.lambda, m) * geg(n - 1, s.lambda, &x).value())])
}

fn case_2_07(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let x = sx(s, 1);
    let c = geg(n - 1, s.lambda, &x);
    let xv = cr(s.s);
    let lhs = (1.0 - xv * xv) * d1(&c) - (n as f64 - 1.0 + 2.0 * s.lambda) * xv * c.value();
    Ok(vec![(lhs, -(pick(m, n, n + 1) as f64) * geg(n, s.lambda, &x).value())])
}

/// `(1+x²)^{p} C_n(x/√(1+x²))`.
fn tan_form(n: i64, p: f64, l: f64, x: &Jet) -> Jet {
    let k = &(x * x) + 1.0;
    &k.powf(p) * &geg(n, l, &(x / &k.sqrt()))
}

fn case_2_01(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let x = sx(s, 1);
    let l = s.lambda;
    let lhs = d1(&tan_form(n, n as f64 / 2.0, l, &x));
    Ok(vec![(lhs, lower_factor(n, l, m) * tan_form(n - 1, (n - 1) as f64 / 2.0, l, &x).value())])
}

fn case_2_02(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let x = sx(s, 1);
    let l = s.lambda;
    let lhs = d1(&tan_form(n - 1, -((n - 1) as f64) / 2.0 - l, l, &x));
    let rhs = -(pick(m, n, n + 1) as f64) * tan_form(n, -(n as f64) / 2.0 - l, l, &x).value();
    Ok(vec![(lhs, rhs)])
}

fn case_2_03(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let x = sx(s, n as usize);
    let l = s.lambda;
    let f = (&(&x * &x) + 1.0).powf(-l);
    let lhs = f.partial(n as usize, 0);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let rhs = sign * factorial(un(pick(m, n, n + 1))) * tan_form(n, -(n as f64) / 2.0 - l, l, &x).value();
    Ok(vec![(lhs, rhs)])
}

fn genfun_taylor(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let l = s.lambda;
    let z = Jet::seed(cr(0.0), 0, n as usize);
    let xz = &z * -1.0 + s.s;
    let f = (&(&xz * &xz) + 1.0).powf(-l);
    let lhs = f.partial(n as usize, 0) / factorial(un(pick(m, n, n + 1)));
    let rhs = tan_form(n, -(n as f64) / 2.0 - l, l, &Jet::real(s.s, 0)).value();
    Ok(vec![(lhs, rhs)])
}

fn jp(n: i64, a: f64, b: f64, x: &Jet) -> Jet {
    if n < 0 {
        return Jet::real(0.0, x.order());
    }
    jacobi_p(un(n), a, b, x)
}

fn case_1_04(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let p = jp(n, a, b, &sx(s, 2));
    let x = s.s;
    let eig = n as f64 * (n as f64 + a + b + pick(m, 1.0, 2.0));
    let lhs = (1.0 - x * x) * d2(&p) + (b - a - (a + b + 2.0) * x) * d1(&p) + eig * p.value();
    Ok(vec![(lhs, cr(0.0))])
}

/// `(1+x²)^{p} P_n((1-x²)/(1+x²))`.
fn rational_form(n: i64, p: f64, a: f64, b: f64, x: &Jet) -> Jet {
    let k = &(x * x) + 1.0;
    let arg = &(&(x * x) * -1.0 + 1.0) / &k;
    &k.powf(p) * &jp(n, a, b, &arg)
}

fn bessel_like(f: &Jet, a: f64, x: f64) -> C {
    d2(f) + (2.0 * a + 1.0) / x * d1(f)
}

fn case_1_01(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let x = sx(s, 2);
    let lhs = bessel_like(&rational_form(n, n as f64, a, b, &x), a, s.s);
    let k = -4.0 * (n as f64 + a) * (pick(m, n, n + 1) as f64 + b);
    Ok(vec![(lhs, k * rational_form(n - 1, (n - 1) as f64, a, b, &x).value())])
}

fn case_1_06(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let x = sx(s, 2);
    let nf = n as f64;
    let lhs = bessel_like(&rational_form(n - 1, -nf - a - b, a, b, &x), a, s.s);
    let k = -4.0 * pick(m, nf, nf + 1.0) * (nf + a + b);
    Ok(vec![(lhs, k * rational_form(n, -nf - a - b - 1.0, a, b, &x).value())])
}

fn case_1_05(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let x = sx(s, 1);
    let xv = s.s;
    let nf = n as f64;
    let nab = 2.0 * nf + a + b;
    let p = jp(n, a, b, &x);
    let lhs = nab * (1.0 - xv * xv) * d1(&p) + nf * (nab * xv + b - a) * p.value();
    let k = 2.0 * (nf + a) * (pick(m, nf, nf + 1.0) + b);
    Ok(vec![(lhs, k * jp(n - 1, a, b, &x).value())])
}

fn case_1_09(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let x = sx(s, 1);
    let xv = s.s;
    let nf = n as f64;
    let nab = 2.0 * nf + a + b;
    let p = jp(n - 1, a, b, &x);
    let lhs = nab * (1.0 - xv * xv) * d1(&p) - (nf + a + b) * (nab * xv + a - b) * p.value();
    let k = -2.0 * pick(m, nf, nf + 1.0) * (nf + a + b);
    Ok(vec![(lhs, k * jp(n, a, b, &x).value())])
}

fn case_1_03(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let x = sx(s, 2);
    let xv = s.s;
    let nf = n as f64;
    let p = jp(n, a, b, &x);
    let lhs = (1.0 + xv) * (1.0 - xv * xv) * d2(&p)
        + 2.0 * (1.0 + xv) * ((nf - 1.0) * xv - (nf + a)) * d1(&p)
        + nf * (-(nf - 1.0) * xv + nf + 1.0 + 2.0 * a) * p.value();
    let k = -2.0 * (nf + a) * (pick(m, nf, nf + 1.0) + b);
    Ok(vec![(lhs, k * jp(n - 1, a, b, &x).value())])
}

fn case_1_08(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let x = sx(s, 2);
    let xv = s.s;
    let nf = n as f64;
    let p = jp(n - 1, a, b, &x);
    let top = (nf + 1.0 + a + b) * xv;
    let lhs = (1.0 + xv) * (1.0 - xv * xv) * d2(&p)
        + 2.0 * (1.0 + xv) * (nf + b - top) * d1(&p)
        + (nf + a + b) * (nf - 1.0 - a + b - top) * p.value();
    let k = -2.0 * pick(m, nf, nf + 1.0) * (nf + a + b);
    Ok(vec![(lhs, k * jp(n, a, b, &x).value())])
}

fn case_1_11(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let lhs = jp(n, a, b, &Jet::real(-s.s, 0)).value();
    let sign = if (n + pick(m, 0, 1)) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(vec![(lhs, sign * jp(n, b, a, &Jet::real(s.s, 0)).value())])
}

fn qt_even(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let l = s.lambda;
    let x = s.s;
    let un = un(n);
    let lhs = gegenbauer(2 * un, l, &Jet::real(x, 0)).value();
    let pre = poch(l, un + pick(m, 0, 1)) / poch(0.5, un);
    let rhs = pre * jacobi_p(un, l - 0.5, -0.5, &Jet::real(2.0 * x * x - 1.0, 0)).value();
    Ok(vec![(lhs, rhs)])
}

fn qt_odd(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let l = s.lambda;
    let x = s.s;
    let un = un(n);
    let lhs = gegenbauer(2 * un + 1, l, &Jet::real(x, 0)).value();
    let pre = poch(l, un + 1 + pick(m, 0, 1)) / poch(0.5, un + 1);
    let rhs = pre * x * jacobi_p(un, l - 0.5, 0.5, &Jet::real(2.0 * x * x - 1.0, 0)).value();
    Ok(vec![(lhs, rhs)])
}

fn raa(n: i64, a: f64, x: &Jet) -> Jet {
    if n < 0 {
        return Jet::real(0.0, x.order());
    }
    jacobi_r(un(n), a, a, x)
}

fn eig_aa(n: i64, a: f64, m: bool) -> f64 {
    n as f64 * (n as f64 + pick(m, 1.0, 2.0) + 2.0 * a)
}

fn case_4_01(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let a = s.alpha;
    let x = sx(s, 1);
    let xv = s.s;
    let r = raa(n, a, &x);
    let lhs = (1.0 - xv * xv) * d1(&r) + n as f64 * xv * r.value();
    Ok(vec![(lhs, pick(m, n, n + 1) as f64 * raa(n - 1, a, &x).value())])
}

fn case_4_02(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let a = s.alpha;
    let x = sx(s, 1);
    let xv = s.s;
    let r = raa(n, a, &x);
    let f = n as f64 + 1.0 + 2.0 * a;
    let lhs = f * ((1.0 - xv * xv) * d1(&r) + n as f64 * xv * r.value());
    Ok(vec![(lhs, eig_aa(n, a, m) * raa(n - 1, a, &x).value())])
}

fn case_4_03(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let a = s.alpha;
    let x = sx(s, 2);
    let xv = s.s;
    let r = raa(n, a, &x);
    let lhs = (1.0 - xv * xv) * d2(&r) - 2.0 * (a + 1.0) * xv * d1(&r);
    Ok(vec![(lhs, -eig_aa(n, a, m) * r.value())])
}

fn case_4_05(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let a = s.alpha;
    let x = sx(s, 2);
    let xv = s.s;
    let arg = &(&x * -2.0) + 1.0;
    let f = raa(n, a, &arg);
    let nm = 2.0 * (n as f64 - 1.0);
    let lhs = xv * (1.0 - xv) * (1.0 - 2.0 * xv) * d2(&f) + (a + 1.0 + nm * xv - nm * xv * xv) * d1(&f);
    Ok(vec![(lhs, -eig_aa(n, a, m) * raa(n - 1, a, &arg).value())])
}

// ---------------------------------------------------------------------------
// two-variable charts

fn xy_jets(s: &NumericSample, order: usize) -> (Jet, Jet) {
    (Jet::seed(cr(s.x), 0, order), Jet::seed(cr(s.y), 1, order))
}

fn fsum(f: &Jet) -> Jet {
    &f.derivative(0) + &f.derivative(1)
}

/// `x ∂_x + y ∂_y`.
fn euler(f: &Jet, x: &Jet, y: &Jet) -> Jet {
    &(x * &f.derivative(0)) + &(y * &f.derivative(1))
}

/// `x² ∂_x + y² ∂_y + c (x + y)`.
fn sq_euler(f: &Jet, x: &Jet, y: &Jet, c: f64) -> Jet {
    let s = &(&(x * x) * &f.derivative(0)) + &(&(y * y) * &f.derivative(1));
    &s + &(&(&(x + y) * f) * c)
}

fn homog_geg(n: i64, l: f64, x: &Jet, y: &Jet) -> Jet {
    if n < 0 {
        return Jet::real(0.0, x.order());
    }
    homogenize(un(n), x, y, |s| gegenbauer(un(n), l, s))
}

fn case_2_10(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let l = s.lambda;
    let (x, y) = xy_jets(s, 1);
    let lhs = fsum(&homog_geg(n, l, &x, &y)).value();
    Ok(vec![(lhs, lower_factor(n, l, m) * homog_geg(n - 1, l, &x, &y).value())])
}

fn case_2_11(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let l = s.lambda;
    let (x, y) = xy_jets(s, 1);
    let lhs = sq_euler(&homog_geg(n - 1, l, &x, &y), &x, &y, l).value();
    Ok(vec![(lhs, pick(m, n, n + 1) as f64 * homog_geg(n, l, &x, &y).value())])
}

fn case_2_16(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let l = s.lambda;
    let (x, y) = xy_jets(s, n as usize);
    let mut f = Jet::real(1.0, n as usize);
    for _ in 0..n {
        f = sq_euler(&f, &x, &y, l);
    }
    let lhs = f.value() / factorial(un(pick(m, n, n + 1)));
    Ok(vec![(lhs, homog_geg(n, l, &Jet::real(s.x, 0), &Jet::real(s.y, 0)).value())])
}

fn poly_jet(s: &NumericSample, x: &Jet, y: &Jet) -> Jet {
    let mut acc = Jet::real(0.0, x.order());
    let mut idx = 0;
    for d in 0..=4 {
        for j in 0..=d {
            acc = &acc + &(&(&x.powi(d - j) * &y.powi(j)) * s.coeffs[idx as usize]);
            idx += 1;
        }
    }
    acc
}

fn sl2(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let l = s.lambda;
    let (x, y) = xy_jets(s, 2);
    let h = |f: &Jet| &(&euler(f, &x, &y) + &(f * l)) * 2.0;
    let e = |f: &Jet| sq_euler(f, &x, &y, l);
    let f_op = |f: &Jet| -fsum(f);
    let g = poly_jet(s, &x, &y);
    let two = pick(m, 2.0, 3.0);
    let fn_ = homog_geg(n, l, &x, &y);
    let fm = homog_geg(n - 1, l, &x, &y);
    let nf = n as f64;
    Ok(vec![
        ((&h(&e(&g)) - &e(&h(&g))).value(), two * e(&g).value()),
        ((&h(&f_op(&g)) - &f_op(&h(&g))).value(), -2.0 * f_op(&g).value()),
        ((&e(&f_op(&g)) - &f_op(&e(&g))).value(), h(&g).value()),
        (f_op(&fn_).value(), -(nf + 2.0 * l - 1.0) * fm.value()),
        (e(&fm).value(), nf * fn_.value()),
        (h(&fn_).value(), 2.0 * (nf + l) * fn_.value()),
    ])
}

/// `(zw)^n P_n((z/w + w/z)/2)`.
fn jacobi_homog(n: i64, a: f64, b: f64, z: &Jet, w: &Jet) -> Jet {
    let arg = &(&(z / w) + &(w / z)) * 0.5;
    &(z * w).powi(n as i32) * &jp(n, a, b, &arg)
}

fn zw_jets(s: &NumericSample, order: usize) -> (Jet, Jet) {
    (Jet::seed(cr(s.x), 0, order), Jet::seed(cr(s.w), 1, order))
}

fn case_1_12(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let (z, w) = zw_jets(s, 2);
    let f = jacobi_homog(n, a, b, &z, &w);
    let sf = fsum(&f);
    let lhs = fsum(&sf).value() + (4.0 * b + 2.0) / (s.x + s.w) * sf.value();
    let nf = n as f64;
    let k = 4.0 * (nf + a) * (pick(m, nf, nf + 1.0) + b);
    Ok(vec![(lhs, k * jacobi_homog(n - 1, a, b, &z, &w).value())])
}

fn case_1_16(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let (z, w) = zw_jets(s, 2);
    let e = |f: &Jet| sq_euler(f, &z, &w, 0.0);
    let f = jacobi_homog(n - 1, a, b, &z, &w);
    let (zv, wv) = (s.x, s.w);
    let ab1 = a + b + 1.0;
    let first = 2.0 * (ab1 * (zv + wv) - (2.0 * b + 1.0) * zv * wv / (zv + wv));
    let zeroth = ab1 * ((ab1 + 1.0) * (zv * zv + wv * wv) + 2.0 * (a - b) * zv * wv);
    let lhs = e(&e(&f)).value() + first * e(&f).value() + zeroth * f.value();
    let nf = n as f64;
    let k = 4.0 * pick(m, nf, nf + 1.0) * (nf + a + b);
    Ok(vec![(lhs, k * jacobi_homog(n, a, b, &z, &w).value())])
}

fn zm(m: i64, g: f64, x: &Jet, y: &Jet) -> Jet {
    if m < 0 {
        return Jet::real(0.0, x.order());
    }
    jack_z(un(m), 0, g, x, y)
}

fn case_4_06(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let g = s.gamma;
    let (x, y) = xy_jets(s, 1);
    let nf = n as f64;
    let k = nf * (2.0 * g + pick(m, nf, nf + 1.0)) / (g + nf - 0.5);
    Ok(vec![(fsum(&zm(n, g, &x, &y)).value(), k * zm(n - 1, g, &x, &y).value())])
}

fn case_4_07(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let g = s.gamma;
    let (x, y) = xy_jets(s, 1);
    let lhs = sq_euler(&zm(n, g, &x, &y), &x, &y, g + 0.5).value();
    let k = g + pick(m, n, n + 1) as f64 + 0.5;
    Ok(vec![(lhs, k * zm(n + 1, g, &x, &y).value())])
}

fn case_4_08(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let g = s.gamma;
    let (x, y) = xy_jets(s, 1);
    let z = zm(n, g, &x, &y);
    Ok(vec![(euler(&z, &x, &y).value(), pick(m, n, n + 1) as f64 * z.value())])
}

/// `R_k(1-2x)` at a real point.
fn r_shift(n: u32, a: f64, b: f64, v: f64) -> C {
    jacobi_r(n, a, b, &Jet::real(1.0 - 2.0 * v, 0)).value()
}

fn case_3_03(n: i64, k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let (x, y) = (Jet::real(s.x, 0), Jet::real(s.y, 0));
    let lhs = bc2_r(un(n), un(k), a, b, -0.5, &x, &y).value();
    let (n, k) = (un(n), un(k));
    let sym = r_shift(n, a, b, s.x) * r_shift(k, a, b, s.y) + r_shift(k, a, b, s.x) * r_shift(n, a, b, s.y);
    Ok(vec![(lhs, sym * pick(m, 0.5, 1.0))])
}

fn case_3_04(n: i64, k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b) = (s.alpha, s.beta);
    let (x, y) = (Jet::real(s.x, 0), Jet::real(s.y, 0));
    let lhs = bc2_r(un(n), un(k), a, b, 0.5, &x, &y).value();
    let (nu, ku) = (un(n), un(k));
    let anti =
        r_shift(nu + 1, a, b, s.x) * r_shift(ku, a, b, s.y) - r_shift(ku, a, b, s.x) * r_shift(nu + 1, a, b, s.y);
    let dxy = guard(cr(s.x - s.y), s.x.abs() + s.y.abs(), "x - y")?;
    let pre = -pick(m, a + 1.0, a + 2.0) / (((n - k + 1) as f64) * ((n + k) as f64 + a + b + 2.0));
    Ok(vec![(lhs, pre * anti / dxy)])
}

fn case_3_05(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, b, g) = (s.alpha, s.beta, s.gamma);
    let (x, y) = (Jet::real(s.x, 0), Jet::real(s.y, 0));
    let lhs = bc2_r(un(n), 0, a, b, g, &x, &y).value();
    let rhs = bc2_r_n0(un(n), a, b, g, &x, &y).value() + pick(m, 0.0, s.x + s.y);
    Ok(vec![(lhs, rhs)])
}

fn r_aa(n: i64, a: f64, g: f64, x: &Jet, y: &Jet) -> Jet {
    if n < 0 {
        return Jet::real(0.0, x.order());
    }
    bc2_r_n0(un(n), a, a, g, x, y)
}

/// The second-order part shared by both BC₂ ladder operators, and the
/// pieces `D₀ f` and `(D₊ - γ - ½) f`.
fn bc2_parts(f: &Jet, a: f64, g: f64, x: &Jet, y: &Jet) -> (C, C, C) {
    let gh = g + 0.5;
    let d0 = |h: &Jet| euler(h, x, y);
    let dp = |h: &Jet| sq_euler(h, x, y, gh);
    let d0f = d0(f);
    let common = fsum(&d0f).value() - 3.0 * d0(&d0f).value() + 2.0 * dp(&d0f).value() + (a + gh) * fsum(f).value();
    let shifted = dp(f).value() - gh * f.value();
    (common, d0f.value(), shifted)
}

fn case_4_10(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, g) = (s.alpha, s.gamma);
    let (x, y) = xy_jets(s, 2);
    let nf = n as f64;
    let (common, d0f, shifted) = bc2_parts(&r_aa(n, a, g, &x, &y), a, g, &x, &y);
    let lhs = common + (2.0 * nf - 4.0 * g - 1.0) * d0f - 2.0 * nf * shifted;
    let k = -nf * (nf + pick(m, 1.0, 2.0) + 2.0 * a);
    Ok(vec![(lhs, k * r_aa(n - 1, a, g, &x, &y).value())])
}

fn case_4_11(n: i64, _k: i64, s: &NumericSample, m: bool) -> Res<Pairs> {
    let (a, g) = (s.alpha, s.gamma);
    let (x, y) = xy_jets(s, 2);
    let nf = n as f64;
    let (common, d0f, shifted) = bc2_parts(&r_aa(n, a, g, &x, &y), a, g, &x, &y);
    let lhs = common - (2.0 * nf + 4.0 * a + 8.0 * g + 5.0) * d0f + (2.0 * nf + 4.0 * a + 4.0 * g + 4.0) * shifted;
    let k = -(nf + 2.0 * g + 1.0) * (nf + pick(m, 2.0, 3.0) + 2.0 * a + 2.0 * g);
    Ok(vec![(lhs, k * r_aa(n + 1, a, g, &x, &y).value())])
}

/// The numeric counterpart of a registered identity.
pub(crate) fn shadow(id: &str) -> Option<Shadow> {
    let f: Shadow = match id {
        "6.01" => kn_raise,
        "6.02" => kn_lower,
        "6.04" => z604,
        "6.05" => z605,
        "6.06" => z606,
        "6.07" => z607,
        "6.08" => z608,
        "6.04-6.05-equiv" => z_equivalence,
        "omega-kernel" => omega_kernel,
        "kn-structural" => kn_structural,
        "kn-relations" => kn_relations,
        "kn-subspace" => kn_subspace,
        "2.06" => case_2_06,
        "2.07" => case_2_07,
        "2.01" => case_2_01,
        "2.02" => case_2_02,
        "2.03" => case_2_03,
        "genfun-taylor" => genfun_taylor,
        "2.10" => case_2_10,
        "2.11" => case_2_11,
        "2.16" => case_2_16,
        "sl2" => sl2,
        "1.04" => case_1_04,
        "1.01" => case_1_01,
        "1.06" => case_1_06,
        "1.03" => case_1_03,
        "1.08" => case_1_08,
        "1.05" => case_1_05,
        "1.09" => case_1_09,
        "1.12" => case_1_12,
        "1.16" => case_1_16,
        "1.11" => case_1_11,
        "qt-even" => qt_even,
        "qt-odd" => qt_odd,
        "3.03-x" => case_3_03,
        "3.04-x" => case_3_04,
        "3.05-consistency" => case_3_05,
        "4.01" => case_4_01,
        "4.02" => case_4_02,
        "4.03" => case_4_03,
        "4.05" => case_4_05,
        "4.06" => case_4_06,
        "4.07" => case_4_07,
        "4.08" => case_4_08,
        "4.10" => case_4_10,
        "4.11" => case_4_11,
        _ => return None,
    };
    Some(f)
}

/// θ must stay this far from `0` and `π`.
pub(crate) const THETA_MARGIN: f64 = 0.1;

pub(crate) fn theta_ok(theta: f64) -> bool {
    let r = theta.rem_euclid(PI);
    (THETA_MARGIN..=PI - THETA_MARGIN).contains(&r)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `ΩK₁⁺f - q²K₁⁺Ωf - c(x+y)Ωf` at a sample.
    fn omega_k_residual(s: &NumericSample, c: f64) -> f64 {
        let kn = kn_of(s);
        let (x, y) = point(s);
        let f = test_poly(s);
        let kp = k_plus(&f, kn, ident);
        let lhs = omega(&kp, kn)(x, y).unwrap();
        let rhs = k_plus(&omega(&f, kn), kn, ident)(x, y).unwrap() * (kn.q * kn.q)
            + c * (x + y) * omega(&f, kn)(x, y).unwrap();
        (lhs - rhs).norm() / (1.0 + lhs.norm())
    }

    #[test]
    fn omega_k_needs_one_minus_q_squared() {
        let s = NumericSample::draw(5);
        let q = s.q();
        assert!(omega_k_residual(&s, 1.0 - q * q) < 1e-12);
        assert!(omega_k_residual(&s, (1.0 - q) * (1.0 - q)) > 1e-4);
    }

    /// Residual of the homogeneous raising formula with the first-order
    /// coefficient weighted by `weight`.
    fn raising_residual(n: i64, s: &NumericSample, weight: f64) -> f64 {
        let (a, b) = (s.alpha, s.beta);
        let (z, w) = zw_jets(s, 2);
        let e = |f: &Jet| sq_euler(f, &z, &w, 0.0);
        let f = jacobi_homog(n - 1, a, b, &z, &w);
        let (zv, wv) = (s.x, s.w);
        let ab1 = a + b + 1.0;
        let first = weight * (ab1 * (zv + wv) - (2.0 * b + 1.0) * zv * wv / (zv + wv));
        let zeroth = ab1 * ((ab1 + 1.0) * (zv * zv + wv * wv) + 2.0 * (a - b) * zv * wv);
        let lhs = e(&e(&f)).value() + first * e(&f).value() + zeroth * f.value();
        let nf = n as f64;
        let rhs = 4.0 * nf * (nf + a + b) * jacobi_homog(n, a, b, &z, &w).value();
        (lhs - rhs).norm() / (1.0 + lhs.norm())
    }

    #[test]
    fn homogeneous_raising_weight() {
        let s = NumericSample::draw(9);
        assert!(raising_residual(1, &s, 1.0) < 1e-12);
        assert!(raising_residual(3, &s, 1.0) > 1e-4);
        for n in 1..=5 {
            assert!(raising_residual(n, &s, 2.0) < 1e-11, "n={n}");
        }
    }

    #[test]
    fn theta_margin() {
        assert!(!theta_ok(0.05));
        assert!(!theta_ok(PI + 0.05));
        assert!(theta_ok(1.0));
    }
}
