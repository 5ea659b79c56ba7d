//! Floating-point families by three-term recurrences and direct sums,
//! evaluated on jets. Nothing here touches the exact polynomials.

use num_complex::Complex64;

use super::jet::Jet;

type C = Complex64;

fn cr(v: f64) -> C {
    C::new(v, 0.0)
}

/// `(a)_k`.
pub fn poch(a: f64, k: u32) -> f64 {
    (0..k).map(|i| a + i as f64).product()
}

/// `(a; q)_k`.
pub fn qpoch(a: C, q: C, k: u32) -> C {
    let mut acc = cr(1.0);
    let mut qi = cr(1.0);
    for _ in 0..k {
        acc *= cr(1.0) - a * qi;
        qi *= q;
    }
    acc
}

pub fn factorial(k: u32) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// `C_n^{(λ)}(x)`: `m C_m = 2(m+λ-1) x C_{m-1} - (m+2λ-2) C_{m-2}`.
pub fn gegenbauer(n: u32, lam: f64, x: &Jet) -> Jet {
    let mut prev = Jet::real(0.0, x.order());
    let mut cur = Jet::real(1.0, x.order());
    for m in 1..=n {
        let m = m as f64;
        let next = (&(x * &cur) * (2.0 * (m + lam - 1.0)) - &prev * (m + 2.0 * lam - 2.0)) * (1.0 / m);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `n! C_n^{(λ)}(x) / (λ)_n`, finite at `λ = 0`.
pub fn gegenbauer_normalized(n: u32, lam: f64, x: &Jet) -> Jet {
    let one = Jet::real(1.0, x.order());
    if n == 0 {
        return one;
    }
    let d1 = x * 2.0;
    if n == 1 {
        return d1;
    }
    // at n = 2 the common factor λ has been cancelled by hand
    let mut prev = d1;
    let mut cur = &(x * x) * 4.0 - 2.0 / (lam + 1.0);
    for p in 3..=n {
        let p = p as f64;
        let a = 2.0 * (p + lam - 1.0) * (lam + p - 2.0);
        let b = (p + 2.0 * lam - 2.0) * (p - 1.0);
        let den = (lam + p - 2.0) * (lam + p - 1.0);
        let next = (&(x * &cur) * a - &prev * b) * (1.0 / den);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `P_n^{(α,β)}(x)` by its three-term recurrence.
pub fn jacobi_p(n: u32, a: f64, b: f64, x: &Jet) -> Jet {
    let p0 = Jet::real(1.0, x.order());
    if n == 0 {
        return p0;
    }
    let p1 = &(x - 1.0) * ((a + b + 2.0) / 2.0) + (a + 1.0);
    let (mut prev, mut cur) = (p0, p1);
    for m in 2..=n {
        let m = m as f64;
        let s = 2.0 * m + a + b;
        let lead = 2.0 * m * (m + a + b) * (s - 2.0);
        let lin = &(x * (s * (s - 2.0))) + (a * a - b * b);
        let next = (&(&lin * &cur) * (s - 1.0) - &prev * (2.0 * (m + a - 1.0) * (m + b - 1.0) * s)) * (1.0 / lead);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `R_n^{(α,β)}(x) = n! P_n^{(α,β)}(x) / (α+1)_n`.
pub fn jacobi_r(n: u32, a: f64, b: f64, x: &Jet) -> Jet {
    &jacobi_p(n, a, b, x) * (factorial(n) / poch(a + 1.0, n))
}

/// `C_n(x; t | q)`:
/// `(1-q^{m+1}) C_{m+1} = 2x(1-tq^m) C_m - (1-t²q^{m-1}) C_{m-1}`.
pub fn qultra(n: u32, t: f64, q: f64, x: &Jet) -> Jet {
    let mut prev = Jet::real(0.0, x.order());
    let mut cur = Jet::real(1.0, x.order());
    for m in 0..n as i32 {
        let a = 2.0 * (1.0 - t * q.powi(m));
        let b = if m == 0 { 0.0 } else { 1.0 - t * t * q.powi(m - 1) };
        let next = (&(x * &cur) * a - &prev * b) * (1.0 / (1.0 - q.powi(m + 1)));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `C_n(cos θ; q^λ | q)` from the Fourier sum, with every `1 - q^a`
/// formed by `expm1` so that it stays accurate as `q → 1`.
pub fn qultra_fourier_cos(n: u32, lam: f64, q: f64, theta: f64) -> f64 {
    let lq = q.ln();
    let one_minus_qpow = |a: f64| -(a * lq).exp_m1();
    let ratio = |k: u32| -> f64 { (0..k).map(|j| one_minus_qpow(lam + j as f64) / one_minus_qpow(j as f64 + 1.0)).product() };
    (0..=n)
        .map(|k| ratio(k) * ratio(n - k) * ((n as f64 - 2.0 * k as f64) * theta).cos())
        .sum()
}

/// `(xy)^{n/2} F((√(x/y) + √(y/x))/2)` for a family `F` of parity `n`.
pub fn homogenize(n: u32, x: &Jet, y: &Jet, f: impl Fn(&Jet) -> Jet) -> Jet {
    let r = (x / y).sqrt();
    let s = &(&r + &r.recip()) * 0.5;
    &(x * y).powf(n as f64 / 2.0) * &f(&s)
}

/// `J_{n,0}(x, y; q, t) = (q;q)_n (xy)^{n/2} C_n((√(x/y)+√(y/x))/2; t | q)`.
pub fn macdonald_j(n: u32, t: f64, q: f64, x: &Jet, y: &Jet) -> Jet {
    let qq = qpoch(cr(q), cr(q), n);
    &homogenize(n, x, y, |s| qultra(n, t, q, s)) * qq
}

/// `Z_{m,l}^γ(x+y, xy) = (xy)^l · (m-l)! / (γ+½)_{m-l} · (xy)^{(m-l)/2} C_{m-l}^{(γ+½)}(…)`.
pub fn jack_z(m: u32, l: u32, g: f64, x: &Jet, y: &Jet) -> Jet {
    let p = m - l;
    let body = homogenize(p, x, y, |s| gegenbauer_normalized(p, g + 0.5, s));
    &(x * y).powi(l as i32) * &body
}

/// `(a)_j / (2a)_j`, finite at `a = 0`.
fn half_ratio(a: f64, j: u32) -> f64 {
    if j == 0 {
        return 1.0;
    }
    0.5 * (1..j).map(|i| (a + i as f64) / (2.0 * a + i as f64)).product::<f64>()
}

/// Expansion coefficient of `R_{n,k}^{α,β,γ}` on `Z_{m,l}^γ`.
pub fn bc2_coefficient(n: u32, k: u32, m: u32, l: u32, a: f64, b: f64, g: f64) -> f64 {
    let (nf, kf, mf, lf) = (n as f64, k as f64, m as f64, l as f64);
    let ab = a + b;
    let pre = poch(-kf, l) * poch(-nf - g - 0.5, l) * poch(-nf, m) * poch(ab + g + nf + 1.5, m) * poch(ab + kf + 1.0, l)
        * poch(g + 1.5, m - l)
        / (poch(-nf, l) * poch(a + 1.0, l) * poch(a + g + 1.5, m) * poch(g + 1.5, m) * factorial(l) * factorial(m - l));
    let top = (m - l).min(n - k);
    let mut sum = 0.0;
    for j in 0..=top {
        let term = poch(lf - mf, j) * poch(kf - nf, j) * poch(-ab - nf - kf - 1.0, j) * half_ratio(g + 0.5, j)
            / (poch(lf - nf, j) * poch(-ab - g - nf - mf - 0.5, j) * factorial(j));
        sum += term;
    }
    pre * sum
}

/// `R_{n,k}^{α,β,γ}(x+y, xy)` from the double sum over the Jack basis.
pub fn bc2_r(n: u32, k: u32, a: f64, b: f64, g: f64, x: &Jet, y: &Jet) -> Jet {
    let mut acc = Jet::real(0.0, x.order().min(y.order()));
    for l in 0..=k {
        for m in l..=n {
            let c = bc2_coefficient(n, k, m, l, a, b, g);
            if c != 0.0 {
                acc = &acc + &(&jack_z(m, l, g, x, y) * c);
            }
        }
    }
    acc
}

/// `R_{n,0}^{α,β,γ}(x+y, xy)` from the single sum.
pub fn bc2_r_n0(n: u32, a: f64, b: f64, g: f64, x: &Jet, y: &Jet) -> Jet {
    let nf = n as f64;
    let mut acc = Jet::real(0.0, x.order().min(y.order()));
    for m in 0..=n {
        let c = poch(-nf, m) * poch(a + b + 2.0 * g + nf + 2.0, m) * half_ratio(g + 0.5, m)
            / (poch(a + g + 1.5, m) * factorial(m));
        acc = &acc + &(&jack_z(m, 0, g, x, y) * c);
    }
    acc
}
