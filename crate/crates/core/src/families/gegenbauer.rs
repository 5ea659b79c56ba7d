//! Ultraspherical (Gegenbauer) polynomials in the `x`, `z`, `(x, y)`,
//! `(ξ, η)` and tangent charts.

use crate::exactalg::{int, rat, BigRational, Monomial, MultiPoly, Var};
use crate::qseries::{factorial, pochhammer, ParamAffine};

fn lambda() -> ParamAffine {
    ParamAffine::param(Var::Lambda)
}

/// `C_n^{(λ)}(x)` with symbolic `λ`.
pub fn gegenbauer_x(n: u32) -> MultiPoly {
    gegenbauer_x_with(n, &lambda())
}

/// `C_n^{(λ)}(x)` for an affine `λ`, by the three-term recurrence
/// `m C_m = 2(m+λ-1) x C_{m-1} - (m+2λ-2) C_{m-2}`.
pub fn gegenbauer_x_with(n: u32, lam: &ParamAffine) -> MultiPoly {
    let l = lam.to_poly();
    let x = MultiPoly::var(Var::X);
    let mut prev = MultiPoly::zero();
    let mut cur = MultiPoly::one();
    for m in 1..=n as i64 {
        let a = (&l + &MultiPoly::int(m - 1)).scale(&int(2));
        let b = &l.scale(&int(2)) + &MultiPoly::int(m - 2);
        let next = (&(&(&a * &x) * &cur) - &(&b * &prev)).scale(&rat(1, m));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn series_coeff(lam: &ParamAffine, n: u32, k: u32) -> MultiPoly {
    let d = factorial(k) * factorial(n - k);
    (&pochhammer(lam, k) * &pochhammer(lam, n - k)).scale(&BigRational::new(1.into(), d))
}

/// Fourier form `Σ_k (λ)_k (λ)_{n-k} / (k! (n-k)!) z^{n-2k}`.
pub fn gegenbauer_fourier(n: u32) -> MultiPoly {
    let lam = lambda();
    let mut acc = MultiPoly::zero();
    for k in 0..=n {
        acc = &acc + &series_coeff(&lam, n, k).shift(Var::Z, n as i16 - 2 * k as i16);
    }
    acc
}

/// `(xy)^{n/2} C_n^{(λ)}((√(x/y) + √(y/x))/2) = Σ_k (λ)_k (λ)_{n-k} / (k! (n-k)!) x^{n-k} y^k`.
pub fn gegenbauer_homog(n: u32) -> MultiPoly {
    gegenbauer_homog_with(n, &lambda())
}

pub fn gegenbauer_homog_with(n: u32, lam: &ParamAffine) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for k in 0..=n {
        let m = Monomial::from_pairs(&[(Var::X, (n - k) as i16), (Var::Y, k as i16)]);
        acc = &acc + &series_coeff(lam, n, k).mul_monomial(&m);
    }
    acc
}

/// The homogeneous form written in `ξ = x+y`, `η = xy`, by the recurrence
/// `m f_m = (m+λ-1) ξ f_{m-1} - (m+2λ-2) η f_{m-2}`.
pub fn gegenbauer_homog_xieta_with(n: u32, lam: &ParamAffine) -> MultiPoly {
    let l = lam.to_poly();
    let xi = MultiPoly::var(Var::Xi);
    let eta = MultiPoly::var(Var::Eta);
    let mut prev = MultiPoly::zero();
    let mut cur = MultiPoly::one();
    for m in 1..=n as i64 {
        let a = &l + &MultiPoly::int(m - 1);
        let b = &l.scale(&int(2)) + &MultiPoly::int(m - 2);
        let next = (&(&(&a * &xi) * &cur) - &(&(&b * &eta) * &prev)).scale(&rat(1, m));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Tangent chart `(1+x²)^{n/2} C_n^{(λ)}(x / √(1+x²))`, a polynomial since
/// `C_n` has the parity of `n`.
pub fn gegenbauer_tan(n: u32) -> MultiPoly {
    let c = gegenbauer_x(n);
    let k = &MultiPoly::one() + &MultiPoly::var_pow(Var::X, 2);
    let mut kp = vec![MultiPoly::one()];
    for i in 0..(n / 2) as usize {
        kp.push(&kp[i] * &k);
    }
    let mut acc = MultiPoly::zero();
    for (m, coef) in c.terms() {
        let e = m.exp(Var::X) as u32;
        let j = ((n - e) / 2) as usize;
        acc = &acc + &(&kp[j] * &MultiPoly::monomial(*m, coef.clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{substitute, RationalFunction};

    fn l() -> MultiPoly {
        MultiPoly::var(Var::Lambda)
    }
    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }

    #[test]
    fn low_degrees() {
        assert!(gegenbauer_x(0).is_one());
        assert_eq!(gegenbauer_x(1), (&l() * &x()).scale(&int(2)));
        let two = (&(&l() * &(&l() + &MultiPoly::one())) * &(&x() * &x())).scale(&int(2)) - l();
        assert_eq!(gegenbauer_x(2), two);
        let y = MultiPoly::var(Var::Y);
        assert_eq!(gegenbauer_homog(1), &l() * &(&x() + &y));
        assert!(gegenbauer_homog(0).is_one());
    }

    #[test]
    fn recurrence_matches_fourier_series() {
        let z = RationalFunction::var(Var::Z);
        let half = RationalFunction::constant(rat(1, 2));
        let cos = &half * &(&z + &RationalFunction::var_pow(Var::Z, -1));
        for n in 0..=10 {
            let got = substitute(&gegenbauer_x(n), &[(Var::X, cos.clone())]).unwrap();
            assert_eq!(got, RationalFunction::from_poly(gegenbauer_fourier(n)), "n = {n}");
        }
    }

    #[test]
    fn homogeneous_on_the_diagonal() {
        // y = x gives x^n C_n(1)
        for n in 0..6 {
            let h = substitute(&gegenbauer_homog(n), &[(Var::Y, RationalFunction::var(Var::X))]).unwrap();
            let c1 = substitute(&gegenbauer_x(n), &[(Var::X, RationalFunction::one())]).unwrap();
            assert_eq!(h, c1.mul_poly(&MultiPoly::var_pow(Var::X, n as i16)));
        }
    }

    #[test]
    fn tangent_chart_low_degree() {
        // g_2 = 2λ(λ+1)x² - λ(1+x²)
        let xx = &x() * &x();
        let expected = &(&(&l() * &(&l() + &MultiPoly::one())) * &xx).scale(&int(2))
            - &(&l() * &(&MultiPoly::one() + &xx));
        assert_eq!(gegenbauer_tan(2), expected);
        assert_eq!(gegenbauer_tan(1), gegenbauer_x(1));
    }
}
