//! Continuous q-ultraspherical polynomials in the `z` chart and the
//! two-variable Macdonald polynomials `J_{n,0}`.

use crate::exactalg::{BigRational, MultiPoly, RationalFunction, Var};
use crate::qseries::qpochhammer;

fn t() -> MultiPoly {
    MultiPoly::var(Var::T)
}

fn q() -> MultiPoly {
    MultiPoly::var_pow(Var::U, 2)
}

/// Gaussian binomial `(q;q)_n / ((q;q)_k (q;q)_{n-k})`, a polynomial in `u`.
pub fn qbinomial(n: u32, k: u32) -> MultiPoly {
    assert!(k <= n);
    qpochhammer(&q(), n)
        .divide_exact(&(&qpochhammer(&q(), k) * &qpochhammer(&q(), n - k)))
        .expect("Gaussian binomial is a polynomial")
}

/// `Σ_k (t;q)_k (t;q)_{n-k} [n k]_q · m_k` for the given monomial factory.
fn weighted_sum(n: u32, mono: impl Fn(u32) -> MultiPoly) -> MultiPoly {
    let tq: Vec<MultiPoly> = (0..=n).map(|k| qpochhammer(&t(), k)).collect();
    let mut acc = MultiPoly::zero();
    for k in 0..=n {
        let c = &(&tq[k as usize] * &tq[(n - k) as usize]) * &qbinomial(n, k);
        acc = &acc + &(&c * &mono(k));
    }
    acc
}

/// `C_n[z] = Σ_k (t;q)_k (t;q)_{n-k} / ((q;q)_k (q;q)_{n-k}) z^{n-2k}`.
pub fn cq_ultra_z(n: u32) -> RationalFunction {
    let num = weighted_sum(n, |k| MultiPoly::var_pow(Var::Z, n as i16 - 2 * k as i16));
    RationalFunction::ratio(num, qpochhammer(&q(), n))
}

/// `J_{n,0}(x, y; q, t) = (q;q)_n Σ_k (t;q)_k (t;q)_{n-k} / ((q;q)_k (q;q)_{n-k}) x^{n-k} y^k`.
pub fn macdonald_j_n0(n: u32) -> MultiPoly {
    weighted_sum(n, |k| {
        MultiPoly::monomial(
            crate::exactalg::Monomial::from_pairs(&[(Var::X, (n - k) as i16), (Var::Y, k as i16)]),
            BigRational::from_integer(1.into()),
        )
    })
}

/// Homogenizes a symmetric Laurent polynomial in `z` of parity `n`:
/// `z^{n-2k} ↦ x^{n-k} y^k`, which is `(xy)^{n/2} f(√(x/y))`.
pub fn homogenize_z(f: &MultiPoly, n: u32) -> MultiPoly {
    let terms = f.terms().iter().map(|(m, c)| {
        let e = m.exp(Var::Z) as i32;
        debug_assert!((n as i32 - e) % 2 == 0);
        let k = (n as i32 - e) / 2;
        let mut m2 = *m;
        m2.set_exp(Var::Z, 0);
        m2.set_exp(Var::X, (n as i32 - k) as i16);
        m2.set_exp(Var::Y, k as i16);
        (m2, c.clone())
    });
    MultiPoly::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }

    #[test]
    fn low_degree_values() {
        assert!(cq_ultra_z(0).is_one());
        let one = MultiPoly::one();
        let z = MultiPoly::var(Var::Z);
        let zi = MultiPoly::var_pow(Var::Z, -1);
        let expected = RationalFunction::ratio(&(&one - &t()) * &(&z + &zi), &one - &q());
        assert_eq!(cq_ultra_z(1), expected);
        assert!(macdonald_j_n0(0).is_one());
        assert_eq!(macdonald_j_n0(1), &(&one - &t()) * &(&x() + &y()));
    }

    #[test]
    fn symmetry_and_homogeneity() {
        for n in 0..6 {
            let c = cq_ultra_z(n);
            let flipped = c.numer().terms().iter().map(|(m, k)| {
                let mut m2 = *m;
                m2.set_exp(Var::Z, -m.exp(Var::Z));
                (m2, k.clone())
            });
            assert_eq!(&MultiPoly::from_terms(flipped), c.numer());
            let j = macdonald_j_n0(n);
            assert_eq!(j.swap_vars(Var::X, Var::Y), j);
            for (m, _) in j.terms() {
                assert_eq!(m.exp(Var::X) + m.exp(Var::Y), n as i16);
            }
        }
    }

    #[test]
    fn j_from_fourier_series() {
        // (q;q)_n times the homogenized Fourier series is J_{n,0}
        for n in 0..=8u32 {
            let c = cq_ultra_z(n);
            let scaled = c.mul_poly(&qpochhammer(&q(), n)).to_poly().unwrap();
            assert_eq!(homogenize_z(&scaled, n), macdonald_j_n0(n), "n = {n}");
        }
    }

    #[test]
    fn qbinomial_small() {
        let q = q();
        assert_eq!(qbinomial(2, 1), &MultiPoly::one() + &q);
        assert!(qbinomial(5, 0).is_one());
    }
}
