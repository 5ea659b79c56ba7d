//! Pochhammer and q-Pochhammer symbols and terminating hypergeometric sums
//! with symbolic parameters.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactalg::{AlgebraError, BigRational, MultiPoly, RationalFunction, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSeriesError {
    #[error("lower Pochhammer symbol vanishes at summation index {0}")]
    ZeroDenominator(usize),
    #[error("no nonpositive integer upper parameter within the allowed range")]
    NotTerminating,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `constant + Σ coeff·param`, an affine expression in the parameters.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamAffine {
    constant: BigRational,
    linear: BTreeMap<Var, BigRational>,
}

impl ParamAffine {
    pub fn new(constant: BigRational, linear: &[(Var, BigRational)]) -> Self {
        let mut out = ParamAffine::constant(constant);
        for (v, c) in linear {
            out = out.with(*v, c.clone());
        }
        out
    }

    pub fn constant(c: BigRational) -> Self {
        ParamAffine {
            constant: c,
            linear: BTreeMap::new(),
        }
    }

    pub fn int(n: i64) -> Self {
        ParamAffine::constant(BigRational::from_integer(n.into()))
    }

    pub fn param(v: Var) -> Self {
        ParamAffine::int(0).with(v, BigRational::one())
    }

    /// Adds `c·v` to the expression.
    pub fn with(mut self, v: Var, c: BigRational) -> Self {
        assert!(v.is_parameter(), "{v} is not a parameter");
        let e = self.linear.entry(v).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.linear.remove(&v);
        }
        self
    }

    pub fn with_int(self, v: Var, c: i64) -> Self {
        self.with(v, BigRational::from_integer(c.into()))
    }

    pub fn add_const(&self, c: &BigRational) -> Self {
        let mut out = self.clone();
        out.constant += c;
        out
    }

    pub fn add_int(&self, k: i64) -> Self {
        self.add_const(&BigRational::from_integer(k.into()))
    }

    pub fn add(&self, other: &ParamAffine) -> Self {
        let mut out = self.add_const(&other.constant);
        for (v, c) in &other.linear {
            out = out.with(*v, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        ParamAffine {
            constant: -&self.constant,
            linear: self.linear.iter().map(|(v, c)| (*v, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return ParamAffine::default();
        }
        ParamAffine {
            constant: &self.constant * s,
            linear: self.linear.iter().map(|(v, c)| (*v, c * s)).collect(),
        }
    }

    pub fn constant_part(&self) -> &BigRational {
        &self.constant
    }

    pub fn linear_part(&self) -> &BTreeMap<Var, BigRational> {
        &self.linear
    }

    pub fn is_constant(&self) -> bool {
        self.linear.is_empty()
    }

    /// The value when it is an integer constant.
    pub fn as_integer(&self) -> Option<i64> {
        if self.is_constant() && self.constant.is_integer() {
            self.constant.to_integer().to_i64()
        } else {
            None
        }
    }

    /// Replaces parameters by rational values.
    pub fn specialize(&self, bindings: &[(Var, BigRational)]) -> ParamAffine {
        let mut out = ParamAffine::constant(self.constant.clone());
        for (v, c) in &self.linear {
            match bindings.iter().find(|(b, _)| b == v) {
                Some((_, val)) => out.constant += c * val,
                None => out = out.with(*v, c.clone()),
            }
        }
        out
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::constant(self.constant.clone());
        for (v, c) in &self.linear {
            p = &p + &MultiPoly::var(*v).scale(c);
        }
        p
    }
}

impl fmt::Display for ParamAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Debug for ParamAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamAffine({self})")
    }
}

impl From<i64> for ParamAffine {
    fn from(n: i64) -> Self {
        ParamAffine::int(n)
    }
}

impl From<Var> for ParamAffine {
    fn from(v: Var) -> Self {
        ParamAffine::param(v)
    }
}

/// Rising factorial `(a)_k = a(a+1)...(a+k-1)`.
pub fn pochhammer(a: &ParamAffine, k: u32) -> MultiPoly {
    pochhammer_poly(&a.to_poly(), k)
}

/// Rising factorial of an arbitrary polynomial argument.
pub fn pochhammer_poly(a: &MultiPoly, k: u32) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for i in 0..k {
        acc = &acc * &(a + &MultiPoly::int(i as i64));
    }
    acc
}

/// `(a;q)_k = Π_{i<k} (1 - a q^i)` with `q = u²`.
pub fn qpochhammer(a: &MultiPoly, k: u32) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for i in 0..k {
        let term = &MultiPoly::one() - &a.shift(Var::U, 2 * i as i16);
        acc = &acc * &term;
    }
    acc
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k as u64).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn termination_index(upper: &[ParamAffine]) -> Option<u32> {
    upper
        .iter()
        .filter_map(|a| a.as_integer())
        .filter(|&n| n <= 0)
        .map(|n| n.unsigned_abs() as u32)
        .min()
}

/// Terminating sum `Σ_{j≤J} Π(a)_j / Π(b)_j · arg^j / j!`.
pub fn hyp_terminating(
    upper: &[ParamAffine],
    lower: &[ParamAffine],
    arg: &RationalFunction,
    nmax: u32,
) -> Result<RationalFunction, QSeriesError> {
    let (num, factors) = hyp_terminating_parts(upper, lower, arg, nmax)?;
    Ok(RationalFunction::from_factored(num, &factors)?)
}

/// The terminating sum as an unreduced numerator over a list of
/// denominator factors.
///
/// The terms are accumulated over the common denominator
/// `Π(b)_J · den(arg)^J · J!`, each Pochhammer contributing its linear
/// factors separately so callers can cancel by trial division.
pub fn hyp_terminating_parts(
    upper: &[ParamAffine],
    lower: &[ParamAffine],
    arg: &RationalFunction,
    nmax: u32,
) -> Result<(MultiPoly, Vec<MultiPoly>), QSeriesError> {
    let big_j = termination_index(upper).ok_or(QSeriesError::NotTerminating)?;
    if big_j > nmax {
        return Err(QSeriesError::NotTerminating);
    }
    for b in lower {
        if let Some(m) = b.as_integer() {
            if m <= 0 && (m.unsigned_abs() as u32) < big_j {
                return Err(QSeriesError::ZeroDenominator(m.unsigned_abs() as usize + 1));
            }
        }
    }
    if big_j == 0 {
        return Ok((MultiPoly::one(), Vec::new()));
    }
    let p = arg.numer();
    let d = arg.denom();
    let lower_polys: Vec<MultiPoly> = lower.iter().map(|b| b.to_poly()).collect();
    let upper_polys: Vec<MultiPoly> = upper.iter().map(|a| a.to_poly()).collect();

    let mut p_pow = vec![MultiPoly::one()];
    let mut d_pow = vec![MultiPoly::one()];
    for _ in 0..big_j {
        p_pow.push(p_pow.last().unwrap() * p);
        d_pow.push(d_pow.last().unwrap() * d);
    }

    let mut num = MultiPoly::zero();
    let mut upper_acc = MultiPoly::one();
    let jf = factorial(big_j);
    for j in 0..=big_j {
        if j > 0 {
            for a in &upper_polys {
                upper_acc = &upper_acc * &(a + &MultiPoly::int(j as i64 - 1));
            }
        }
        if upper_acc.is_zero() {
            break;
        }
        let mut term = &upper_acc * &(&p_pow[j as usize] * &d_pow[(big_j - j) as usize]);
        for b in &lower_polys {
            let tail = pochhammer_poly(&(b + &MultiPoly::int(j as i64)), big_j - j);
            term = &term * &tail;
        }
        let ratio = BigRational::from_integer(&jf / factorial(j));
        num = &num + &term.scale(&ratio);
    }
    let mut factors = vec![MultiPoly::constant(BigRational::from_integer(jf))];
    for _ in 0..big_j {
        factors.push(d.clone());
    }
    for b in &lower_polys {
        for i in 0..big_j {
            let f = b + &MultiPoly::int(i as i64);
            if f.is_zero() {
                return Err(QSeriesError::ZeroDenominator(i as usize + 1));
            }
            factors.push(f);
        }
    }
    Ok((num, factors))
}

/// Linear factors of `(a)_k`.
pub fn pochhammer_factors(a: &ParamAffine, k: u32) -> Vec<MultiPoly> {
    (0..k).map(|i| a.add_int(i as i64).to_poly()).collect()
}

/// True when the constant is a nonpositive integer (a pole of Γ).
pub fn is_nonpositive_integer(c: &BigRational) -> bool {
    c.is_integer() && !c.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};
    use proptest::prelude::*;

    fn lam() -> MultiPoly {
        MultiPoly::var(Var::Lambda)
    }

    #[test]
    fn pochhammer_examples() {
        let l = ParamAffine::param(Var::Lambda);
        assert!(pochhammer(&l, 0).is_one());
        assert_eq!(pochhammer(&l, 2), &lam() * &(&lam() + &MultiPoly::one()));
        assert_eq!(pochhammer(&ParamAffine::int(-3), 2), MultiPoly::int(6));
    }

    #[test]
    fn qpochhammer_examples() {
        let t = MultiPoly::var(Var::T);
        let one = MultiPoly::one();
        assert_eq!(qpochhammer(&t, 1), &one - &t);
        let tq = t.shift(Var::U, 2);
        assert_eq!(qpochhammer(&t, 2), &(&one - &t) * &(&one - &tq));
        let q = MultiPoly::var_pow(Var::U, 2);
        assert_eq!(qpochhammer(&q, 1), &one - &q);
    }

    #[test]
    fn two_term_sum() {
        // 2F1(-1, a+b+2; a+1; s) = 1 - (a+b+2)s/(a+1), with s = xi as a stand-in
        let a = ParamAffine::param(Var::Alpha);
        let upper = [ParamAffine::int(-1), a.clone().with_int(Var::Beta, 1).add_int(2)];
        let lower = [a.add_int(1)];
        let s = RationalFunction::var(Var::Xi);
        let got = hyp_terminating(&upper, &lower, &s, 10).unwrap();
        let expected = RationalFunction::one()
            - RationalFunction::ratio(
                &upper[1].to_poly() * &MultiPoly::var(Var::Xi),
                lower[0].to_poly(),
            );
        assert_eq!(got, expected);
    }

    #[test]
    fn empty_sum_and_errors() {
        let g = ParamAffine::param(Var::Gamma);
        let s = RationalFunction::var(Var::Xi);
        let got = hyp_terminating(&[ParamAffine::int(0), g.clone()], std::slice::from_ref(&g), &s, 5).unwrap();
        assert!(got.is_one());
        assert_eq!(
            hyp_terminating(std::slice::from_ref(&g), std::slice::from_ref(&g), &s, 5),
            Err(QSeriesError::NotTerminating)
        );
        assert_eq!(
            hyp_terminating(&[ParamAffine::int(-3)], &[ParamAffine::int(-1)], &s, 5),
            Err(QSeriesError::ZeroDenominator(2))
        );
    }

    #[test]
    fn unit_argument_matches_vandermonde() {
        // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
        let b = ParamAffine::param(Var::Beta);
        let c = ParamAffine::param(Var::Gamma);
        for n in 0..5u32 {
            let got = hyp_terminating(
                &[ParamAffine::int(-(n as i64)), b.clone()],
                std::slice::from_ref(&c),
                &RationalFunction::one(),
                10,
            )
            .unwrap();
            let expected = RationalFunction::ratio(pochhammer(&c.add(&b.neg()), n), pochhammer(&c, n));
            assert_eq!(got, expected, "n = {n}");
        }
    }

    #[test]
    fn specialize_affine() {
        let a = ParamAffine::param(Var::Gamma).with(Var::Alpha, int(2)).add_const(&rat(1, 2));
        let s = a.specialize(&[(Var::Gamma, rat(-1, 2))]);
        assert_eq!(s, ParamAffine::param(Var::Alpha).scale(&int(2)));
    }

    fn affine() -> impl Strategy<Value = ParamAffine> {
        (-4i64..5, -3i64..4, -3i64..4).prop_map(|(c, x, y)| {
            ParamAffine::int(c).with_int(Var::Alpha, x).with_int(Var::T, y)
        })
    }

    proptest! {
        #[test]
        fn pochhammer_splits(a in affine(), j in 0u32..4, k in 0u32..4) {
            let lhs = pochhammer(&a, j + k);
            let rhs = &pochhammer(&a, j) * &pochhammer(&a.add_int(j as i64), k);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn qpochhammer_splits(a in affine(), j in 0u32..4, k in 0u32..4) {
            let a = a.to_poly();
            let lhs = qpochhammer(&a, j + k);
            let rhs = &qpochhammer(&a, j) * &qpochhammer(&a.shift(Var::U, 2 * j as i16), k);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
