//! Polynomials multiplied by symbolic powers of fixed kernels, such as
//! `p(x) * (1+x^2)^{-n-lambda}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::poly::MultiPoly;
use super::ratfun::RationalFunction;
use super::var::{Var, NVARS};
use super::AlgebraError;

/// `constant + sum_p c_p * p` for parameters `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymbolicExponent {
    pub constant: i64,
    pub linear: BTreeMap<Var, BigRational>,
}

impl SymbolicExponent {
    pub fn new(constant: i64, linear: &[(Var, BigRational)]) -> Self {
        let mut e = SymbolicExponent {
            constant,
            linear: BTreeMap::new(),
        };
        for (v, c) in linear {
            debug_assert!(v.is_parameter());
            *e.linear.entry(*v).or_insert_with(BigRational::zero) += c;
        }
        e.linear.retain(|_, c| !c.is_zero());
        e
    }

    pub fn integer(n: i64) -> Self {
        Self::new(n, &[])
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.linear.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.constant += other.constant;
        for (v, c) in &other.linear {
            *out.linear.entry(*v).or_insert_with(BigRational::zero) += c;
        }
        out.linear.retain(|_, c| !c.is_zero());
        out
    }

    pub fn add_int(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.constant += k;
        out
    }

    pub fn neg(&self) -> Self {
        SymbolicExponent {
            constant: -self.constant,
            linear: self.linear.iter().map(|(v, c)| (*v, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `self - other` when it is an integer.
    pub fn integer_difference(&self, other: &Self) -> Option<i64> {
        (self.linear == other.linear).then(|| self.constant - other.constant)
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::int(self.constant);
        for (v, c) in &self.linear {
            p = &p + &MultiPoly::var(*v).scale(c);
        }
        p
    }

    pub fn eval(&self, values: &[Complex64; NVARS]) -> Complex64 {
        let mut acc = Complex64::new(self.constant as f64, 0.0);
        for (v, c) in &self.linear {
            acc += values[v.index()] * c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }
}

impl fmt::Display for SymbolicExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render_poly(&self.to_poly()))
    }
}

fn poly_cmp(a: &MultiPoly, b: &MultiPoly) -> Ordering {
    let (ta, tb) = (a.terms(), b.terms());
    for (x, y) in ta.iter().zip(tb) {
        let c = x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1));
        if c != Ordering::Equal {
            return c;
        }
    }
    ta.len().cmp(&tb.len())
}

/// `coeff * prod_i kernel_i^{exponent_i}`.
///
/// Kernels are primitive polynomials with positive leading coefficient,
/// pairwise distinct, and kept sorted. A kernel whose exponent becomes
/// identically zero is dropped.
#[derive(Clone, PartialEq, Eq)]
pub struct KernelPoly {
    coeff: RationalFunction,
    factors: Vec<(MultiPoly, SymbolicExponent)>,
}

impl KernelPoly {
    pub fn new(coeff: RationalFunction, factors: Vec<(MultiPoly, SymbolicExponent)>) -> Self {
        let mut merged: Vec<(MultiPoly, SymbolicExponent)> = Vec::new();
        for (k, e) in factors {
            debug_assert!(!k.is_constant(), "kernels are non-constant");
            debug_assert!(k.primitive_part().0 == BigRational::from_integer(1.into()));
            match merged.iter_mut().find(|(k2, _)| *k2 == k) {
                Some(slot) => slot.1 = slot.1.add(&e),
                None => merged.push((k, e)),
            }
        }
        merged.retain(|(_, e)| !e.is_zero());
        merged.sort_by(|a, b| poly_cmp(&a.0, &b.0));
        KernelPoly {
            coeff,
            factors: merged,
        }
    }

    /// A plain rational function with no kernel factors.
    pub fn plain(coeff: RationalFunction) -> Self {
        KernelPoly {
            coeff,
            factors: Vec::new(),
        }
    }

    /// `coeff * kernel^exponent`.
    pub fn single(coeff: RationalFunction, kernel: MultiPoly, exponent: SymbolicExponent) -> Self {
        Self::new(coeff, vec![(kernel, exponent)])
    }

    pub fn coeff(&self) -> &RationalFunction {
        &self.coeff
    }

    pub fn factors(&self) -> &[(MultiPoly, SymbolicExponent)] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        KernelPoly {
            coeff: &self.coeff * c,
            factors: self.factors.clone(),
        }
    }

    pub fn mul(&self, other: &KernelPoly) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Self::new(&self.coeff * &other.coeff, factors)
    }

    /// Exact derivative. Kernels depending on `v` have their exponents
    /// lowered by one and the remainder is collected into the coefficient.
    pub fn derivative(&self, v: Var) -> KernelPoly {
        let dependent: Vec<usize> = self
            .factors
            .iter()
            .enumerate()
            .filter(|(_, (k, _))| k.contains_var(v))
            .map(|(i, _)| i)
            .collect();
        if dependent.is_empty() {
            return KernelPoly {
                coeff: self.coeff.derivative(v),
                factors: self.factors.clone(),
            };
        }
        let prod_all: MultiPoly = dependent
            .iter()
            .fold(MultiPoly::one(), |acc, &i| &acc * &self.factors[i].0);
        let mut inner = &self.coeff.derivative(v) * &RationalFunction::from_poly(prod_all);
        for &i in &dependent {
            let (k, e) = &self.factors[i];
            let others = dependent
                .iter()
                .filter(|&&j| j != i)
                .fold(MultiPoly::one(), |acc, &j| &acc * &self.factors[j].0);
            let term = &(&e.to_poly() * &k.derivative(v)) * &others;
            inner = &inner + &self.coeff.mul_poly(&term);
        }
        let factors = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, (k, e))| {
                if dependent.contains(&i) {
                    (k.clone(), e.add_int(-1))
                } else {
                    (k.clone(), e.clone())
                }
            })
            .collect();
        KernelPoly::new(inner, factors)
    }

    /// Brings two values to a common set of exponents (the lower one for
    /// each kernel) and returns the aligned coefficients and exponents.
    fn align(
        &self,
        other: &KernelPoly,
    ) -> Result<(RationalFunction, RationalFunction, Vec<(MultiPoly, SymbolicExponent)>), AlgebraError> {
        let kernels_a: Vec<&MultiPoly> = self.factors.iter().map(|f| &f.0).collect();
        let kernels_b: Vec<&MultiPoly> = other.factors.iter().map(|f| &f.0).collect();
        if kernels_a != kernels_b {
            return Err(AlgebraError::IncomparableKernels {
                left: self.describe_kernels(),
                right: other.describe_kernels(),
            });
        }
        let mut ca = self.coeff.clone();
        let mut cb = other.coeff.clone();
        let mut common = Vec::with_capacity(self.factors.len());
        for ((k, ea), (_, eb)) in self.factors.iter().zip(&other.factors) {
            let diff = ea.integer_difference(eb).ok_or_else(|| AlgebraError::ExponentMismatch {
                kernel: super::render_poly(k),
                left: ea.to_string(),
                right: eb.to_string(),
            })?;
            match diff.cmp(&0) {
                Ordering::Greater => {
                    ca = ca.mul_poly(&k.pow(diff as u32));
                    common.push((k.clone(), eb.clone()));
                }
                Ordering::Less => {
                    cb = cb.mul_poly(&k.pow((-diff) as u32));
                    common.push((k.clone(), ea.clone()));
                }
                Ordering::Equal => common.push((k.clone(), ea.clone())),
            }
        }
        Ok((ca, cb, common))
    }

    fn describe_kernels(&self) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(k, e)| format!("({})^({})", super::render_poly(k), e))
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn add(&self, other: &KernelPoly) -> Result<KernelPoly, AlgebraError> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let (ca, cb, common) = self.align(other)?;
        Ok(KernelPoly::new(&ca + &cb, common))
    }

    pub fn sub(&self, other: &KernelPoly) -> Result<KernelPoly, AlgebraError> {
        self.add(&other.scale(&RationalFunction::int(-1)))
    }

    /// Substitutes values for variables in the coefficient and the kernels.
    pub fn substitute(&self, bindings: &[(Var, RationalFunction)]) -> Result<KernelPoly, AlgebraError> {
        let coeff = self.coeff.substitute(bindings)?;
        let mut factors = Vec::with_capacity(self.factors.len());
        for (k, e) in &self.factors {
            let k2 = RationalFunction::from_poly(k.clone()).substitute(bindings)?;
            let degenerate = || AlgebraError::KernelDegenerate {
                kernel: super::render_poly(k),
            };
            let k2 = k2.to_poly().map_err(|_| degenerate())?;
            if k2.is_one() {
                continue;
            }
            let (c, prim) = k2.primitive_part();
            if !c.is_integer() || c.numer() != &1.into() || prim.is_constant() {
                return Err(degenerate());
            }
            factors.push((prim, e.clone()));
        }
        Ok(KernelPoly::new(coeff, factors))
    }

    pub fn eval_complex(&self, values: &[Complex64; NVARS]) -> Complex64 {
        let mut acc = self.coeff.eval_complex(values);
        for (k, e) in &self.factors {
            acc *= k.eval_complex(values).powc(e.eval(values));
        }
        acc
    }
}

/// True iff `f - g` vanishes identically after aligning kernel exponents.
pub fn kernel_equal(f: &KernelPoly, g: &KernelPoly) -> Result<bool, AlgebraError> {
    if f.is_zero() && g.is_zero() {
        return Ok(true);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(false);
    }
    Ok(f.sub(g)?.is_zero())
}

impl fmt::Debug for KernelPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KernelPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = super::render_ratfun(&self.coeff);
        if self.factors.is_empty() {
            return f.write_str(&c);
        }
        write!(f, "({c})")?;
        for (k, e) in &self.factors {
            let exp = super::render_poly(&e.to_poly());
            let exp = if e.to_poly().len() > 1 || e.constant.is_negative() && !e.linear.is_empty() {
                format!("({exp})")
            } else {
                exp
            };
            write!(f, " * ({})^{}", super::render_poly(k), exp)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn kernel() -> MultiPoly {
        let x = MultiPoly::var(Var::X);
        &MultiPoly::one() + &(&x * &x)
    }

    fn minus_lambda(c: i64) -> SymbolicExponent {
        SymbolicExponent::new(c, &[(Var::Lambda, int(-1))])
    }

    #[test]
    fn chain_rule() {
        let f = KernelPoly::single(RationalFunction::one(), kernel(), minus_lambda(0));
        let d = f.derivative(Var::X);
        let lx = &MultiPoly::var(Var::Lambda) * &MultiPoly::var(Var::X);
        let expected = KernelPoly::single(RationalFunction::from_poly(lx.scale(&int(-2))), kernel(), minus_lambda(-1));
        assert!(kernel_equal(&d, &expected).unwrap());
        assert_eq!(d, expected);
    }

    #[test]
    fn product_rule_matches_hand_expansion() {
        let x = MultiPoly::var(Var::X);
        let l = MultiPoly::var(Var::Lambda);
        let f = KernelPoly::single(RationalFunction::from_poly(x.clone()), kernel(), minus_lambda(0));
        let d = f.derivative(Var::X);
        // (1+x^2)^{-l-1} * ((1+x^2) - 2 l x^2)
        let coeff = &kernel() - &(&(&l * &x) * &x).scale(&int(2));
        let expected = KernelPoly::single(RationalFunction::from_poly(coeff), kernel(), minus_lambda(-1));
        assert!(kernel_equal(&d, &expected).unwrap());
    }

    #[test]
    fn plain_derivative() {
        let x = MultiPoly::var(Var::X);
        let p = KernelPoly::plain(RationalFunction::from_poly(x.pow(3)));
        let d = p.derivative(Var::X);
        assert_eq!(d, KernelPoly::plain(RationalFunction::from_poly(x.pow(2).scale(&int(3)))));
    }

    #[test]
    fn exponent_alignment() {
        let x = MultiPoly::var(Var::X);
        let f = KernelPoly::single(RationalFunction::from_poly(x.clone()), kernel(), minus_lambda(0));
        let g = KernelPoly::single(RationalFunction::from_poly(&x * &kernel()), kernel(), minus_lambda(-1));
        assert!(kernel_equal(&f, &g).unwrap());
        let h = KernelPoly::single(RationalFunction::from_poly(x.scale(&rat(1, 2))), kernel(), minus_lambda(0));
        assert!(!kernel_equal(&f, &h).unwrap());
    }

    #[test]
    fn zero_equals_zero() {
        let zero = KernelPoly::plain(RationalFunction::zero());
        let zero_k = KernelPoly::single(RationalFunction::zero(), kernel(), minus_lambda(3));
        assert!(kernel_equal(&zero, &zero_k).unwrap());
    }

    #[test]
    fn incomparable_kernels() {
        let x = MultiPoly::var(Var::X);
        let other = &MultiPoly::one() - &(&x * &x);
        let other = other.primitive_part().1;
        let f = KernelPoly::single(RationalFunction::one(), kernel(), minus_lambda(0));
        let g = KernelPoly::single(RationalFunction::one(), other, minus_lambda(0));
        assert!(matches!(kernel_equal(&f, &g), Err(AlgebraError::IncomparableKernels { .. })));
    }

    #[test]
    fn non_integer_exponent_gap() {
        let f = KernelPoly::single(RationalFunction::one(), kernel(), minus_lambda(0));
        let g = KernelPoly::single(RationalFunction::one(), kernel(), SymbolicExponent::new(0, &[(Var::Alpha, int(1))]));
        assert!(matches!(kernel_equal(&f, &g), Err(AlgebraError::ExponentMismatch { .. })));
    }

    #[test]
    fn substitution_collapses_kernel() {
        // (1 + (x - z)^2)^{-l} at z = 0
        let x = MultiPoly::var(Var::X);
        let z = MultiPoly::var(Var::Z);
        let k = &MultiPoly::one() + &(&x - &z).pow(2);
        let f = KernelPoly::single(RationalFunction::one(), k, minus_lambda(0));
        let g = f.substitute(&[(Var::Z, RationalFunction::zero())]).unwrap();
        assert_eq!(g, KernelPoly::single(RationalFunction::one(), kernel(), minus_lambda(0)));
    }
}
