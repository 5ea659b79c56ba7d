use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::var::{Var, NVARS};
use super::AlgebraError;

/// Exponent vector over the fixed variable table.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `x`, then `y`, and so on down to `u`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [i16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, e: i16) -> Self {
        let mut m = Monomial::ONE;
        m.0[v.index()] = e;
        m
    }

    pub fn from_pairs(pairs: &[(Var, i16)]) -> Self {
        let mut m = Monomial::ONE;
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    #[inline]
    pub fn exp(&self, v: Var) -> i16 {
        self.0[v.index()]
    }

    #[inline]
    pub fn set_exp(&mut self, v: Var, e: i16) {
        self.0[v.index()] = e;
    }

    pub fn total_degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0i16; NVARS];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i] + other.0[i];
        }
        Monomial(out)
    }

    /// `self / other`, or `None` when a non-Laurent exponent would go negative.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0i16; NVARS];
        for (i, o) in out.iter_mut().enumerate() {
            let e = self.0[i] - other.0[i];
            if e < 0 && !Var::from_index(i).is_laurent() {
                return None;
            }
            *o = e;
        }
        Some(Monomial(out))
    }

    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut out = [0i16; NVARS];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i].min(other.0[i]);
        }
        Monomial(out)
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Only the spatial part.
    pub fn spatial(&self) -> Monomial {
        let mut m = *self;
        for e in m.0.iter_mut().skip(super::NSPATIAL) {
            *e = 0;
        }
        m
    }

    /// Only the parameter part.
    pub fn parameters(&self) -> Monomial {
        let mut m = *self;
        for e in m.0.iter_mut().take(super::NSPATIAL) {
            *e = 0;
        }
        m
    }

    pub fn has_spatial(&self) -> bool {
        self.0[..super::NSPATIAL].iter().any(|&e| e != 0)
    }

    pub fn swap(&self, a: Var, b: Var) -> Monomial {
        let mut m = *self;
        m.0.swap(a.index(), b.index());
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e != 0 {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{v}^{e}")?;
                }
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending monomial order with no zero
/// coefficients, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, BigRational)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MultiPoly {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1), BigRational::one())
    }

    pub fn var_pow(v: Var, e: i16) -> Self {
        Self::monomial(Monomial::var(v, e), BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        debug_assert!(valid_monomial(&m));
        if c.is_zero() {
            Self::zero()
        } else {
            MultiPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(iter: I) -> Self {
        let mut map: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in iter {
            debug_assert!(valid_monomial(&m));
            match map.get_mut(&m) {
                Some(acc) => *acc += c,
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(map)
    }

    fn from_map(map: HashMap<Monomial, BigRational>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, BigRational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of a given monomial.
    pub fn coeff(&self, m: &Monomial) -> BigRational {
        match self.terms.binary_search_by(|t| m.cmp(&t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    pub fn degree(&self, v: Var) -> i16 {
        self.terms.iter().map(|t| t.0.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self, v: Var) -> i16 {
        self.terms.iter().map(|t| t.0.exp(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> i32 {
        self.terms
            .first()
            .map(|t| t.0.total_degree())
            .unwrap_or(0)
    }

    /// Variables occurring with a nonzero exponent.
    pub fn vars(&self) -> Vec<Var> {
        let mask = self.var_mask();
        Var::ALL
            .iter()
            .copied()
            .filter(|v| mask & (1 << v.index()) != 0)
            .collect()
    }

    pub fn var_mask(&self) -> u16 {
        let mut mask = 0u16;
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    mask |= 1 << i;
                }
            }
        }
        mask
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|t| t.0.exp(v) != 0)
    }

    pub fn has_spatial(&self) -> bool {
        self.terms.iter().any(|t| t.0.has_spatial())
    }

    /// True when no variable carries a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_polynomial())
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some(first) = it.next() else {
            return Monomial::ONE;
        };
        it.fold(first.0, |acc, t| acc.meet(&t.0))
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        let terms: Vec<_> = self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect();
        debug_assert!(terms.iter().all(|t| valid_monomial(&t.0)));
        MultiPoly { terms }
    }

    /// Divides every term by a monomial; `None` if some exponent would become
    /// negative on a non-Laurent variable.
    pub fn div_monomial(&self, m: &Monomial) -> Option<MultiPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, c) in &self.terms {
            terms.push((a.div(m)?, c.clone()));
        }
        Some(MultiPoly { terms })
    }

    /// Multiplies by `v^k` (k may be negative for Laurent variables).
    pub fn shift(&self, v: Var, k: i16) -> MultiPoly {
        if k == 0 {
            return self.clone();
        }
        self.mul_monomial(&Monomial::var(v, k))
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, v: Var) -> MultiPoly {
        let i = v.index();
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] != 0)
            .map(|(m, c)| {
                let mut m2 = *m;
                m2.0[i] -= 1;
                (m2, c * BigRational::from_integer(BigInt::from(m.0[i])))
            })
            .collect();
        MultiPoly { terms }
    }

    /// Rational content: gcd of numerators over lcm of denominators, positive.
    pub fn content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(num, den)
    }

    /// Splits off the content with the sign of the leading coefficient, so the
    /// remaining factor has coprime integer coefficients and positive leading
    /// coefficient.
    pub fn primitive_part(&self) -> (BigRational, MultiPoly) {
        if self.is_zero() {
            return (BigRational::zero(), MultiPoly::zero());
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        if c.is_one() {
            return (c, self.clone());
        }
        let inv = c.recip();
        (c, self.scale(&inv))
    }

    /// True when all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Groups terms by the exponent of `v`; each group has `v` removed.
    /// Returned in ascending exponent order.
    pub fn coefficients_in(&self, v: Var) -> Vec<(i16, MultiPoly)> {
        let mut groups: BTreeMap<i16, Vec<(Monomial, BigRational)>> = BTreeMap::new();
        let i = v.index();
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let e = m2.0[i];
            m2.0[i] = 0;
            groups.entry(e).or_default().push((m2, c.clone()));
        }
        groups
            .into_iter()
            .map(|(e, ts)| {
                // removing one variable from a sorted list can reorder terms
                let mut ts = ts;
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                (e, MultiPoly { terms: ts })
            })
            .collect()
    }

    /// Groups terms by their spatial monomial; each coefficient is a
    /// polynomial in the parameters only. Ascending in the spatial monomial.
    pub fn split_spatial(&self) -> Vec<(Monomial, MultiPoly)> {
        let mut groups: BTreeMap<Monomial, Vec<(Monomial, BigRational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.spatial())
                .or_default()
                .push((m.parameters(), c.clone()));
        }
        groups
            .into_iter()
            .map(|(s, mut ts)| {
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                (s, MultiPoly { terms: ts })
            })
            .collect()
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.swap(a, b), c.clone())))
    }

    /// Multiplies each term by `u^(sum_v k_v * e_v)`, i.e. substitutes
    /// `v -> u^{k_v} v`. Returns the result together with the power of `u`
    /// that was factored out to keep `u` exponents nonnegative (the true
    /// value is `result * u^{-lift}`).
    pub fn scale_by_u(&self, scales: &[(Var, i16)]) -> (MultiPoly, i16) {
        let ui = Var::U.index();
        let mut terms: Vec<(Monomial, BigRational)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m2 = *m;
                let extra: i16 = scales.iter().map(|&(v, k)| k * m.exp(v)).sum();
                m2.0[ui] += extra;
                (m2, c.clone())
            })
            .collect();
        let min_u = terms.iter().map(|t| t.0 .0[ui]).min().unwrap_or(0);
        let lift = if min_u < 0 { -min_u } else { 0 };
        if lift > 0 {
            for t in terms.iter_mut() {
                t.0 .0[ui] += lift;
            }
        }
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        (MultiPoly { terms }, lift)
    }

    /// Exact quotient `self / d`; fails with `NotDivisible` when `d` is not a
    /// factor. `z` is treated as a unit.
    pub fn divide_exact(&self, d: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(MultiPoly::zero());
        }
        if let Some(c) = d.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        let not_div = || AlgebraError::NotDivisible {
            divisor: super::render_poly(d),
        };
        if d.is_monomial() {
            let (m, c) = &d.terms[0];
            return self
                .div_monomial(m)
                .map(|p| p.scale(&c.recip()))
                .ok_or_else(not_div);
        }
        let sa = self.min_degree(Var::Z);
        let sd = d.min_degree(Var::Z);
        let a = self.shift(Var::Z, -sa);
        let b = d.shift(Var::Z, -sd);
        // quick degree screens
        for v in Var::ALL {
            if b.degree(v) > a.degree(v) {
                return Err(not_div());
            }
        }
        let q = a.div_poly(&b).ok_or_else(not_div)?;
        Ok(q.shift(Var::Z, sa - sd))
    }

    /// Multivariate division of polynomials with nonnegative exponents.
    fn div_poly(&self, b: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = b.terms[0].clone();
        let lc_inv = lc.recip();
        let mut rem: BTreeMap<Monomial, BigRational> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let t = m.div(&lm)?;
            if !t.is_polynomial() {
                return None;
            }
            let qc = &c * &lc_inv;
            for (bm, bc) in &b.terms[1..] {
                let key = t.mul(bm);
                let delta = &qc * bc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quotient.push((t, qc));
        }
        Some(MultiPoly { terms: quotient })
    }

    /// Evaluates at complex values given per variable (indexed by `Var::index`).
    pub fn eval_complex(&self, values: &[Complex64; NVARS]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut term = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    term *= values[i].powi(e as i32);
                }
            }
            acc += term;
        }
        acc
    }

    /// Sum of absolute values of the terms at a point; the scale used for
    /// relative cancellation guards.
    pub fn eval_magnitude(&self, values: &[Complex64; NVARS]) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut term = c.to_f64().unwrap_or(f64::NAN).abs();
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    term *= values[i].norm().powi(e as i32);
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes rational constants for some variables.
    pub fn eval_partial(&self, bindings: &[(Var, BigRational)]) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut m2 = *m;
            let mut c2 = c.clone();
            for (v, val) in bindings {
                let e = m2.exp(*v);
                if e != 0 {
                    c2 *= pow_rational(val, e as i32);
                    m2.set_exp(*v, 0);
                }
            }
            (m2, c2)
        }))
    }

    /// Total number of decimal digits in all coefficients (a size measure).
    pub fn coefficient_size(&self) -> usize {
        self.terms
            .iter()
            .map(|(_, c)| (c.numer().bits() + c.denom().bits()) as usize)
            .sum()
    }
}

fn valid_monomial(m: &Monomial) -> bool {
    m.0.iter()
        .enumerate()
        .all(|(i, &e)| e >= 0 || Var::from_index(i).is_laurent())
}

pub(crate) fn pow_rational(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

fn merge(a: &MultiPoly, b: &MultiPoly, negate_b: bool) -> MultiPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (ma, ca) = &a.terms[i];
        let (mb, cb) = &b.terms[j];
        match ma.cmp(mb) {
            Ordering::Greater => {
                out.push((*ma, ca.clone()));
                i += 1;
            }
            Ordering::Less => {
                out.push((*mb, if negate_b { -cb } else { cb.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { ca - cb } else { ca + cb };
                if !c.is_zero() {
                    out.push((*ma, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(
        b.terms[j..]
            .iter()
            .map(|(m, c)| (*m, if negate_b { -c } else { c.clone() })),
    );
    MultiPoly { terms: out }
}

fn multiply(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() || b.is_zero() {
        return MultiPoly::zero();
    }
    if a.terms.len() == 1 {
        let (m, c) = &a.terms[0];
        return b.mul_monomial(m).scale(c);
    }
    if b.terms.len() == 1 {
        let (m, c) = &b.terms[0];
        return a.mul_monomial(m).scale(c);
    }
    let mut map: HashMap<Monomial, BigRational> =
        HashMap::with_capacity(a.terms.len() * b.terms.len());
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let m = ma.mul(mb);
            let p = ca * cb;
            match map.get_mut(&m) {
                Some(acc) => *acc += p,
                None => {
                    map.insert(m, p);
                }
            }
        }
    }
    MultiPoly::from_map(map)
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        merge(self, rhs, false)
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        merge(self, rhs, true)
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        multiply(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for t in self.terms.iter_mut() {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::int(n)
    }
}

impl From<BigRational> for MultiPoly {
    fn from(c: BigRational) -> Self {
        MultiPoly::constant(c)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render_poly(self))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }

    #[test]
    fn difference_of_squares() {
        let p = (x() - y()) * (x() + y());
        let expected = x() * x() - y() * y();
        assert_eq!(p, expected);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn additive_identity() {
        let one_minus_t = MultiPoly::one() - MultiPoly::var(Var::T);
        let p = &one_minus_t * &(x() + y());
        assert_eq!(&p + &MultiPoly::zero(), p);
    }

    #[test]
    fn laurent_cancellation() {
        let z = MultiPoly::var(Var::Z);
        let zinv = MultiPoly::var_pow(Var::Z, -1);
        assert!((z * zinv).is_one());
    }

    #[test]
    fn exact_division() {
        let a = x() * x() - y() * y();
        assert_eq!(a.divide_exact(&(x() - y())).unwrap(), x() + y());
        let cube = x().pow(3) - y().pow(3);
        assert_eq!(
            cube.divide_exact(&(x() - y())).unwrap(),
            x() * x() + x() * y() + y() * y()
        );
        assert!(matches!(
            x().divide_exact(&(x() + y())),
            Err(AlgebraError::NotDivisible { .. })
        ));
        assert_eq!(
            x().divide_exact(&MultiPoly::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn laurent_division() {
        let z = MultiPoly::var(Var::Z);
        let zinv = MultiPoly::var_pow(Var::Z, -1);
        // (z^2 - z^-2) / (z - z^-1) = z + z^-1
        let num = z.pow(2) - zinv.pow(2);
        let q = num.divide_exact(&(&z - &zinv)).unwrap();
        assert_eq!(q, &z + &zinv);
    }

    #[test]
    fn order_is_graded() {
        let a = Monomial::var(Var::X, 2);
        let b = Monomial::from_pairs(&[(Var::Y, 1), (Var::Alpha, 2)]);
        assert!(b > a);
        let c = Monomial::var(Var::Y, 2);
        assert!(a > c);
    }

    #[test]
    fn derivative_and_content() {
        let p = (x().pow(3)).scale(&rat(2, 3)) + x().scale(&rat(4, 3));
        assert_eq!(p.derivative(Var::X), x().pow(2).scale(&rat(2, 1)) + MultiPoly::constant(rat(4, 3)));
        assert_eq!(p.content(), rat(2, 3));
        let (c, pp) = (-p).primitive_part();
        assert_eq!(c, rat(-2, 3));
        assert_eq!(pp, x().pow(3) + x().scale(&rat(2, 1)));
    }

    #[test]
    fn scale_by_u_lifts_negative_powers() {
        let z = MultiPoly::var(Var::Z);
        let zinv = MultiPoly::var_pow(Var::Z, -1);
        let (p, lift) = (&z + &zinv).scale_by_u(&[(Var::Z, -1)]);
        // u^-1 z + u z^-1 = (z + u^2 z^-1) / u
        assert_eq!(lift, 1);
        let u2 = MultiPoly::var_pow(Var::U, 2);
        assert_eq!(p, z + u2 * zinv);
    }
}
