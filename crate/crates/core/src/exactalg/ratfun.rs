use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gcd::gcd_normalized;
use super::poly::{Monomial, MultiPoly};
use super::var::{Var, NVARS};
use super::AlgebraError;

/// Quotient of two polynomials in canonical form.
///
/// Invariants: `gcd(num, den) = 1`; `den` is nonzero, has coprime integer
/// coefficients and a positive leading coefficient; `den` is not divisible
/// by `z` (all powers of the Laurent variable live in `num`). Two equal
/// values therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let zmin = den.min_degree(Var::Z);
        let (mut num, mut den) = if zmin != 0 {
            (num.shift(Var::Z, -zmin), den.shift(Var::Z, -zmin))
        } else {
            (num, den)
        };
        if let Some(c) = den.as_constant() {
            return RationalFunction {
                num: num.scale(&c.recip()),
                den: MultiPoly::one(),
            };
        }
        let g = gcd_normalized(&num, &den);
        if !g.is_one() {
            num = num.divide_exact(&g).expect("gcd divides numerator");
            den = den.divide_exact(&g).expect("gcd divides denominator");
        }
        Self::normalize_unit(num, den)
    }

    /// `num / Π factors`, reduced by trial division when every factor is
    /// linear (hence irreducible) and free of `z`, which avoids a
    /// multivariate gcd. Other factor sets fall back to the general path.
    pub fn from_factored(num: MultiPoly, factors: &[MultiPoly]) -> Result<Self, AlgebraError> {
        let mut num = num;
        let mut scale = BigRational::one();
        let mut linear = Vec::new();
        let mut general = MultiPoly::one();
        for f in factors {
            if f.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            if let Some(c) = f.as_constant() {
                scale *= c;
            } else if f.total_degree() == 1 && !f.contains_var(Var::Z) {
                linear.push(f.clone());
            } else {
                general = &general * f;
            }
        }
        num = num.scale(&scale.recip());
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if !general.is_one() {
            let den = linear.iter().fold(general, |acc, f| &acc * f);
            return Self::new(num, den);
        }
        let mut den = MultiPoly::one();
        for f in linear {
            match num.divide_exact(&f) {
                Ok(q) => num = q,
                Err(_) => den = &den * &f,
            }
        }
        Ok(Self::normalize_unit(num, den))
    }

    /// Fixes the scalar and `z`-power ambiguity of coprime `num/den`.
    fn normalize_unit(num: MultiPoly, den: MultiPoly) -> Self {
        let zmin = den.min_degree(Var::Z);
        let (num, den) = if zmin != 0 {
            (num.shift(Var::Z, -zmin), den.shift(Var::Z, -zmin))
        } else {
            (num, den)
        };
        let (c, den) = den.primitive_part();
        let num = if c.is_one() { num } else { num.scale(&c.recip()) };
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFunction {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(MultiPoly::int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    /// `v^e`; negative powers of non-Laurent variables go to the denominator.
    pub fn var_pow(v: Var, e: i16) -> Self {
        if e >= 0 || v.is_laurent() {
            Self::from_poly(MultiPoly::var_pow(v, e))
        } else {
            RationalFunction {
                num: MultiPoly::one(),
                den: MultiPoly::var_pow(v, -e),
            }
        }
    }

    /// Builds `num/den`, panicking on a zero denominator. For constants whose
    /// denominators are known nonzero.
    pub fn ratio(num: MultiPoly, den: MultiPoly) -> Self {
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// The polynomial value, or `NotPolynomial` if a denominator remains.
    pub fn to_poly(&self) -> Result<MultiPoly, AlgebraError> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(AlgebraError::NotPolynomial {
                den: super::render_poly(&self.den),
            })
        }
    }

    /// True when the denominator involves a spatial variable.
    pub fn den_has_spatial(&self) -> bool {
        self.den.has_spatial()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalize_unit(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        if self.den.is_one() {
            return Self::from_poly(&self.num * p);
        }
        let g = gcd_normalized(p, &self.den);
        if g.is_one() {
            return Self::normalize_unit(&self.num * p, self.den.clone());
        }
        let p2 = p.divide_exact(&g).expect("gcd divides");
        let d2 = self.den.divide_exact(&g).expect("gcd divides");
        Self::normalize_unit(&self.num * &p2, d2)
    }

    pub fn div_poly(&self, p: &MultiPoly) -> Result<Self, AlgebraError> {
        if p.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self * &Self::ratio(MultiPoly::one(), p.clone()))
    }

    pub fn pow(&self, e: i32) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = e.unsigned_abs();
        // coprime parts stay coprime under powers
        Ok(Self::normalize_unit(base.num.pow(k), base.den.pow(k)))
    }

    pub fn derivative(&self, v: Var) -> Self {
        if !self.den.contains_var(v) {
            let dn = self.num.derivative(v);
            if self.den.is_one() {
                return Self::from_poly(dn);
            }
            return Self::canonical(dn, self.den.clone());
        }
        let dn = self.num.derivative(v);
        let dd = self.den.derivative(v);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Self::canonical(num, &self.den * &self.den)
    }

    /// Substitutes rational functions for variables.
    pub fn substitute(&self, bindings: &[(Var, RationalFunction)]) -> Result<Self, AlgebraError> {
        let n = substitute(&self.num, bindings)?;
        if self.den.is_one() {
            return Ok(n);
        }
        let d = substitute(&self.den, bindings)?;
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        &n / &d
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        Self::canonical(self.num.swap_vars(a, b), self.den.swap_vars(a, b))
    }

    /// Substitutes `v -> u^{k} v` for each listed variable.
    pub fn scale_by_u(&self, scales: &[(Var, i16)]) -> Self {
        let (n, ln) = self.num.scale_by_u(scales);
        let (d, ld) = self.den.scale_by_u(scales);
        // value = (n u^-ln) / (d u^-ld) = n u^ld / (d u^ln)
        let n = n.shift(Var::U, ld);
        let d = d.shift(Var::U, ln);
        Self::canonical(n, d)
    }

    pub fn eval_complex(&self, values: &[Complex64; NVARS]) -> Complex64 {
        self.num.eval_complex(values) / self.den.eval_complex(values)
    }

    /// Sum of a sequence over a common denominator with one final reduction.
    pub fn sum<'a, I: IntoIterator<Item = &'a RationalFunction>>(items: I) -> Self {
        let items: Vec<&RationalFunction> = items.into_iter().filter(|r| !r.is_zero()).collect();
        match items.len() {
            0 => return Self::zero(),
            1 => return items[0].clone(),
            _ => {}
        }
        let mut den = MultiPoly::one();
        for r in &items {
            if r.den.is_one() || r.den == den {
                continue;
            }
            let g = gcd_normalized(&den, &r.den);
            let q = r.den.divide_exact(&g).expect("gcd divides");
            den = &den * &q;
        }
        let mut num = MultiPoly::zero();
        for r in &items {
            let f = if r.den == den {
                MultiPoly::one()
            } else {
                den.divide_exact(&r.den).expect("lcm is a multiple")
            };
            num = &num + &(&r.num * &f);
        }
        Self::canonical(num, den)
    }

    /// Groups by spatial monomial: `sum_m c_m(params) * m`. Requires a
    /// denominator free of spatial variables.
    pub fn split_spatial(&self) -> Option<Vec<(Monomial, RationalFunction)>> {
        if self.den.has_spatial() {
            return None;
        }
        Some(
            self.num
                .split_spatial()
                .into_iter()
                .map(|(m, c)| (m, Self::canonical(c, self.den.clone())))
                .collect(),
        )
    }
}

/// Substitutes rational functions for variables of a polynomial.
///
/// All terms are brought over the common denominator
/// `prod_v n_v^{-lo_v} d_v^{hi_v}` before a single reduction.
pub fn substitute(p: &MultiPoly, bindings: &[(Var, RationalFunction)]) -> Result<RationalFunction, AlgebraError> {
    if bindings.is_empty() || p.is_zero() {
        return Ok(RationalFunction::from_poly(p.clone()));
    }
    if bindings.iter().all(|(_, r)| r.as_constant().is_some()) {
        let consts: Vec<(Var, BigRational)> = bindings
            .iter()
            .map(|(v, r)| (*v, r.as_constant().unwrap()))
            .collect();
        for (v, c) in &consts {
            if c.is_zero() && p.min_degree(*v) < 0 {
                return Err(AlgebraError::DivisionByZero);
            }
        }
        return Ok(RationalFunction::from_poly(p.eval_partial(&consts)));
    }
    struct Binding<'a> {
        var: Var,
        lo: i16,
        hi: i16,
        num_pows: Vec<MultiPoly>,
        den_pows: Vec<MultiPoly>,
        _r: &'a RationalFunction,
    }
    let mut bs = Vec::with_capacity(bindings.len());
    for (v, r) in bindings {
        let lo = p.min_degree(*v).min(0);
        let hi = p.degree(*v).max(0);
        if lo < 0 && r.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let span = (hi - lo) as usize;
        let mut num_pows = vec![MultiPoly::one()];
        let mut den_pows = vec![MultiPoly::one()];
        for i in 0..span {
            num_pows.push(&num_pows[i] * &r.num);
            den_pows.push(&den_pows[i] * &r.den);
        }
        bs.push(Binding {
            var: *v,
            lo,
            hi,
            num_pows,
            den_pows,
            _r: r,
        });
    }
    let mut total = MultiPoly::zero();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut term = MultiPoly::one();
        for b in &bs {
            let e = m.exp(b.var);
            rest.set_exp(b.var, 0);
            let np = &b.num_pows[(e - b.lo) as usize];
            let dp = &b.den_pows[(b.hi - e) as usize];
            if !np.is_one() {
                term = &term * np;
            }
            if !dp.is_one() {
                term = &term * dp;
            }
        }
        total = &total + &term.mul_monomial(&rest).scale(c);
    }
    let mut den = MultiPoly::one();
    for b in &bs {
        den = &den * &b.num_pows[(-b.lo) as usize];
        den = &den * &b.den_pows[b.hi as usize];
    }
    RationalFunction::new(total, den)
}

fn add_impl(a: &RationalFunction, b: &RationalFunction, negate: bool) -> RationalFunction {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate { -b } else { b.clone() };
    }
    let combine = |x: &MultiPoly, y: &MultiPoly| if negate { x - y } else { x + y };
    if a.den.is_one() && b.den.is_one() {
        return RationalFunction::from_poly(combine(&a.num, &b.num));
    }
    if a.den == b.den {
        return RationalFunction::canonical(combine(&a.num, &b.num), a.den.clone());
    }
    // Henrici: with g = gcd(b1, b2), only g can share factors with the sum
    let g = gcd_normalized(&a.den, &b.den);
    if g.is_one() {
        let num = combine(&(&a.num * &b.den), &(&b.num * &a.den));
        if num.is_zero() {
            return RationalFunction::zero();
        }
        return RationalFunction::normalize_unit(num, &a.den * &b.den);
    }
    let ad = a.den.divide_exact(&g).expect("gcd divides");
    let bd = b.den.divide_exact(&g).expect("gcd divides");
    let t = combine(&(&a.num * &bd), &(&b.num * &ad));
    if t.is_zero() {
        return RationalFunction::zero();
    }
    let g2 = gcd_normalized(&t, &g);
    let (t, gq) = if g2.is_one() {
        (t, g)
    } else {
        (
            t.divide_exact(&g2).expect("gcd divides"),
            g.divide_exact(&g2).expect("gcd divides"),
        )
    };
    RationalFunction::normalize_unit(t, &(&ad * &bd) * &gq)
}

fn mul_impl(a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
    if a.is_zero() || b.is_zero() {
        return RationalFunction::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return RationalFunction::from_poly(&a.num * &b.num);
    }
    let (an, bd) = cancel(&a.num, &b.den);
    let (bn, ad) = cancel(&b.num, &a.den);
    RationalFunction::normalize_unit(&an * &bn, &ad * &bd)
}

fn cancel(n: &MultiPoly, d: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if d.is_one() || n.is_constant() {
        return (n.clone(), d.clone());
    }
    let g = gcd_normalized(n, d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (
            n.divide_exact(&g).expect("gcd divides"),
            d.divide_exact(&g).expect("gcd divides"),
        )
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        add_impl(self, rhs, false)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        add_impl(self, rhs, true)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        mul_impl(self, rhs)
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = Result<RationalFunction, AlgebraError>;
    fn div(self, rhs: &RationalFunction) -> Self::Output {
        Ok(mul_impl(self, &rhs.recip()?))
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<MultiPoly> for RationalFunction {
    fn from(p: MultiPoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl From<Var> for RationalFunction {
    fn from(v: Var) -> Self {
        RationalFunction::var(v)
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        RationalFunction::int(n)
    }
}

impl From<BigRational> for RationalFunction {
    fn from(c: BigRational) -> Self {
        RationalFunction::constant(c)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render_ratfun(self))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render_ratfun(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn v(var: Var) -> RationalFunction {
        RationalFunction::var(var)
    }

    #[test]
    fn cancels_common_factors() {
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        let r = RationalFunction::new(&x * &x - &y * &y, (&x - &y).scale(&int(2))).unwrap();
        assert_eq!(r.numer(), &(&x + &y).scale(&rat(1, 2)));
        assert!(r.denom().is_one());
    }

    #[test]
    fn denominator_is_primitive_and_positive() {
        let x = MultiPoly::var(Var::X);
        let r = RationalFunction::new(MultiPoly::one(), (&x * &MultiPoly::int(-6)) + MultiPoly::int(4)).unwrap();
        assert_eq!(r.denom(), &(x.scale(&int(3)) - MultiPoly::int(2)));
        assert_eq!(r.numer(), &MultiPoly::constant(rat(-1, 2)));
    }

    #[test]
    fn equal_values_equal_representations() {
        let a = &v(Var::Alpha) + &RationalFunction::one();
        let b = &v(Var::Beta) - &RationalFunction::int(2);
        let left = (&RationalFunction::one() / &a).unwrap() + (&RationalFunction::one() / &b).unwrap();
        let right = (&(&a + &b) / &(&a * &b)).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn z_powers_live_in_numerator() {
        let z = MultiPoly::var(Var::Z);
        let zinv = MultiPoly::var_pow(Var::Z, -1);
        // 1/(z - z^-1) = z/(z^2 - 1)
        let r = RationalFunction::new(MultiPoly::one(), &z - &zinv).unwrap();
        assert_eq!(r.numer(), &z);
        assert_eq!(r.denom(), &(&z * &z - MultiPoly::one()));
    }

    #[test]
    fn substitution_examples() {
        let x = MultiPoly::var(Var::X);
        let a = MultiPoly::var(Var::Alpha);
        let p = &(&x * &x) + &(&a * &x);
        let r = substitute(&p, &[(Var::X, RationalFunction::one())]).unwrap();
        assert_eq!(r, RationalFunction::from_poly(&MultiPoly::one() + &a));

        let l = MultiPoly::var(Var::Lambda);
        let z = MultiPoly::var(Var::Z);
        let zinv = MultiPoly::var_pow(Var::Z, -1);
        let half_joukowski = RationalFunction::from_poly((&z + &zinv).scale(&rat(1, 2)));
        let r = substitute(&(&l * &x).scale(&int(2)), &[(Var::X, half_joukowski)]).unwrap();
        assert_eq!(r, RationalFunction::from_poly(&l * &(&z + &zinv)));

        let y = MultiPoly::var(Var::Y);
        let r = substitute(&(&x - &y), &[(Var::X, v(Var::X)), (Var::Y, v(Var::X))]).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn substitution_into_laurent() {
        // z^-2 + z with z -> 1/(x+1)
        let p = &MultiPoly::var_pow(Var::Z, -2) + &MultiPoly::var(Var::Z);
        let xp1 = &v(Var::X) + &RationalFunction::one();
        let r = substitute(&p, &[(Var::Z, RationalFunction::one().div_poly(xp1.numer()).unwrap())]).unwrap();
        let expected = &xp1.pow(2).unwrap() + &xp1.recip().unwrap();
        assert_eq!(r, expected);
        // z^-1 with z -> 0 is a division by zero
        let bad = substitute(&MultiPoly::var_pow(Var::Z, -1), &[(Var::Z, RationalFunction::zero())]);
        assert_eq!(bad, Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dx [1/(1+x^2)] = -2x/(1+x^2)^2
        let x = MultiPoly::var(Var::X);
        let k = &MultiPoly::one() + &(&x * &x);
        let r = RationalFunction::new(MultiPoly::one(), k.clone()).unwrap();
        let d = r.derivative(Var::X);
        let expected = RationalFunction::new(x.scale(&int(-2)), k.pow(2)).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn shift_by_u() {
        // x/(x - y) under x -> u^2 x
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        let r = RationalFunction::new(x.clone(), &x - &y).unwrap();
        let s = r.scale_by_u(&[(Var::X, 2)]);
        let u2x = &MultiPoly::var_pow(Var::U, 2) * &x;
        assert_eq!(s, RationalFunction::new(u2x.clone(), &u2x - &y).unwrap());
        // z -> u^-1 z moves u into the denominator
        let z = RationalFunction::var(Var::Z);
        let s = z.scale_by_u(&[(Var::Z, -1)]);
        assert_eq!(s, RationalFunction::new(MultiPoly::var(Var::Z), MultiPoly::var(Var::U)).unwrap());
    }

    #[test]
    fn sum_matches_pairwise() {
        let items: Vec<RationalFunction> = (1..5)
            .map(|i| RationalFunction::new(MultiPoly::one(), &MultiPoly::var(Var::Gamma) + &MultiPoly::int(i)).unwrap())
            .collect();
        let pairwise = items.iter().fold(RationalFunction::zero(), |acc, r| &acc + r);
        assert_eq!(RationalFunction::sum(&items), pairwise);
    }
}
