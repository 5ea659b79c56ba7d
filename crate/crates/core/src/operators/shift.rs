//! q-shift operators `Σ c_s T^s` with `T_{q,x}: x -> q x`, `T_{q,y}: y -> q y`
//! and `T_z: z -> u z` (so `T_z^2` is the q-shift in `z`).

use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::{BigRational, MultiPoly, RationalFunction, Var};

use super::diff::render_terms;

/// Shift exponents `(Tqx, Tqy, Tz)`.
pub type ShiftIndex = [i16; 3];

#[derive(Clone, PartialEq, Eq, Default)]
pub struct ShiftOp {
    terms: BTreeMap<ShiftIndex, RationalFunction>,
}

/// `T^s f`.
pub fn shift_function(s: &ShiftIndex, f: &RationalFunction) -> RationalFunction {
    if *s == [0, 0, 0] {
        return f.clone();
    }
    let mut scales = Vec::new();
    if s[0] != 0 {
        scales.push((Var::X, 2 * s[0]));
    }
    if s[1] != 0 {
        scales.push((Var::Y, 2 * s[1]));
    }
    if s[2] != 0 {
        scales.push((Var::Z, s[2]));
    }
    f.scale_by_u(&scales)
}

impl ShiftOp {
    pub fn zero() -> Self {
        ShiftOp::default()
    }

    pub fn identity() -> Self {
        ShiftOp::multiplication(RationalFunction::one())
    }

    pub fn multiplication(c: RationalFunction) -> Self {
        ShiftOp::term(c, [0, 0, 0])
    }

    pub fn term(c: RationalFunction, index: ShiftIndex) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(index, c);
        }
        ShiftOp { terms }
    }

    pub fn tqx(k: i16) -> Self {
        ShiftOp::term(RationalFunction::one(), [k, 0, 0])
    }

    pub fn tqy(k: i16) -> Self {
        ShiftOp::term(RationalFunction::one(), [0, k, 0])
    }

    pub fn tz(k: i16) -> Self {
        ShiftOp::term(RationalFunction::one(), [0, 0, k])
    }

    pub fn terms(&self) -> &BTreeMap<ShiftIndex, RationalFunction> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(terms: &mut BTreeMap<ShiftIndex, RationalFunction>, idx: ShiftIndex, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match terms.remove(&idx) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    terms.insert(idx, s);
                }
            }
            None => {
                terms.insert(idx, c);
            }
        }
    }

    pub fn add(&self, other: &ShiftOp) -> ShiftOp {
        let mut terms = self.terms.clone();
        for (i, c) in &other.terms {
            Self::insert_add(&mut terms, *i, c.clone());
        }
        ShiftOp { terms }
    }

    pub fn neg(&self) -> ShiftOp {
        ShiftOp {
            terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &ShiftOp) -> ShiftOp {
        self.add(&other.neg())
    }

    pub fn left_mul(&self, c: &RationalFunction) -> ShiftOp {
        if c.is_zero() {
            return ShiftOp::zero();
        }
        ShiftOp {
            terms: self.terms.iter().map(|(i, a)| (*i, c * a)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> ShiftOp {
        self.left_mul(&RationalFunction::constant(c.clone()))
    }

    /// `self ∘ other`: `(a T^s)(b T^r) = a (T^s b) T^{s+r}`.
    pub fn compose(&self, other: &ShiftOp) -> ShiftOp {
        let mut terms = BTreeMap::new();
        for (s, a) in &self.terms {
            for (r, b) in &other.terms {
                let idx = [s[0] + r[0], s[1] + r[1], s[2] + r[2]];
                Self::insert_add(&mut terms, idx, a * &shift_function(s, b));
            }
        }
        ShiftOp { terms }
    }

    pub fn commutator(&self, other: &ShiftOp) -> ShiftOp {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn power(&self, k: u32) -> ShiftOp {
        (0..k).fold(ShiftOp::identity(), |acc, _| self.compose(&acc))
    }

    pub fn apply(&self, f: &RationalFunction) -> RationalFunction {
        let parts: Vec<RationalFunction> = self.terms.iter().map(|(s, c)| c * &shift_function(s, f)).collect();
        RationalFunction::sum(parts.iter())
    }

    pub fn apply_poly(&self, f: &MultiPoly) -> RationalFunction {
        self.apply(&RationalFunction::from_poly(f.clone()))
    }

    pub fn substitute_coefficients(
        &self,
        bindings: &[(Var, RationalFunction)],
    ) -> Result<ShiftOp, crate::exactalg::AlgebraError> {
        let mut terms = BTreeMap::new();
        for (i, c) in &self.terms {
            Self::insert_add(&mut terms, *i, c.substitute(bindings)?);
        }
        Ok(ShiftOp { terms })
    }

    pub fn render(&self) -> String {
        let mut items: Vec<(&ShiftIndex, &RationalFunction)> = self.terms.iter().collect();
        let weight = |s: &ShiftIndex| s.iter().map(|e| e.unsigned_abs() as u32).sum::<u32>();
        items.sort_by(|a, b| weight(a.0).cmp(&weight(b.0)).then_with(|| b.0.cmp(a.0)));
        render_terms(items.into_iter().map(|(i, c)| (word(i), c)))
    }
}

fn word(s: &ShiftIndex) -> String {
    let names = ["Tqx", "Tqy", "Tz"];
    let mut parts = Vec::new();
    for (name, &e) in names.iter().zip(s) {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Debug for ShiftOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for ShiftOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RationalFunction {
        RationalFunction::var_pow(Var::U, 2)
    }

    #[test]
    fn shift_times_x() {
        // T_{q,x} ∘ x = q x T_{q,x}
        let x = ShiftOp::multiplication(RationalFunction::var(Var::X));
        let lhs = ShiftOp::tqx(1).compose(&x);
        let rhs = ShiftOp::term(&q() * &RationalFunction::var(Var::X), [1, 0, 0]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tz_is_half_shift() {
        let z = RationalFunction::var(Var::Z);
        assert_eq!(ShiftOp::tz(2).apply(&z), &q() * &z);
        assert_eq!(ShiftOp::tz(-1).apply(&z), &z * &RationalFunction::var_pow(Var::U, -1));
    }

    #[test]
    fn inverse_shifts_cancel() {
        let c = RationalFunction::ratio(
            &(&MultiPoly::var(Var::T) * &MultiPoly::var(Var::X)) - &MultiPoly::var(Var::Y),
            &MultiPoly::var(Var::X) - &MultiPoly::var(Var::Y),
        );
        let op = ShiftOp::term(c.clone(), [1, 0, 0]);
        let back = ShiftOp::tqx(-1).compose(&op);
        assert_eq!(back.terms().len(), 1);
        assert_eq!(back.terms()[&[0, 0, 0]], shift_function(&[-1, 0, 0], &c));
    }

    #[test]
    fn rendering() {
        let op = ShiftOp::identity().sub(&ShiftOp::tqx(1).compose(&ShiftOp::tqy(1)));
        assert_eq!(op.render(), "1 - Tqx*Tqy");
    }
}
