//! Differential and q-shift operators with rational-function coefficients.
//!
//! Composition is rightmost-first: `a.compose(&b)` applies `b`, then `a`.

mod diff;
mod named;
mod shift;

use std::fmt;

use thiserror::Error;

use crate::exactalg::{render_ratfun, AlgebraError, MultiPoly, RationalFunction};

pub use diff::{DerivIndex, DiffOp};
pub use named::*;
pub use shift::{shift_function, ShiftIndex, ShiftOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("cannot combine a differential operator with a shift operator")]
    MixedClasses,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Either operator class, for callers that build operators dynamically.
#[derive(Clone, PartialEq, Eq)]
pub enum Operator {
    Diff(DiffOp),
    Shift(ShiftOp),
    /// Multiplication by a function; combines with either class.
    Scalar(RationalFunction),
}

/// An eigenvalue or ladder factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderConstant {
    pub value: RationalFunction,
}

impl LadderConstant {
    pub fn new(value: RationalFunction) -> Self {
        LadderConstant { value }
    }
}

impl Operator {
    fn as_diff(&self) -> Option<DiffOp> {
        match self {
            Operator::Diff(d) => Some(d.clone()),
            Operator::Scalar(c) => Some(DiffOp::multiplication(c.clone())),
            Operator::Shift(_) => None,
        }
    }

    fn as_shift(&self) -> Option<ShiftOp> {
        match self {
            Operator::Shift(s) => Some(s.clone()),
            Operator::Scalar(c) => Some(ShiftOp::multiplication(c.clone())),
            Operator::Diff(_) => None,
        }
    }

    fn combine(
        &self,
        other: &Operator,
        scalar: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction,
        diff: impl Fn(&DiffOp, &DiffOp) -> DiffOp,
        shift: impl Fn(&ShiftOp, &ShiftOp) -> ShiftOp,
    ) -> Result<Operator, OperatorError> {
        match (self, other) {
            (Operator::Scalar(a), Operator::Scalar(b)) => Ok(Operator::Scalar(scalar(a, b))),
            (Operator::Shift(_), _) | (_, Operator::Shift(_)) => {
                let a = self.as_shift().ok_or(OperatorError::MixedClasses)?;
                let b = other.as_shift().ok_or(OperatorError::MixedClasses)?;
                Ok(Operator::Shift(shift(&a, &b)))
            }
            _ => {
                let a = self.as_diff().ok_or(OperatorError::MixedClasses)?;
                let b = other.as_diff().ok_or(OperatorError::MixedClasses)?;
                Ok(Operator::Diff(diff(&a, &b)))
            }
        }
    }

    pub fn compose(&self, other: &Operator) -> Result<Operator, OperatorError> {
        self.combine(other, |a, b| a * b, DiffOp::compose, ShiftOp::compose)
    }

    pub fn add(&self, other: &Operator) -> Result<Operator, OperatorError> {
        self.combine(other, |a, b| a + b, DiffOp::add, ShiftOp::add)
    }

    pub fn sub(&self, other: &Operator) -> Result<Operator, OperatorError> {
        self.combine(other, |a, b| a - b, DiffOp::sub, ShiftOp::sub)
    }

    pub fn commutator(&self, other: &Operator) -> Result<Operator, OperatorError> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn neg(&self) -> Operator {
        match self {
            Operator::Diff(d) => Operator::Diff(d.neg()),
            Operator::Shift(s) => Operator::Shift(s.neg()),
            Operator::Scalar(c) => Operator::Scalar(-c),
        }
    }

    pub fn apply(&self, f: &RationalFunction) -> RationalFunction {
        match self {
            Operator::Diff(d) => d.apply(f),
            Operator::Shift(s) => s.apply(f),
            Operator::Scalar(c) => c * f,
        }
    }

    /// Application when the result is claimed to be a polynomial in the
    /// spatial variables.
    pub fn apply_polynomial(&self, f: &MultiPoly) -> Result<RationalFunction, OperatorError> {
        let r = self.apply(&RationalFunction::from_poly(f.clone()));
        expect_spatial_polynomial(&r)?;
        Ok(r)
    }

    pub fn render(&self) -> String {
        match self {
            Operator::Diff(d) => d.render(),
            Operator::Shift(s) => s.render(),
            Operator::Scalar(c) => render_ratfun(c),
        }
    }
}

/// Errors with `NotDivisible` when `r` has spatial variables in its
/// denominator.
pub fn expect_spatial_polynomial(r: &RationalFunction) -> Result<(), AlgebraError> {
    if r.den_has_spatial() {
        return Err(AlgebraError::NotDivisible {
            divisor: render_ratfun(&RationalFunction::from_poly(r.denom().clone())),
        });
    }
    Ok(())
}

/// Splits a coefficient into sign and a factor that can precede `*word`.
pub(crate) fn render_coefficient(c: &RationalFunction) -> (bool, String) {
    let neg = c.numer().len() == 1 && num_traits::Signed::is_negative(&c.numer().leading_coeff());
    let body = render_ratfun(&if neg { -c } else { c.clone() });
    if body.contains(' ') {
        (neg, format!("({body})"))
    } else {
        (neg, body)
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
