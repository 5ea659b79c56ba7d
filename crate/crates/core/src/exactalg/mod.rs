//! Exact arithmetic: sparse multivariate Laurent polynomials over the
//! rationals, canonical rational functions, and polynomials carrying
//! symbolic powers of fixed kernels.

mod gcd;
mod kernel;
mod poly;
mod ratfun;
mod render;
mod var;

pub use gcd::poly_gcd;
pub use kernel::{kernel_equal, KernelPoly, SymbolicExponent};
pub use poly::{Monomial, MultiPoly};
pub use ratfun::{substitute, RationalFunction};
pub use render::{render_poly, render_ratfun};
pub use var::{Var, NSPATIAL, NVARS};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomial is not divisible by {divisor}")]
    NotDivisible { divisor: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("kernel sets differ: {left} vs {right}")]
    IncomparableKernels { left: String, right: String },
    #[error("exponents of kernel {kernel} differ by a non-integer: {left} vs {right}")]
    ExponentMismatch {
        kernel: String,
        left: String,
        right: String,
    },
    #[error("polynomial is not symmetric under x <-> y")]
    NotSymmetric,
    #[error("kernel {kernel} degenerates under substitution")]
    KernelDegenerate { kernel: String },
    #[error("expected a polynomial, found denominator {den}")]
    NotPolynomial { den: String },
}

/// Shorthand for a rational constant `num/den`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer constant.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
