//! The fixed variable table.
//!
//! Every polynomial in the crate lives in the same ring, so exponent vectors
//! have a fixed arity. Spatial variables come first, parameters after. The
//! nome `q` is not a variable: it is represented as `u^2`, which makes every
//! half-integer power of `q` an ordinary monomial in `u`.

use std::fmt;

/// Number of variables in the table.
pub const NVARS: usize = 12;

/// Number of spatial variables (the prefix of [`Var::ALL`]).
pub const NSPATIAL: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    W,
    Xi,
    Eta,
    Alpha,
    Beta,
    Gamma,
    Lambda,
    T,
    /// `u = q^{1/2}`.
    U,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::X,
        Var::Y,
        Var::Z,
        Var::W,
        Var::Xi,
        Var::Eta,
        Var::Alpha,
        Var::Beta,
        Var::Gamma,
        Var::Lambda,
        Var::T,
        Var::U,
    ];

    pub const SPATIAL: [Var; NSPATIAL] = [Var::X, Var::Y, Var::Z, Var::W, Var::Xi, Var::Eta];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    #[inline]
    pub fn is_spatial(self) -> bool {
        self.index() < NSPATIAL
    }

    #[inline]
    pub fn is_parameter(self) -> bool {
        !self.is_spatial()
    }

    /// Only `z` may carry negative exponents.
    #[inline]
    pub fn is_laurent(self) -> bool {
        self == Var::Z
    }

    /// ASCII spelling used by the renderer and the expression language.
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::W => "w",
            Var::Xi => "xi",
            Var::Eta => "eta",
            Var::Alpha => "a",
            Var::Beta => "b",
            Var::Gamma => "g",
            Var::Lambda => "l",
            Var::T => "t",
            Var::U => "u",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for v in Var::ALL {
            assert_eq!(Var::from_name(v.name()), Some(v));
            assert_eq!(Var::from_index(v.index()), v);
        }
        assert_eq!(Var::from_name("q"), None);
    }

    #[test]
    fn only_z_is_laurent() {
        let laurent: Vec<_> = Var::ALL.iter().filter(|v| v.is_laurent()).collect();
        assert_eq!(laurent, vec![&Var::Z]);
        assert!(Var::SPATIAL.iter().all(|v| v.is_spatial()));
        assert!(Var::U.is_parameter());
    }
}
