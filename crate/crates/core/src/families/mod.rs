//! Exact constructors for the polynomial families, in the charts used by
//! the identities, plus chart conversion.

mod bc2;
mod gegenbauer;
mod jacobi;
mod qultra;

pub use bc2::{
    bc2_coefficient, bc2_gamma_half, bc2_gamma_half_with, bc2_r, bc2_r_at_gamma, bc2_r_n0, bc2_r_n0_with,
    bc2_r_with, chart_convert, chart_convert_rf, chart_inverse, chart_inverse_rf, jack_z, jack_z_with,
    jack_z_xieta_with, HalfSign,
};
pub use gegenbauer::{
    gegenbauer_fourier, gegenbauer_homog, gegenbauer_homog_with, gegenbauer_homog_xieta_with, gegenbauer_tan,
    gegenbauer_x, gegenbauer_x_with,
};
pub use jacobi::{
    compose_x, jacobi_homog, jacobi_homog_with, jacobi_p, jacobi_p_with, jacobi_r, jacobi_r_with, jacobi_rational,
    jacobi_rational_with,
};
pub use qultra::{cq_ultra_z, homogenize_z, macdonald_j_n0, qbinomial};

use std::fmt;

use thiserror::Error;

use crate::exactalg::{AlgebraError, RationalFunction};
use crate::qseries::QSeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid indices: {0}")]
    InvalidIndices(String),
    #[error("vanishing denominator: {0}")]
    ZeroDenominator(String),
    #[error("value at the origin is {0}, expected 1")]
    Normalization(String),
    #[error(transparent)]
    QSeries(#[from] QSeriesError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    CqUltraZ,
    MacdonaldJ,
    GegenbauerX,
    GegenbauerHomog,
    JacobiP,
    JacobiR,
    JacobiHomog,
    JackZ,
    Bc2R,
    Bc2Half,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chart {
    Z,
    X,
    XY,
    ZW,
    XiEta,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::CqUltraZ,
        Family::MacdonaldJ,
        Family::GegenbauerX,
        Family::GegenbauerHomog,
        Family::JacobiP,
        Family::JacobiR,
        Family::JacobiHomog,
        Family::JackZ,
        Family::Bc2R,
        Family::Bc2Half,
    ];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Family::CqUltraZ => "cqz",
            Family::MacdonaldJ => "jmn",
            Family::GegenbauerX => "gegx",
            Family::GegenbauerHomog => "gegh",
            Family::JacobiP => "jacp",
            Family::JacobiR => "jacr",
            Family::JacobiHomog => "jach",
            Family::JackZ => "jackz",
            Family::Bc2R => "bc2r",
            Family::Bc2Half => "bc2half",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Number of integer indices (`bc2half` takes `n k s` with `s = ±1`
    /// selecting `γ = ±½`).
    pub fn arity(self) -> usize {
        match self {
            Family::JackZ | Family::Bc2R => 2,
            Family::Bc2Half => 3,
            _ => 1,
        }
    }

    pub fn default_chart(self) -> Chart {
        match self {
            Family::CqUltraZ => Chart::Z,
            Family::GegenbauerX | Family::JacobiP | Family::JacobiR => Chart::X,
            Family::MacdonaldJ | Family::GegenbauerHomog | Family::JackZ | Family::Bc2Half => Chart::XY,
            Family::JacobiHomog => Chart::ZW,
            Family::Bc2R => Chart::XiEta,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Chart {
    pub fn name(self) -> &'static str {
        match self {
            Chart::Z => "z",
            Chart::X => "x",
            Chart::XY => "xy",
            Chart::ZW => "zw",
            Chart::XiEta => "xieta",
        }
    }

    pub fn from_name(s: &str) -> Option<Chart> {
        [Chart::Z, Chart::X, Chart::XY, Chart::ZW, Chart::XiEta]
            .into_iter()
            .find(|c| c.name() == s)
    }
}

/// A constructed family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyElement {
    pub family: Family,
    pub indices: Vec<i64>,
    pub chart: Chart,
    pub value: RationalFunction,
}

impl FamilyElement {
    pub fn build(family: Family, indices: &[i64]) -> Result<FamilyElement, FamilyError> {
        if indices.len() != family.arity() {
            return Err(FamilyError::InvalidIndices(format!(
                "{family} takes {} indices, got {}",
                family.arity(),
                indices.len()
            )));
        }
        let nat = |i: usize| -> Result<u32, FamilyError> {
            u32::try_from(indices[i])
                .map_err(|_| FamilyError::InvalidIndices(format!("index {} must be nonnegative", indices[i])))
        };
        let value = match family {
            Family::CqUltraZ => cq_ultra_z(nat(0)?),
            Family::MacdonaldJ => macdonald_j_n0(nat(0)?).into(),
            Family::GegenbauerX => gegenbauer_x(nat(0)?).into(),
            Family::GegenbauerHomog => gegenbauer_homog(nat(0)?).into(),
            Family::JacobiP => jacobi_p(nat(0)?)?.into(),
            Family::JacobiR => jacobi_r(nat(0)?)?,
            Family::JacobiHomog => jacobi_homog(nat(0)?)?.into(),
            Family::JackZ => {
                let (m, l) = (nat(0)?, nat(1)?);
                if l > m {
                    return Err(FamilyError::InvalidIndices(format!("jackz needs m >= l, got ({m}, {l})")));
                }
                jack_z(m, l)?
            }
            Family::Bc2R => bc2_r(nat(0)?, nat(1)?)?,
            Family::Bc2Half => {
                let sign = match indices[2] {
                    -1 => HalfSign::Minus,
                    1 => HalfSign::Plus,
                    s => return Err(FamilyError::InvalidIndices(format!("sign must be 1 or -1, got {s}"))),
                };
                bc2_gamma_half(nat(0)?, nat(1)?, sign)?
            }
        };
        Ok(FamilyElement {
            family,
            indices: indices.to_vec(),
            chart: family.default_chart(),
            value,
        })
    }

    /// Converts between the `(x, y)` and `(ξ, η)` charts.
    pub fn in_chart(&self, chart: Chart) -> Result<FamilyElement, FamilyError> {
        let value = match (self.chart, chart) {
            (a, b) if a == b => self.value.clone(),
            (Chart::XY, Chart::XiEta) => chart_convert_rf(&self.value)?,
            (Chart::XiEta, Chart::XY) => chart_inverse_rf(&self.value),
            (a, b) => {
                return Err(FamilyError::InvalidIndices(format!(
                    "no conversion from chart {} to {}",
                    a.name(),
                    b.name()
                )))
            }
        };
        Ok(FamilyElement {
            chart,
            value,
            ..self.clone()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(Family::from_name(f.name()), Some(f));
        }
        assert_eq!(Chart::from_name("xieta"), Some(Chart::XiEta));
    }

    #[test]
    fn build_and_convert() {
        let e = FamilyElement::build(Family::Bc2R, &[1, 0]).unwrap();
        assert_eq!(e.value.to_string(), "1 - (a+b+2g+3)/(2a+2g+3) * xi");
        let xy = e.in_chart(Chart::XY).unwrap();
        assert_eq!(xy.in_chart(Chart::XiEta).unwrap().value, e.value);
        assert!(FamilyElement::build(Family::JackZ, &[0, 1]).is_err());
        assert!(FamilyElement::build(Family::Bc2Half, &[1, 0, 2]).is_err());
        assert!(FamilyElement::build(Family::GegenbauerX, &[-1]).is_err());
    }
}
