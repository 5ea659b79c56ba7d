//! Deterministic plain-text rendering.
//!
//! Grammar of the output (it re-parses with the command-line expression
//! language):
//!
//! * spatial monomials appear in ascending total degree, lexicographically
//!   descending within a degree (`1 - ... * xi`, `x^2 - y^2`);
//! * each spatial monomial carries a coefficient in the parameters, written
//!   compactly without spaces: `(a+b+2g+3)/(2a+2g+3) * xi`, `2l*x^2`;
//! * parameter-only values are written as a spaced sum, `-2a - 2`;
//! * exponents are explicit integers, `z^-1`; variables are joined by `*`,
//!   and an integer coefficient is juxtaposed with its first variable.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, MultiPoly};
use super::ratfun::RationalFunction;
use super::var::Var;

fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    let order = Var::ALL.iter().filter(|v| v.is_parameter()).chain(Var::SPATIAL.iter());
    for &v in order {
        let e = m.exp(v);
        match e {
            0 => {}
            1 => parts.push(v.name().to_string()),
            _ => parts.push(format!("{}^{}", v.name(), e)),
        }
    }
    parts.join("*")
}

/// A single term with a nonnegative coefficient.
fn term_text(m: &Monomial, c: &BigRational) -> String {
    debug_assert!(!c.is_negative());
    if m.is_one() {
        return c.to_string();
    }
    let mono = monomial_text(m);
    if c.is_one() {
        mono
    } else if c.is_integer() {
        format!("{c}{mono}")
    } else {
        format!("{c}*{mono}")
    }
}

/// Sum of terms in the given order; `sep` decides spacing around signs.
fn sum_text<'a, I: IntoIterator<Item = (&'a Monomial, &'a BigRational)>>(terms: I, spaced: bool) -> String {
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let t = term_text(m, &c.abs());
        match (i, neg, spaced) {
            (0, false, _) => out.push_str(&t),
            (0, true, _) => {
                out.push('-');
                out.push_str(&t);
            }
            (_, false, true) => {
                out.push_str(" + ");
                out.push_str(&t);
            }
            (_, true, true) => {
                out.push_str(" - ");
                out.push_str(&t);
            }
            (_, false, false) => {
                out.push('+');
                out.push_str(&t);
            }
            (_, true, false) => {
                out.push('-');
                out.push_str(&t);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn is_bare(p: &MultiPoly) -> bool {
    match p.terms() {
        [(m, c)] => {
            (m.is_one() && c.is_integer() && !c.is_negative())
                || (c.is_one() && m.total_degree() == 1 && m.0.iter().all(|&e| e >= 0))
        }
        _ => false,
    }
}

/// Compact parameter polynomial, parenthesized when it has several terms.
fn compact_factor(p: &MultiPoly) -> String {
    let text = sum_text(p.terms().iter().map(|(m, c)| (m, c)), false);
    if p.len() > 1 {
        format!("({text})")
    } else {
        text
    }
}

fn spatial_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| b.0.cmp(&a.0))
}

/// Coefficient (a parameter rational function, already made sign-positive)
/// times a spatial monomial.
fn grouped_term(spatial: &Monomial, coeff: &RationalFunction) -> String {
    let num = coeff.numer();
    let den = coeff.denom();
    if den.is_one() && num.len() == 1 {
        let (pm, pc) = &num.terms()[0];
        return term_text(&pm.mul(spatial), pc);
    }
    let mut text = compact_factor(num);
    if !den.is_one() {
        let d = sum_text(den.terms().iter().map(|(m, c)| (m, c)), false);
        if is_bare(den) {
            text = format!("{text}/{d}");
        } else {
            text = format!("{text}/({d})");
        }
    }
    if spatial.is_one() {
        text
    } else {
        format!("{text} * {}", monomial_text(spatial))
    }
}

fn leading_negative(p: &MultiPoly) -> bool {
    p.leading_coeff().is_negative()
}

/// Renders a rational function whose denominator has no spatial variables,
/// grouped by spatial monomial.
fn render_grouped(r: &RationalFunction) -> String {
    let groups = r.split_spatial().expect("parameter-only denominator");
    if groups.is_empty() {
        return "0".into();
    }
    let mut groups = groups;
    groups.sort_by(|a, b| spatial_order(&a.0, &b.0));
    if groups.len() == 1 && groups[0].0.is_one() {
        // parameter-only value
        let c = &groups[0].1;
        let num = sum_text(c.numer().terms().iter().map(|(m, c)| (m, c)), true);
        if c.denom().is_one() {
            return num;
        }
        let num = if c.numer().len() > 1 { format!("({num})") } else { num };
        let den = sum_text(c.denom().terms().iter().map(|(m, c)| (m, c)), false);
        return if is_bare(c.denom()) {
            format!("{num}/{den}")
        } else {
            format!("{num}/({den})")
        };
    }
    let mut out = String::new();
    for (i, (s, c)) in groups.iter().enumerate() {
        let neg = leading_negative(c.numer());
        let c = if neg { -c } else { c.clone() };
        let t = grouped_term(s, &c);
        match (i, neg) {
            (0, false) => out.push_str(&t),
            (0, true) => {
                out.push('-');
                out.push_str(&t);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&t);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&t);
            }
        }
    }
    out
}

/// Canonical text of a polynomial.
pub fn render_poly(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    render_grouped(&RationalFunction::from_poly(p.clone()))
}

/// Canonical text of a rational function.
pub fn render_ratfun(r: &RationalFunction) -> String {
    if r.is_zero() {
        return "0".into();
    }
    if !r.den_has_spatial() {
        return render_grouped(r);
    }
    let num = render_poly(r.numer());
    let den = render_poly(r.denom());
    let num = if r.numer().len() > 1 { format!("({num})") } else { num };
    let den = if is_bare(r.denom()) { den } else { format!("({den})") };
    format!("{num}/{den}")
}

#[allow(dead_code)]
pub(crate) fn sign_free(c: &BigRational) -> bool {
    !c.is_zero() && !c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn p(v: Var) -> MultiPoly {
        MultiPoly::var(v)
    }

    #[test]
    fn bc2_style_output() {
        let a = p(Var::Alpha);
        let b = p(Var::Beta);
        let g = p(Var::Gamma);
        let numc = &(&a + &b) + &(&g.scale(&int(2)) + &MultiPoly::int(3));
        let den = &(&a.scale(&int(2)) + &g.scale(&int(2))) + &MultiPoly::int(3);
        let r = RationalFunction::from_poly(MultiPoly::one())
            - RationalFunction::new(&numc * &p(Var::Xi), den).unwrap();
        assert_eq!(render_ratfun(&r), "1 - (a+b+2g+3)/(2a+2g+3) * xi");
    }

    #[test]
    fn plain_polynomials() {
        let x = p(Var::X);
        let y = p(Var::Y);
        assert_eq!(render_poly(&(&x * &x - &y * &y)), "x^2 - y^2");
        let l = p(Var::Lambda);
        let g2 = &(&(&l * &(&l + &MultiPoly::one())) * &(&x * &x)).scale(&int(2)) - &l;
        assert_eq!(render_poly(&g2), "-l + (2l^2+2l) * x^2");
        assert_eq!(render_poly(&MultiPoly::var_pow(Var::Z, -1)), "z^-1");
        assert_eq!(render_poly(&x.scale(&rat(3, 2))), "3/2*x");
        assert_eq!(render_poly(&MultiPoly::zero()), "0");
    }

    #[test]
    fn parameter_only_values() {
        let a = p(Var::Alpha);
        let v = (&a + &MultiPoly::one()).scale(&int(-2));
        assert_eq!(render_poly(&v), "-2a - 2");
    }

    #[test]
    fn spatial_denominators() {
        let x = p(Var::X);
        let y = p(Var::Y);
        let t = p(Var::T);
        let r = RationalFunction::new(&(&t * &x) - &y, &x - &y).unwrap();
        assert_eq!(render_ratfun(&r), "(t*x - y)/(x - y)");
        let r = RationalFunction::new(MultiPoly::one(), x.clone()).unwrap();
        assert_eq!(render_ratfun(&r), "1/x");
    }
}
