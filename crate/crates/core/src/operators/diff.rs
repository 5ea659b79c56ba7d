//! Differential operators `Σ c_α ∂^α` with rational-function coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::exactalg::{AlgebraError, BigRational, KernelPoly, MultiPoly, RationalFunction, Var, NSPATIAL};
use crate::qseries::factorial;

use super::render_coefficient;

/// Derivative multi-index over the spatial variables `x, y, z, w, ξ, η`.
pub type DerivIndex = [u8; NSPATIAL];

/// A differential operator in normal form (coefficients to the left).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiffOp {
    terms: BTreeMap<DerivIndex, RationalFunction>,
}

fn order(i: &DerivIndex) -> u32 {
    i.iter().map(|&e| e as u32).sum()
}

fn binom_index(a: &DerivIndex, g: &DerivIndex) -> BigRational {
    let mut num = num_bigint::BigInt::from(1);
    let mut den = num_bigint::BigInt::from(1);
    for k in 0..NSPATIAL {
        num *= factorial(a[k] as u32);
        den *= factorial(g[k] as u32) * factorial((a[k] - g[k]) as u32);
    }
    BigRational::new(num, den)
}

/// All sub-indices `g ≤ a` componentwise.
fn sub_indices(a: &DerivIndex) -> Vec<DerivIndex> {
    let mut out = vec![[0u8; NSPATIAL]];
    for k in 0..NSPATIAL {
        let mut next = Vec::new();
        for g in &out {
            for e in 0..=a[k] {
                let mut h = *g;
                h[k] = e;
                next.push(h);
            }
        }
        out = next;
    }
    out
}

fn spatial_var(k: usize) -> Var {
    Var::SPATIAL[k]
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    pub fn identity() -> Self {
        DiffOp::multiplication(RationalFunction::one())
    }

    /// Multiplication by `c`.
    pub fn multiplication(c: RationalFunction) -> Self {
        DiffOp::term(c, [0; NSPATIAL])
    }

    pub fn term(c: RationalFunction, index: DerivIndex) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(index, c);
        }
        DiffOp { terms }
    }

    /// `∂_v^k`.
    pub fn partial(v: Var, k: u8) -> Self {
        assert!(v.is_spatial(), "{v} is not a spatial variable");
        let mut idx = [0u8; NSPATIAL];
        idx[v.index()] = k;
        DiffOp::term(RationalFunction::one(), idx)
    }

    pub fn terms(&self) -> &BTreeMap<DerivIndex, RationalFunction> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn order(&self) -> u32 {
        self.terms.keys().map(order).max().unwrap_or(0)
    }

    fn insert_add(terms: &mut BTreeMap<DerivIndex, RationalFunction>, idx: DerivIndex, c: RationalFunction) {
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

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut terms = self.terms.clone();
        for (i, c) in &other.terms {
            Self::insert_add(&mut terms, *i, c.clone());
        }
        DiffOp { terms }
    }

    pub fn neg(&self) -> DiffOp {
        DiffOp {
            terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.neg())
    }

    /// Left multiplication by a function.
    pub fn left_mul(&self, c: &RationalFunction) -> DiffOp {
        if c.is_zero() {
            return DiffOp::zero();
        }
        DiffOp {
            terms: self.terms.iter().map(|(i, a)| (*i, c * a)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> DiffOp {
        self.left_mul(&RationalFunction::constant(c.clone()))
    }

    /// `self ∘ other`: `other` acts first. Uses the Leibniz rule
    /// `∂^α b = Σ_{γ≤α} C(α,γ) (∂^γ b) ∂^{α-γ}`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let mut terms = BTreeMap::new();
        for (a_idx, a) in &self.terms {
            for (b_idx, b) in &other.terms {
                let mut cache = Derivatives::new(b.clone());
                for g in sub_indices(a_idx) {
                    let db = cache.get(&g);
                    if db.is_zero() {
                        continue;
                    }
                    let coef = (a * &db).scale(&binom_index(a_idx, &g));
                    let mut idx = *b_idx;
                    for k in 0..NSPATIAL {
                        idx[k] += a_idx[k] - g[k];
                    }
                    Self::insert_add(&mut terms, idx, coef);
                }
            }
        }
        DiffOp { terms }
    }

    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.compose(other).sub(&other.compose(self))
    }

    /// `self^k` (`k = 0` gives the identity).
    pub fn power(&self, k: u32) -> DiffOp {
        (0..k).fold(DiffOp::identity(), |acc, _| self.compose(&acc))
    }

    pub fn apply(&self, f: &RationalFunction) -> RationalFunction {
        let mut cache = Derivatives::new(f.clone());
        let parts: Vec<RationalFunction> = self.terms.iter().map(|(i, c)| c * &cache.get(i)).collect();
        RationalFunction::sum(parts.iter())
    }

    pub fn apply_poly(&self, f: &MultiPoly) -> RationalFunction {
        self.apply(&RationalFunction::from_poly(f.clone()))
    }

    pub fn apply_kernel(&self, f: &KernelPoly) -> Result<KernelPoly, AlgebraError> {
        let mut acc: Option<KernelPoly> = None;
        for (i, c) in &self.terms {
            let mut d = f.clone();
            for (k, &e) in i.iter().enumerate() {
                for _ in 0..e {
                    d = d.derivative(spatial_var(k));
                }
            }
            let term = d.scale(c);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
        }
        Ok(acc.unwrap_or_else(|| KernelPoly::plain(RationalFunction::zero())))
    }

    /// Replaces variables in the coefficients (the derivative words are left
    /// untouched, so only parameters should be bound).
    pub fn substitute_coefficients(&self, bindings: &[(Var, RationalFunction)]) -> Result<DiffOp, AlgebraError> {
        let mut terms = BTreeMap::new();
        for (i, c) in &self.terms {
            Self::insert_add(&mut terms, *i, c.substitute(bindings)?);
        }
        Ok(DiffOp { terms })
    }

    pub fn render(&self) -> String {
        let mut items: Vec<(&DerivIndex, &RationalFunction)> = self.terms.iter().collect();
        items.sort_by(|a, b| order(a.0).cmp(&order(b.0)).then_with(|| b.0.cmp(a.0)));
        render_terms(items.into_iter().map(|(i, c)| (word(i), c)))
    }
}

pub(crate) fn render_terms<'a, I: IntoIterator<Item = (String, &'a RationalFunction)>>(items: I) -> String {
    let mut out = String::new();
    for (w, c) in items {
        let (neg, body) = render_coefficient(c);
        let piece = match (w.is_empty(), body.as_str()) {
            (true, _) => body.clone(),
            (false, "1") => w,
            (false, _) => format!("{body}*{w}"),
        };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&piece),
            (true, true) => {
                out.push('-');
                out.push_str(&piece);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&piece);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&piece);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn word(i: &DerivIndex) -> String {
    let mut parts = Vec::new();
    for (k, &e) in i.iter().enumerate() {
        let name = format!("D{}", spatial_var(k).name());
        match e {
            0 => {}
            1 => parts.push(name),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Memoized partial derivatives of one function.
struct Derivatives {
    cache: HashMap<DerivIndex, RationalFunction>,
}

impl Derivatives {
    fn new(f: RationalFunction) -> Self {
        let mut cache = HashMap::new();
        cache.insert([0; NSPATIAL], f);
        Derivatives { cache }
    }

    fn get(&mut self, idx: &DerivIndex) -> RationalFunction {
        if let Some(v) = self.cache.get(idx) {
            return v.clone();
        }
        // peel one derivative off the last nonzero slot
        let k = (0..NSPATIAL).rev().find(|&k| idx[k] > 0).unwrap();
        let mut prev = *idx;
        prev[k] -= 1;
        let base = self.get(&prev);
        let d = if base.is_zero() { base } else { base.derivative(spatial_var(k)) };
        self.cache.insert(*idx, d.clone());
        d
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn x() -> RationalFunction {
        RationalFunction::var(Var::X)
    }

    #[test]
    fn weyl_relation() {
        let dx = DiffOp::partial(Var::X, 1);
        let mx = DiffOp::multiplication(x());
        assert_eq!(dx.commutator(&mx), DiffOp::identity());
    }

    #[test]
    fn composition_matches_sequential_application() {
        let dx = DiffOp::partial(Var::X, 1);
        let a = DiffOp::multiplication(&x() * &x()).compose(&dx).add(&DiffOp::partial(Var::Y, 2));
        let b = DiffOp::multiplication(RationalFunction::var(Var::Y)).compose(&dx).add(&DiffOp::identity());
        let f = RationalFunction::from_poly(
            &MultiPoly::var_pow(Var::X, 3) * &(&MultiPoly::var(Var::Y) + &MultiPoly::var(Var::Lambda)),
        );
        assert_eq!(a.compose(&b).apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn rendering() {
        let dx = DiffOp::partial(Var::X, 1);
        let op = DiffOp::multiplication(&x() * &x()).compose(&dx).add(&DiffOp::identity().scale(&int(-2)));
        assert_eq!(op.render(), "-2 + x^2*Dx");
        assert_eq!(DiffOp::partial(Var::Xi, 2).render(), "Dxi^2");
    }
}
