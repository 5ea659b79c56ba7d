//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive subresultant remainder sequences with content extraction. A
//! modular screen runs first: the univariate images of the inputs modulo a
//! large prime bound the degree of the gcd in each variable, which settles
//! the common coprime case without any remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::poly::MultiPoly;
use super::var::{Var, NVARS};

/// Greatest common divisor: the gcd of the rational contents times the
/// primitive gcd with positive leading coefficient. `gcd(p, 0)` is `p` with
/// its sign normalized.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() && b.is_zero() {
        return MultiPoly::zero();
    }
    let ca = a.content();
    let cb = b.content();
    let c = if a.is_zero() {
        cb
    } else if b.is_zero() {
        ca
    } else {
        BigRational::new(
            ca.numer().gcd(cb.numer()),
            ca.denom().lcm(cb.denom()),
        )
    };
    gcd_normalized(a, b).scale(&c)
}

/// Primitive gcd (coprime integer coefficients, positive leading
/// coefficient). `z` is treated as a unit.
pub(crate) fn gcd_normalized(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return normalize_unit_z(b);
    }
    if b.is_zero() {
        return normalize_unit_z(a);
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    // monomial content; z is a unit so its exponent is dropped entirely
    let ma = a.min_monomial();
    let mb = b.min_monomial();
    let zi = Var::Z.index();
    let mut mg = ma.meet(&mb);
    mg.0[zi] = 0;
    let a1 = a.div_monomial(&ma).expect("min monomial divides");
    let b1 = b.div_monomial(&mb).expect("min monomial divides");
    let (_, a1) = a1.primitive_part();
    let (_, b1) = b1.primitive_part();
    let g = gcd_core(&a1, &b1);
    g.mul_monomial(&mg)
}

fn normalize_unit_z(p: &MultiPoly) -> MultiPoly {
    let zmin = p.min_degree(Var::Z);
    p.shift(Var::Z, -zmin).primitive_part().1
}

/// Both inputs primitive, free of monomial content, nonzero.
fn gcd_core(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if a == b {
        return a.clone();
    }
    let mask_a = a.var_mask();
    let mask_b = b.var_mask();
    if mask_a & mask_b == 0 {
        return MultiPoly::one();
    }
    if mask_a != mask_b {
        // a variable present in only one input cannot occur in the gcd, so
        // the gcd divides every coefficient with respect to that variable
        let only_a = mask_a & !mask_b;
        let (with_extra, other, extra) = if only_a != 0 {
            (a, b, only_a)
        } else {
            (b, a, mask_b & !mask_a)
        };
        let v = Var::from_index(extra.trailing_zeros() as usize);
        let mut coeffs: Vec<MultiPoly> = with_extra
            .coefficients_in(v)
            .into_iter()
            .map(|(_, c)| c)
            .collect();
        coeffs.sort_by_key(|c| c.len());
        let mut g = other.clone();
        for c in coeffs {
            g = gcd_normalized(&g, &c);
            if g.is_one() {
                break;
            }
        }
        return g;
    }

    let shared: Vec<Var> = Var::ALL
        .iter()
        .copied()
        .filter(|v| mask_a & (1 << v.index()) != 0)
        .collect();

    let bounds = modular_degree_bounds(a, b, &shared);
    if let Some(bounds) = &bounds {
        if bounds.iter().all(|&(_, d)| d == 0) {
            return MultiPoly::one();
        }
        // if the bounds match one input exactly it is the likely gcd
        for cand in [b, a] {
            if bounds.iter().all(|&(v, d)| d == cand.degree(v)) {
                let other = if std::ptr::eq(cand, a) { b } else { a };
                if other.divide_exact(cand).is_ok() {
                    return cand.clone();
                }
            }
        }
    }

    // main variable: smallest positive degree bound, ties by smaller degree
    let main = match &bounds {
        Some(bounds) => bounds
            .iter()
            .filter(|&&(_, d)| d > 0)
            .min_by_key(|&&(v, d)| (d, a.degree(v).max(b.degree(v))))
            .map(|&(v, _)| v)
            .unwrap_or(shared[0]),
        None => *shared
            .iter()
            .min_by_key(|v| a.degree(**v).max(b.degree(**v)))
            .unwrap(),
    };

    let ua = to_univariate(a, main);
    let ub = to_univariate(b, main);
    let (ca, pa) = univariate_primitive(&ua);
    let (cb, pb) = univariate_primitive(&ub);
    let content = gcd_normalized(&ca, &cb);
    let g = subresultant_gcd(pa, pb);
    let (_, g) = univariate_primitive(&g);
    let g = from_univariate(&g, main);
    let (_, g) = g.primitive_part();
    (&content * &g).primitive_part().1
}

type Univariate = Vec<MultiPoly>;

fn to_univariate(p: &MultiPoly, v: Var) -> Univariate {
    let groups = p.coefficients_in(v);
    let deg = groups.last().map(|g| g.0).unwrap_or(0);
    debug_assert!(groups.iter().all(|g| g.0 >= 0));
    let mut out = vec![MultiPoly::zero(); deg as usize + 1];
    for (e, c) in groups {
        out[e as usize] = c;
    }
    out
}

fn from_univariate(u: &Univariate, v: Var) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for (i, c) in u.iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &c.shift(v, i as i16);
        }
    }
    acc
}

fn trim(u: &mut Univariate) {
    while u.len() > 1 && u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
    if u.len() == 1 && u[0].is_zero() {
        u.clear();
    }
}

fn univariate_primitive(u: &Univariate) -> (MultiPoly, Univariate) {
    let mut coeffs: Vec<&MultiPoly> = u.iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| c.len());
    let mut g = MultiPoly::zero();
    for c in coeffs {
        g = gcd_normalized(&g, c);
        if g.is_one() {
            break;
        }
    }
    if g.is_one() {
        return (g, u.clone());
    }
    let p = u
        .iter()
        .map(|c| c.divide_exact(&g).expect("content divides coefficients"))
        .collect();
    (g, p)
}

fn prem(a: &Univariate, b: &Univariate) -> Univariate {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.clone();
    let mut e = (a.len() - b.len() + 1) as i32;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let c = r[dr].clone();
        let shift = dr - db;
        for coeff in r.iter_mut() {
            *coeff = &*coeff * lcb;
        }
        for (i, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                r[i + shift] = &r[i + shift] - &(&c * bc);
            }
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        trim(&mut r);
        e -= 1;
    }
    if e > 0 && !r.is_empty() {
        let f = lcb.pow(e as u32);
        for coeff in r.iter_mut() {
            *coeff = &*coeff * &f;
        }
    }
    r
}

fn subresultant_gcd(a: Univariate, b: Univariate) -> Univariate {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let d = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return vec![MultiPoly::one()];
        }
        let divisor = &g * &h.pow(d);
        let next: Univariate = r
            .iter()
            .map(|c| c.divide_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        a = std::mem::replace(&mut b, next);
        g = a.last().unwrap().clone();
        h = match d {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(d)
                .divide_exact(&h.pow(d - 1))
                .expect("subresultant h update is exact"),
        };
    }
}

// ---------------------------------------------------------------------------
// Modular screening
// ---------------------------------------------------------------------------

const P: u64 = (1u64 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    let prod = (a as u128) * (b as u128);
    let lo = (prod as u64) & P;
    let hi = (prod >> 61) as u64;
    let s = lo + hi;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn bigint_mod(n: &BigInt) -> u64 {
    let m = BigInt::from(P);
    let r = n.mod_floor(&m);
    r.to_u64().unwrap()
}

fn rational_mod(c: &BigRational) -> Option<u64> {
    let d = bigint_mod(c.denom());
    if d == 0 {
        return None;
    }
    Some(mulmod(bigint_mod(c.numer()), invmod(d)))
}

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        (z ^ (z >> 31)) % P
    }
}

/// Image of `p` in F_p[v] with every other variable evaluated at `point`.
fn univariate_image(p: &MultiPoly, v: Var, point: &[u64; NVARS]) -> Option<Vec<u64>> {
    let deg = p.degree(v) as usize;
    let mut out = vec![0u64; deg + 1];
    let vi = v.index();
    for (m, c) in p.terms() {
        let mut t = rational_mod(c)?;
        for (i, &e) in m.0.iter().enumerate() {
            if i != vi && e != 0 {
                t = mulmod(t, powmod(point[i], e as u64));
            }
        }
        let k = m.0[vi] as usize;
        out[k] = addmod(out[k], t);
    }
    Some(out)
}

fn trim_mod(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim_mod(&mut a);
    trim_mod(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // a mod b
        let inv = invmod(*b.last().unwrap());
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let f = mulmod(*a.last().unwrap(), inv);
            for (i, &bc) in b.iter().enumerate() {
                a[i + shift] = submod(a[i + shift], mulmod(f, bc));
            }
            a.pop();
            trim_mod(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Upper bounds on the degree of the gcd in each shared variable. `None`
/// when a coefficient denominator vanishes mod the prime (never in practice).
fn modular_degree_bounds(a: &MultiPoly, b: &MultiPoly, shared: &[Var]) -> Option<Vec<(Var, i16)>> {
    let mut rng = SplitMix(0x5E_ED0F_1ADD_E125);
    let mut out = Vec::with_capacity(shared.len());
    for &v in shared {
        let da = a.degree(v) as usize;
        let db = b.degree(v) as usize;
        let mut bound = None;
        for _ in 0..4 {
            let mut point = [0u64; NVARS];
            for p in point.iter_mut() {
                *p = rng.next();
            }
            let ia = univariate_image(a, v, &point)?;
            let ib = univariate_image(b, v, &point)?;
            if ia[da] == 0 || ib[db] == 0 {
                continue;
            }
            bound = Some(gcd_degree_mod(ia, ib) as i16);
            break;
        }
        out.push((v, bound.unwrap_or(da.min(db) as i16)));
    }
    Some(out)
}

#[allow(dead_code)]
pub(crate) fn lcm(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let g = gcd_normalized(a, b);
    let q = a.divide_exact(&g).expect("gcd divides");
    let (_, l) = (&q * b).primitive_part();
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }

    #[test]
    fn gcd_of_squares() {
        let a = x() * x() - y() * y();
        let b = (x() - y()).pow(2);
        assert_eq!(poly_gcd(&a, &b), x() - y());
    }

    #[test]
    fn content_handling() {
        let a = x().scale(&int(6));
        let b = (x() * x()).scale(&int(4));
        assert_eq!(poly_gcd(&a, &b), x().scale(&int(2)));
    }

    #[test]
    fn gcd_with_zero() {
        let p = -(x() + y().scale(&int(3)));
        assert_eq!(poly_gcd(&p, &MultiPoly::zero()), x() + y().scale(&int(3)));
        assert_eq!(poly_gcd(&MultiPoly::zero(), &p), x() + y().scale(&int(3)));
    }

    #[test]
    fn multivariate_common_factor() {
        let a_ = MultiPoly::var(Var::Alpha);
        let g_ = MultiPoly::var(Var::Gamma);
        let f = &(&a_ + &g_) + &MultiPoly::int(2);
        let p = &f * &(&(&a_ * &a_) - &g_);
        let q = &f * &(&(&g_ * &x()) + &MultiPoly::one());
        assert_eq!(poly_gcd(&p, &q), f);
    }

    #[test]
    fn coprime_inputs() {
        let a = &x() + &MultiPoly::var(Var::T);
        let b = &x() - &MultiPoly::var(Var::T);
        assert!(poly_gcd(&a, &b).is_one());
    }

    #[test]
    fn z_is_a_unit() {
        let z = MultiPoly::var(Var::Z);
        let zinv = MultiPoly::var_pow(Var::Z, -1);
        let a = (&z * &z) - MultiPoly::one();
        let b = &z - &zinv; // = (z^2 - 1)/z
        assert_eq!(poly_gcd(&a, &b), a);
    }

    #[test]
    fn nontrivial_prs() {
        // gcd has degree 2 in x and involves parameters
        let t = MultiPoly::var(Var::T);
        let u = MultiPoly::var(Var::U);
        let g = &(&x() * &x()) + &(&t * &y()) - &u;
        let p = &g * &(&(&x() * &t) + &MultiPoly::int(1));
        let q = &g * &(&(&y() * &y()) - &x());
        assert_eq!(poly_gcd(&p, &q), g.primitive_part().1);
    }
}
