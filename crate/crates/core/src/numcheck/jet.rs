//! Truncated Taylor expansions in up to two directions with complex
//! coefficients, used to evaluate derivatives exactly up to rounding.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

type C = Complex64;

/// `Σ_{i+j ≤ order} c_{ij} ε₀^i ε₁^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    order: usize,
    c: Vec<C>,
}

fn idx(i: usize, j: usize) -> usize {
    let s = i + j;
    s * (s + 1) / 2 + j
}

fn len(order: usize) -> usize {
    (order + 1) * (order + 2) / 2
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

impl Jet {
    pub fn constant(v: C, order: usize) -> Jet {
        let mut c = vec![C::new(0.0, 0.0); len(order)];
        c[0] = v;
        Jet { order, c }
    }

    pub fn real(v: f64, order: usize) -> Jet {
        Jet::constant(C::new(v, 0.0), order)
    }

    /// The coordinate `v + ε_dir`.
    pub fn seed(v: C, dir: usize, order: usize) -> Jet {
        let mut j = Jet::constant(v, order);
        if order > 0 {
            j.c[if dir == 0 { idx(1, 0) } else { idx(0, 1) }] = C::new(1.0, 0.0);
        }
        j
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn value(&self) -> C {
        self.c[0]
    }

    /// `∂₀^i ∂₁^j` at the base point.
    pub fn partial(&self, i: usize, j: usize) -> C {
        assert!(i + j <= self.order, "jet order {} too small", self.order);
        self.c[idx(i, j)] * factorial(i) * factorial(j)
    }

    /// Derivative in one direction; the order drops by one.
    pub fn derivative(&self, dir: usize) -> Jet {
        assert!(self.order > 0, "cannot differentiate an order-0 jet");
        let order = self.order - 1;
        let mut c = vec![C::new(0.0, 0.0); len(order)];
        for s in 0..=order {
            for j in 0..=s {
                let i = s - j;
                c[idx(i, j)] = if dir == 0 {
                    self.c[idx(i + 1, j)] * (i + 1) as f64
                } else {
                    self.c[idx(i, j + 1)] * (j + 1) as f64
                };
            }
        }
        Jet { order, c }
    }

    pub fn truncate(&self, order: usize) -> Jet {
        let order = order.min(self.order);
        Jet {
            order,
            c: self.c[..len(order)].to_vec(),
        }
    }

    pub fn scale(&self, s: C) -> Jet {
        Jet {
            order: self.order,
            c: self.c.iter().map(|v| v * s).collect(),
        }
    }

    fn zip(&self, o: &Jet, f: impl Fn(C, C) -> C) -> Jet {
        let order = self.order.min(o.order);
        Jet {
            order,
            c: (0..len(order)).map(|k| f(self.c[k], o.c[k])).collect(),
        }
    }

    fn product(&self, o: &Jet) -> Jet {
        let order = self.order.min(o.order);
        let mut c = vec![C::new(0.0, 0.0); len(order)];
        for s1 in 0..=order {
            for j1 in 0..=s1 {
                let a = self.c[idx(s1 - j1, j1)];
                if a == C::new(0.0, 0.0) {
                    continue;
                }
                for s2 in 0..=(order - s1) {
                    for j2 in 0..=s2 {
                        c[idx(s1 - j1 + s2 - j2, j1 + j2)] += a * o.c[idx(s2 - j2, j2)];
                    }
                }
            }
        }
        Jet { order, c }
    }

    /// `Σ_k w_k h^k` with `h` the nilpotent part divided by the value.
    fn series(&self, weights: impl Fn(usize) -> C) -> Jet {
        let f0 = self.value();
        let mut h = self.scale(C::new(1.0, 0.0) / f0);
        h.c[0] = C::new(0.0, 0.0);
        let mut acc = Jet::constant(weights(0), self.order);
        let mut pow = Jet::constant(C::new(1.0, 0.0), self.order);
        for k in 1..=self.order {
            pow = pow.product(&h);
            acc = &acc + &pow.scale(weights(k));
        }
        acc
    }

    pub fn recip(&self) -> Jet {
        let f0 = self.value();
        self.series(|k| if k % 2 == 0 { C::new(1.0, 0.0) } else { C::new(-1.0, 0.0) })
            .scale(C::new(1.0, 0.0) / f0)
    }

    /// Principal power `self^s`.
    pub fn powc(&self, s: C) -> Jet {
        let f0 = self.value();
        let mut binom = vec![C::new(1.0, 0.0)];
        for k in 1..=self.order {
            let prev = binom[k - 1];
            binom.push(prev * (s - (k - 1) as f64) / k as f64);
        }
        self.series(|k| binom[k]).scale(f0.powc(s))
    }

    pub fn powf(&self, s: f64) -> Jet {
        self.powc(C::new(s, 0.0))
    }

    pub fn powi(&self, k: i32) -> Jet {
        if k < 0 {
            return self.recip().powi(-k);
        }
        let mut acc = Jet::constant(C::new(1.0, 0.0), self.order);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    pub fn sqrt(&self) -> Jet {
        self.powf(0.5)
    }
}

impl Add<&Jet> for &Jet {
    type Output = Jet;
    fn add(self, o: &Jet) -> Jet {
        self.zip(o, |a, b| a + b)
    }
}

impl Sub<&Jet> for &Jet {
    type Output = Jet;
    fn sub(self, o: &Jet) -> Jet {
        self.zip(o, |a, b| a - b)
    }
}

impl Mul<&Jet> for &Jet {
    type Output = Jet;
    fn mul(self, o: &Jet) -> Jet {
        self.product(o)
    }
}

impl Div<&Jet> for &Jet {
    type Output = Jet;
    fn div(self, o: &Jet) -> Jet {
        self.product(&o.recip())
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(C::new(-1.0, 0.0))
    }
}

impl Add<f64> for &Jet {
    type Output = Jet;
    fn add(self, v: f64) -> Jet {
        let mut out = self.clone();
        out.c[0] += v;
        out
    }
}

impl Add<C> for &Jet {
    type Output = Jet;
    fn add(self, v: C) -> Jet {
        let mut out = self.clone();
        out.c[0] += v;
        out
    }
}

impl Mul<f64> for &Jet {
    type Output = Jet;
    fn mul(self, v: f64) -> Jet {
        self.scale(C::new(v, 0.0))
    }
}

impl Mul<C> for &Jet {
    type Output = Jet;
    fn mul(self, v: C) -> Jet {
        self.scale(v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Jet> for Jet {
            type Output = Jet;
            fn $m(self, o: Jet) -> Jet {
                (&self).$m(&o)
            }
        }
        impl $tr<&Jet> for Jet {
            type Output = Jet;
            fn $m(self, o: &Jet) -> Jet {
                (&self).$m(o)
            }
        }
        impl $tr<Jet> for &Jet {
            type Output = Jet;
            fn $m(self, o: Jet) -> Jet {
                self.$m(&o)
            }
        }
        impl $tr<f64> for Jet {
            type Output = Jet;
            fn $m(self, v: f64) -> Jet {
                (&self).$m(Jet::real(v, self.order))
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Sub<f64> for &Jet {
    type Output = Jet;
    fn sub(self, v: f64) -> Jet {
        self + (-v)
    }
}

impl Div<f64> for &Jet {
    type Output = Jet;
    fn div(self, v: f64) -> Jet {
        self * (1.0 / v)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: C, b: f64) -> bool {
        (a - b).norm() < 1e-12 * (1.0 + b.abs())
    }

    #[test]
    fn derivatives_of_a_product() {
        // f = x^2 y^3 at (2, 3): f_x = 2xy^3 = 108, f_xy = 6xy^2 = 108, f_yy = 6x^2 y = 72
        let x = Jet::seed(C::new(2.0, 0.0), 0, 3);
        let y = Jet::seed(C::new(3.0, 0.0), 1, 3);
        let f = &x.powi(2) * &y.powi(3);
        assert!(close(f.partial(1, 0), 108.0));
        assert!(close(f.partial(1, 1), 108.0));
        assert!(close(f.partial(0, 2), 72.0));
        assert!(close(f.derivative(0).derivative(1).value(), 108.0));
    }

    #[test]
    fn powers_and_reciprocals() {
        // d^3/dx^3 (1+x^2)^{-1/2} at x = 0.5
        let x = Jet::seed(C::new(0.5, 0.0), 0, 3);
        let f = (&(&x * &x) + 1.0).powf(-0.5);
        let k: f64 = 1.25;
        let expect = 9.0 * 0.5 * k.powf(-2.5) - 15.0 * 0.125 * k.powf(-3.5);
        assert!(close(f.partial(3, 0), expect), "{:?} vs {expect}", f.partial(3, 0));
        let g = (&x + 1.0).recip();
        assert!(close(g.partial(2, 0), 2.0 / 1.5f64.powi(3)));
    }
}
