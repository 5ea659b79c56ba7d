//! Ring, gcd, substitution and kernel-calculus invariants on random small
//! instances.

use ladderops_core::exactalg::{
    int, kernel_equal, poly_gcd, BigRational, KernelPoly, Monomial, MultiPoly, RationalFunction, SymbolicExponent,
    Var,
};
use proptest::prelude::*;

const VARS: [Var; 4] = [Var::X, Var::Y, Var::Alpha, Var::T];

/// Up to five terms of total degree at most four in `x, y, α, t`.
fn poly() -> impl Strategy<Value = MultiPoly> {
    let term = (prop::array::uniform4(0i16..3), -4i64..5).prop_filter("degree", |(e, _)| e.iter().sum::<i16>() <= 4);
    prop::collection::vec(term, 0..=5).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(e, c)| {
            let pairs: Vec<(Var, i16)> = VARS.iter().copied().zip(e).collect();
            (Monomial::from_pairs(&pairs), int(c))
        }))
    })
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rf(p: &MultiPoly) -> RationalFunction {
    RationalFunction::from_poly(p.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distributivity(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn commutative_and_associative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&(&a + &b) - &b - &a).is_zero());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), g in nonzero_poly()) {
        let (ag, bg) = (&a * &g, &b * &g);
        let d = poly_gcd(&ag, &bg);
        prop_assert!(ag.divide_exact(&d).is_ok());
        prop_assert!(bg.divide_exact(&d).is_ok());
        // the planted common factor divides the gcd
        prop_assert!(d.divide_exact(&g).is_ok());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), s in poly()) {
        let bind = [(Var::X, &rf(&s) + &RationalFunction::var(Var::Y))];
        let lhs = rf(&(&a * &b)).substitute(&bind).unwrap();
        let rhs = &rf(&a).substitute(&bind).unwrap() * &rf(&b).substitute(&bind).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = rf(&(&a + &b)).substitute(&bind).unwrap();
        let rhs = &rf(&a).substitute(&bind).unwrap() + &rf(&b).substitute(&bind).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_form_is_idempotent(a in poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let r = RationalFunction::new(&a * &c, &b * &c).unwrap();
        let again = RationalFunction::new(r.numer().clone(), r.denom().clone()).unwrap();
        prop_assert_eq!(&again, &r);
        prop_assert_eq!(r, RationalFunction::new(a, b).unwrap());
    }

    #[test]
    fn kernel_leibniz(a in poly(), b in poly(), e in -2i64..3, f in -2i64..3) {
        let k = &MultiPoly::one() + &MultiPoly::var_pow(Var::X, 2);
        let lam = |c: i64| SymbolicExponent::new(c, &[(Var::Lambda, BigRational::from_integer((-1).into()))]);
        let u = KernelPoly::single(rf(&a), k.clone(), lam(e));
        let v = KernelPoly::single(rf(&b), k, lam(f));
        let lhs = u.mul(&v).derivative(Var::X);
        let rhs = u.derivative(Var::X).mul(&v).add(&u.mul(&v.derivative(Var::X))).unwrap();
        prop_assert!(kernel_equal(&lhs, &rhs).unwrap());
        let sum = u.add(&v).unwrap().derivative(Var::X);
        let parts = u.derivative(Var::X).add(&v.derivative(Var::X)).unwrap();
        prop_assert!(kernel_equal(&sum, &parts).unwrap());
    }
}
