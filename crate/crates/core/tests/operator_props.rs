//! Operator-algebra properties: composition agrees with sequential
//! application, and the Kirillov–Noumi operators preserve symmetry.

use ladderops_core::exactalg::{int, Monomial, MultiPoly, RationalFunction, Var};
use ladderops_core::operators::{kn_k1plus, kn_m1plus, kn_omega, DiffOp, ShiftOp};
use proptest::prelude::*;

/// Up to four terms of degree at most three in `x, y, t`.
fn poly() -> impl Strategy<Value = MultiPoly> {
    let term = (0i16..3, 0i16..3, 0i16..2, -3i64..4);
    prop::collection::vec(term, 0..=4).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(a, b, c, k)| {
            (Monomial::from_pairs(&[(Var::X, a), (Var::Y, b), (Var::T, c)]), int(k))
        }))
    })
}

fn rf(p: MultiPoly) -> RationalFunction {
    RationalFunction::from_poly(p)
}

fn diff_op() -> impl Strategy<Value = DiffOp> {
    let term = (poly(), 0u8..3, 0u8..3);
    prop::collection::vec(term, 1..=3).prop_map(|terms| {
        terms.into_iter().fold(DiffOp::zero(), |acc, (c, i, j)| {
            acc.add(&DiffOp::term(rf(c), [i, j, 0, 0, 0, 0]))
        })
    })
}

fn shift_op() -> impl Strategy<Value = ShiftOp> {
    let term = (poly(), -1i16..2, -1i16..2);
    prop::collection::vec(term, 1..=3).prop_map(|terms| {
        terms.into_iter().fold(ShiftOp::zero(), |acc, (c, i, j)| {
            acc.add(&ShiftOp::term(rf(c), [i, j, 0]))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn diff_composition_is_sequential_application(a in diff_op(), b in diff_op(), f in poly()) {
        let f = rf(f);
        prop_assert_eq!(a.compose(&b).apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn shift_composition_is_sequential_application(a in shift_op(), b in shift_op(), f in poly()) {
        let f = rf(f);
        prop_assert_eq!(a.compose(&b).apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn symmetric_input_gives_antisymmetric_product(m in 0i16..=5, n in 0i16..=5) {
        let mono = |a: i16, b: i16| MultiPoly::monomial(Monomial::from_pairs(&[(Var::X, a), (Var::Y, b)]), int(1));
        let f = rf(&mono(m, n) + &mono(n, m));
        let xy = rf(&MultiPoly::var(Var::X) - &MultiPoly::var(Var::Y));
        for op in [kn_omega(), kn_k1plus(), kn_m1plus()] {
            let g = &xy * &op.apply(&f);
            // a Laurent polynomial: only monomials in x, y remain below the line
            prop_assert!(g.denom().is_monomial(), "{}", g);
            prop_assert_eq!(g.swap_vars(Var::X, Var::Y), -&g);
        }
    }
}
