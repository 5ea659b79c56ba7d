//! The identity table.

use std::sync::OnceLock;

use crate::operators::ZLadder;

use super::{cases_bc2 as b, cases_q as q, cases_rank1 as r, BuildFailure, Check, Ctx, IdentityCase, IndexRange};

const fn n(min: i64, max: i64) -> IndexRange {
    IndexRange::N { min, max }
}

fn z_case(variant: ZLadder, ctx: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    q::z_ladder(variant)(ctx)
}

fn z604(c: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    z_case(ZLadder::Raise1, c)
}

fn z605(c: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    z_case(ZLadder::Raise2, c)
}

fn z606(c: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    z_case(ZLadder::Lower1, c)
}

fn z607(c: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    z_case(ZLadder::Lower2, c)
}

fn z608(c: &Ctx) -> Result<Vec<Check>, BuildFailure> {
    z_case(ZLadder::Difference, c)
}

macro_rules! case {
    ($id:expr, $chart:expr, $range:expr, $builder:expr, $notes:expr) => {
        IdentityCase {
            id: $id,
            chart: $chart,
            notes: $notes,
            range: $range,
            builder: $builder,
        }
    };
}

/// All registered identities, in report order.
pub fn registry() -> &'static [IdentityCase] {
    static CASES: OnceLock<Vec<IdentityCase>> = OnceLock::new();
    CASES.get_or_init(|| {
        vec![
            case!("6.01", "xy", n(0, 8), q::k1_raise, "K1+ and K1- raise J_{n,0}"),
            case!("6.02", "xy", n(0, 8), q::m1_lower, "M1+ and M1- lower J_{n,0} with factor (1-q^n)(1-t^2 q^(n-1))"),
            case!("6.04", "z", n(0, 8), z604, "first z-chart raising form, C_n[z] from the Fourier series"),
            case!("6.05", "z", n(0, 8), z605, "second z-chart raising form"),
            case!("6.06", "z", n(1, 8), z606, "first z-chart lowering form"),
            case!("6.07", "z", n(1, 8), z607, "second z-chart lowering form"),
            case!("6.08", "z", n(0, 8), z608, "second-order q^(1/2)-difference equation"),
            case!("6.04-6.05-equiv", "z", n(0, 8), q::z_equivalence, "raising and lowering pairs differ by -(z+1/z) times the difference operator"),
            case!("omega-kernel", "xy", n(0, 10), q::omega_kernel, "Omega J_{n,0} = 0; the kernel on symmetric degree-n polynomials is spanned by J_{n,0}"),
            case!("kn-structural", "xy", IndexRange::Single, q::kn_structural, "K1+ - K1- and M1+ - M1- as multiples of Omega"),
            case!("kn-relations", "xy", IndexRange::Single, q::kn_relations, "commutation relations of A, Omega, K1+, M1+ as operator identities; Omega K1+ uses (1-q^2)"),
            case!("kn-subspace", "xy", n(0, 8), q::kn_subspace, "relations restricted to the span of J_{n,0}, applied to J_{n,0}"),
            case!("2.06", "x", n(1, 8), r::case_2_06, "ultraspherical lowering, first form"),
            case!("2.07", "x", n(1, 8), r::case_2_07, "ultraspherical raising, first form"),
            case!("2.01", "tan", n(1, 8), r::case_2_01, "g_n(x) = (1+x^2)^(n/2) C_n(x/sqrt(1+x^2)) is a polynomial"),
            case!("2.02", "tan", n(1, 8), r::case_2_02, "kernel form with symbolic exponent -(n-1)-l of 1+x^2"),
            case!("2.03", "tan", n(0, 8), r::case_2_03, "n-fold derivative of (1+x^2)^(-l) against the iterated raising constant"),
            case!("genfun-taylor", "tan", n(0, 8), r::genfun_taylor, "n-th Taylor coefficient in z of (1+(x-z)^2)^(-l)"),
            case!("2.10", "xy", n(1, 8), r::case_2_10, "f_n(x,y) = (xy)^(n/2) C_n(...) is a homogeneous polynomial"),
            case!("2.11", "xy", n(1, 8), r::case_2_11, "raising by E"),
            case!("2.16", "xy", n(0, 8), r::case_2_16, "E^n(1)/n! = f_n"),
            case!("sl2", "xy", n(1, 8), r::sl2, "sl(2) relations and actions on f_n"),
            case!("1.04", "x", n(0, 8), r::case_1_04, "Jacobi differential equation"),
            case!("1.01", "rational", n(1, 8), r::case_1_01, "h_n(x) = (1+x^2)^n P_n((1-x^2)/(1+x^2)) is a polynomial"),
            case!("1.06", "rational", n(1, 8), r::case_1_06, "kernel form with symbolic exponent of 1+x^2"),
            case!("1.03", "x", n(1, 8), r::case_1_03, "intermediate second-order lowering"),
            case!("1.08", "x", n(1, 8), r::case_1_08, "intermediate second-order raising"),
            case!("1.05", "x", n(1, 8), r::case_1_05, "Jacobi lowering, first form"),
            case!("1.09", "x", n(1, 8), r::case_1_09, "Jacobi raising, first form"),
            case!("1.12", "zw", n(1, 8), r::case_1_12, "(zw)^n P_n((z/w+w/z)/2) is a homogeneous polynomial"),
            case!("1.16", "zw", n(1, 8), r::case_1_16, "homogeneous raising; first-order coefficient taken with factor 2"),
            case!("1.11", "x", n(0, 8), r::case_1_11, "reflection symmetry"),
            case!("qt-even", "x", n(0, 8), r::qt_even, "C_2n via P_n^(l-1/2,-1/2)(2x^2-1)"),
            case!("qt-odd", "x", n(0, 8), r::qt_odd, "C_2n+1 via x P_n^(l-1/2,1/2)(2x^2-1)"),
            case!("3.03-x", "xy", IndexRange::NK { max_sum: 6 }, b::case_3_03, "Jack expansion at g = -1/2 against symmetrized Jacobi products"),
            case!("3.04-x", "xy", IndexRange::NK { max_sum: 6 }, b::case_3_04, "Jack expansion at g = 1/2 against antisymmetrized Jacobi products over x - y"),
            case!("3.05-consistency", "xieta", n(0, 6), b::case_3_05, "double-sum expansion at k = 0 against the single sum"),
            case!("4.01", "x", n(1, 8), r::case_4_01, "lowering for R_n^(a,a)"),
            case!("4.02", "x", n(1, 8), r::case_4_02, "rescaled lowering for R_n^(a,a)"),
            case!("4.03", "x", n(0, 8), r::case_4_03, "differential equation for R_n^(a,a)"),
            case!("4.05", "x", n(1, 8), r::case_4_05, "lowering for R_n^(a,a)(1-2x); read with b = a"),
            case!("4.06", "xy", n(1, 8), r::case_4_06, "D- on Z_{m,0}"),
            case!("4.07", "xy", n(0, 8), r::case_4_07, "D+ on Z_{m,0}"),
            case!("4.08", "xy", n(0, 8), r::case_4_08, "D0 on Z_{m,0}"),
            case!("4.10", "xy", n(0, 6), b::case_4_10, "BC2 lowering for R_{n,0}^(a,a,g)(x+y,xy)"),
            case!("4.11", "xy", n(0, 6), b::case_4_11, "BC2 raising for R_{n,0}^(a,a,g)(x+y,xy)"),
        ]
    })
}

pub fn find_case(id: &str) -> Option<&'static IdentityCase> {
    registry().iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique() {
        let ids: HashSet<&str> = registry().iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), registry().len());
        assert!(registry().len() >= 30);
    }
}
