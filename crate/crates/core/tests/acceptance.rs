//! Acceptance criteria 1 to 10, one pass/fail line each.

use std::io::Write;
use std::time::{Duration, Instant};

use ladderops_core::exactalg::{RationalFunction, Var};
use ladderops_core::families::{bc2_r_n0_with, chart_inverse_rf};
use ladderops_core::numcheck::{numeric_identity_check, omega_kernel_rank, q_limit_check};
use ladderops_core::operators::{bc2_lowering_410, bc2_raising_411};
use ladderops_core::qseries::ParamAffine;
use ladderops_core::verify::{registry, verify_all, Summary, VerifyConfig};

const SAMPLES: usize = 100;
const TOL: f64 = 1e-9;
const ORDER_BAND: (f64, f64) = (0.9, 1.1);
const RANK_SAMPLES: [(f64, f64, u64); 3] = [(0.37, 0.52, 1), (0.61, 0.33, 2), (0.22, 0.81, 3)];

type Criterion = (&'static str, Box<dyn FnOnce() -> Outcome>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn run(ids: &[&str], mutate: bool) -> Summary {
    verify_all(&VerifyConfig {
        n_max: None,
        k_max: None,
        ids: Some(ids.iter().map(|s| s.to_string()).collect()),
        mutate,
    })
}

/// Every listed identity passes at every index and covers `needed` labels.
fn exact(ids: &[&str], needed: &[(&str, &str)]) -> Outcome {
    let s = run(ids, false);
    let mut problems = Vec::new();
    if !s.unknown.is_empty() {
        problems.push(format!("unknown {:?}", s.unknown));
    }
    for r in &s.reports {
        for o in &r.outcomes {
            if o.status != ladderops_core::verify::Status::Pass {
                problems.push(format!("{} {}: {}", r.id, o.index, o.detail.clone().unwrap_or_default()));
            }
        }
    }
    for (id, index) in needed {
        let covered = s
            .reports
            .iter()
            .any(|r| r.id == *id && r.outcomes.iter().any(|o| o.index == *index));
        if !covered {
            problems.push(format!("{id} does not cover {index}"));
        }
    }
    let checks: usize = s.reports.iter().map(|r| r.outcomes.len()).sum();
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{} identities, {checks} index cases", s.reports.len())
        } else {
            problems.join("; ")
        },
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if took > limit {
        o.pass = false;
    }
    o.detail = format!("{} in {:.1} s (limit {} s)", o.detail, took.as_secs_f64(), limit.as_secs());
    o
}

fn r_aa(n: u32) -> RationalFunction {
    let a = ParamAffine::param(Var::Alpha);
    let g = ParamAffine::param(Var::Gamma);
    chart_inverse_rf(&bc2_r_n0_with(n, &a, &a, &g).unwrap())
}

fn v(var: Var) -> RationalFunction {
    RationalFunction::var(var)
}

fn int(n: i64) -> RationalFunction {
    RationalFunction::int(n)
}

/// Hand-checked values of both sides of the BC₂ ladder relations.
fn bc2_anchors() -> Outcome {
    let a = v(Var::Alpha);
    let g = v(Var::Gamma);
    let two = int(2);
    let mut problems = Vec::new();

    // lowering at n = 1: both sides are -2(a+1)
    let expected = &int(-2) * &(&a + &int(1));
    let lhs = bc2_lowering_410(1).apply(&r_aa(1));
    let rhs = &(&int(-1) * &(&int(2) + &(&two * &a))) * &r_aa(0);
    if lhs != expected || rhs != expected {
        problems.push(format!("lowering n=1: {lhs} and {rhs}, expected {expected}"));
    }

    // raising at n = 0: both sides are (2a+2g+2)(2g+1)(xi-1), xi = x+y
    let xi_minus_1 = &(&v(Var::X) + &v(Var::Y)) - &int(1);
    let expected = &(&(&(&(&two * &a) + &(&two * &g)) + &two) * &(&(&two * &g) + &int(1))) * &xi_minus_1;
    let lhs = bc2_raising_411(0).apply(&r_aa(0));
    let factor = -(&(&int(1) + &(&two * &g)) * &(&(&int(2) + &(&two * &a)) + &(&two * &g)));
    let rhs = &factor * &r_aa(1);
    if lhs != expected || rhs != expected {
        problems.push(format!("raising n=0: {lhs} and {rhs}, expected {expected}"));
    }
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() { "anchors match".into() } else { problems.join("; ") },
    }
}

fn both(a: Outcome, b: Outcome) -> Outcome {
    Outcome {
        pass: a.pass && b.pass,
        detail: format!("{}; {}", a.detail, b.detail),
    }
}

fn omega_rank() -> Outcome {
    let mut problems = Vec::new();
    let mut runs = 0;
    for &(t, q, seed) in &RANK_SAMPLES {
        for n in 0..=8 {
            runs += 1;
            match omega_kernel_rank(n, t, q, seed) {
                Ok(r) if r.kernel_dim == 1 => {}
                Ok(r) => problems.push(format!("n={n} t={t} q={q}: kernel {}", r.kernel_dim)),
                Err(e) => problems.push(format!("n={n} t={t} q={q}: {e}")),
            }
        }
    }
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("numeric kernel dimension 1 in {runs} runs")
        } else {
            problems.join("; ")
        },
    }
}

fn numeric_coherence() -> Outcome {
    let mut problems = Vec::new();
    let mut worst: (f64, String) = (0.0, String::new());
    for case in registry() {
        match numeric_identity_check(case.id, SAMPLES, TOL, 0, false) {
            Ok(r) => {
                if r.max_deviation > worst.0 {
                    worst = (r.max_deviation, r.id.clone());
                }
                if !r.pass {
                    problems.push(format!("{} deviates {:.2e} at {}", r.id, r.max_deviation, r.worst_index));
                }
            }
            Err(e) => problems.push(format!("{}: {e}", case.id)),
        }
    }
    let mut orders = Vec::new();
    for &(lambda, x) in &[(0.7, 0.3), (1.3, -0.6), (0.4, 1.2)] {
        for n in 0..=8 {
            let t = q_limit_check(n, lambda, x, &[1e-3, 1e-4, 1e-5]);
            let in_band = t.is_exact() || t.orders.iter().all(|o| (ORDER_BAND.0..=ORDER_BAND.1).contains(o));
            if !in_band {
                problems.push(format!("q-limit n={n} l={lambda} x={x}: orders {:?}", t.orders));
            }
            orders.extend(t.orders);
        }
    }
    let (lo, hi) = orders
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &o| (lo.min(o), hi.max(o)));
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "{} identities within {TOL:e} (worst {:.1e} in {}); q-limit orders in [{lo:.3}, {hi:.3}]",
                registry().len(),
                worst.0,
                worst.1
            )
        } else {
            problems.join("; ")
        },
    }
}

fn mutation() -> Outcome {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let s = run(&ids, true);
    let mut problems = Vec::new();
    for r in &s.reports {
        if r.failed == 0 {
            problems.push(format!("{} survives exact mutation", r.id));
        }
        match numeric_identity_check(&r.id, 10, TOL, 0, true) {
            Ok(n) if n.pass => problems.push(format!("{} survives numeric mutation", r.id)),
            Ok(_) => {}
            Err(e) => problems.push(format!("{}: {e}", r.id)),
        }
    }
    Outcome {
        pass: problems.is_empty() && s.reports.len() == ids.len(),
        detail: if problems.is_empty() {
            format!("all {} identities fail when perturbed, exactly and numerically", s.reports.len())
        } else {
            problems.join("; ")
        },
    }
}

#[test]
fn acceptance_criteria() {
    let n8 = "n=8";
    let criteria: Vec<Criterion> = vec![
        (
            "q-case ladder constants for J_{n,0}",
            Box::new(move || {
                timed(Duration::from_secs(60), || exact(&["6.01", "6.02"], &[("6.01", n8), ("6.02", n8)]))
            }),
        ),
        (
            "z-chart identities and their consistency",
            Box::new(move || {
                exact(
                    &["6.04", "6.05", "6.06", "6.07", "6.08", "6.04-6.05-equiv"],
                    &[("6.04", n8), ("6.06", n8), ("6.08", n8), ("6.04-6.05-equiv", n8)],
                )
            }),
        ),
        (
            "operator algebra of Omega, K1+, M1+",
            Box::new(move || exact(&["kn-structural", "kn-relations", "kn-subspace"], &[("kn-subspace", n8)])),
        ),
        (
            "rank-one classical suite",
            Box::new(move || {
                exact(
                    &[
                        "2.01", "2.02", "2.03", "2.06", "2.07", "2.10", "2.11", "2.16", "genfun-taylor", "sl2", "1.01",
                        "1.03", "1.04", "1.05", "1.06", "1.08", "1.09", "1.11", "1.12", "1.16", "qt-even", "qt-odd",
                        "4.01", "4.02", "4.03", "4.05",
                    ],
                    &[("2.03", "n=6"), ("1.04", n8), ("1.16", n8), ("qt-odd", n8)],
                )
            }),
        ),
        (
            "BC2 expansion at g = -1/2 and g = 1/2",
            Box::new(move || {
                exact(
                    &["3.03-x", "3.04-x", "3.05-consistency"],
                    &[("3.03-x", "n=6,k=0"), ("3.03-x", "n=3,k=3"), ("3.04-x", "n=4,k=2")],
                )
            }),
        ),
        (
            "BC2 lowering and raising for R_{n,0}",
            Box::new(move || {
                timed(Duration::from_secs(300), || {
                    both(exact(&["4.10", "4.11"], &[("4.10", "n=6"), ("4.11", "n=6")]), bc2_anchors())
                })
            }),
        ),
        (
            "Jack ladder on Z_{m,0}",
            Box::new(move || exact(&["4.06", "4.07", "4.08"], &[("4.06", n8), ("4.07", n8), ("4.08", n8)])),
        ),
        (
            "kernel of Omega",
            Box::new(move || both(exact(&["omega-kernel"], &[("omega-kernel", "n=10")]), omega_rank())),
        ),
        ("numeric coherence", Box::new(numeric_coherence)),
        ("mutation sensitivity", Box::new(mutation)),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let o = check();
        // written to the stderr handle directly so the lines survive output capture
        let _ = writeln!(
            std::io::stderr(),
            "criterion {:>2}: {} {name}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
