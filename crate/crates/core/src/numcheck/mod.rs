//! Independent floating-point oracle.
//!
//! Families are recomputed from their three-term recurrences (never from
//! the exact polynomials), identities are re-evaluated at random parameter
//! and point samples, and two properties that the exact layer cannot check
//! directly are probed numerically: the `q → 1` limit of the
//! q-ultraspherical polynomials and the rank of `Ω` on symmetric
//! polynomials of fixed degree.

pub mod jet;
pub mod special;
mod shadows;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{RationalFunction, Var, NVARS};
use crate::verify::find_case;

pub use jet::Jet;

type C = Complex64;

/// Relative size below which a denominator counts as zero.
pub const GUARD: f64 = 1e-6;

/// Resampling attempts per sample before giving up.
const MAX_ATTEMPTS: u32 = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumError {
    #[error("denominator {what} = {value:e} is below the guard")]
    DenominatorNearZero { what: String, value: f64 },
    #[error("singular values of the degree-{n} matrix straddle the rank threshold")]
    RankUnstable { n: u32 },
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("no admissible sample for {id} at {index} after {attempts} attempts")]
    NoValidSample { id: String, index: String, attempts: u32 },
}

/// Rejects `value` when `|value| < GUARD · scale`.
pub(crate) fn guard(value: C, scale: f64, what: &str) -> Result<C, NumError> {
    if value.norm() < GUARD * scale.max(f64::MIN_POSITIVE) {
        return Err(NumError::DenominatorNearZero {
            what: what.into(),
            value: value.norm(),
        });
    }
    Ok(value)
}

/// One random draw of parameters and evaluation points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericSample {
    pub seed: u64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub lambda: f64,
    pub t: f64,
    /// `u = q^{1/2}`.
    pub u_value: f64,
    /// A point of the positive quadrant for the `(x, y)` charts.
    pub x: f64,
    pub y: f64,
    /// Second coordinate for the `(z, w)` chart (the first is `x`).
    pub w: f64,
    /// Real point for the one-variable charts, `0.1 ≤ |s| ≤ 0.9`.
    pub s: f64,
    /// Argument of the unit-modulus point `z = e^{iθ}`.
    pub theta: f64,
    /// Coefficients of the generic test functions used for operator
    /// identities.
    pub coeffs: Vec<f64>,
}

impl NumericSample {
    pub fn draw(seed: u64) -> NumericSample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut param = || rng.gen_range(0.1..1.5);
        let (alpha, beta, gamma, lambda) = (param(), param(), param(), param());
        let t = rng.gen_range(0.1..0.9);
        let q: f64 = rng.gen_range(0.2..0.9);
        let x = rng.gen_range(0.2..1.5);
        let y = rng.gen_range(0.2..1.5);
        let w = rng.gen_range(0.2..1.5);
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let s = sign * rng.gen_range(0.1..0.9);
        let theta = loop {
            let th = rng.gen_range(0.0..std::f64::consts::TAU);
            if shadows::theta_ok(th) {
                break th;
            }
        };
        let coeffs = (0..15).map(|_| rng.gen_range(-1.0..1.0)).collect();
        NumericSample {
            seed,
            alpha,
            beta,
            gamma,
            lambda,
            t,
            u_value: q.sqrt(),
            x,
            y,
            w,
            s,
            theta,
            coeffs,
        }
    }

    pub fn q(&self) -> f64 {
        self.u_value * self.u_value
    }

    pub fn u(&self) -> f64 {
        self.u_value
    }

    /// Values of all variables in table order; `ξ = x+y`, `η = xy` and
    /// `z = e^{iθ}`.
    pub fn values(&self) -> [C; NVARS] {
        let mut v = [C::new(0.0, 0.0); NVARS];
        let r = |x: f64| C::new(x, 0.0);
        v[Var::X.index()] = r(self.x);
        v[Var::Y.index()] = r(self.y);
        v[Var::Z.index()] = C::from_polar(1.0, self.theta);
        v[Var::W.index()] = r(self.w);
        v[Var::Xi.index()] = r(self.x + self.y);
        v[Var::Eta.index()] = r(self.x * self.y);
        v[Var::Alpha.index()] = r(self.alpha);
        v[Var::Beta.index()] = r(self.beta);
        v[Var::Gamma.index()] = r(self.gamma);
        v[Var::Lambda.index()] = r(self.lambda);
        v[Var::T.index()] = r(self.t);
        v[Var::U.index()] = r(self.u_value);
        v
    }
}

/// Floating-point value of an exact rational function at a sample.
pub fn eval_exact(r: &RationalFunction, sample: &NumericSample) -> Result<C, NumError> {
    let vals = sample.values();
    let den = r.denom().eval_complex(&vals);
    guard(den, r.denom().eval_magnitude(&vals), "denominator")?;
    Ok(r.numer().eval_complex(&vals) / den)
}

/// Per-sample seed derived from the run seed, the sample number and the
/// resampling attempt.
fn sample_seed(seed: u64, index: usize, i: usize, attempt: u32) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for v in [index as u64, i as u64, attempt as u64] {
        h = (h ^ v).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h ^= h >> 31;
    }
    h
}

/// Outcome of a numeric identity check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericReport {
    pub id: String,
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
    pub mutate: bool,
    /// Largest `|LHS - RHS| / (1 + |LHS|)` over all samples and checks.
    pub max_deviation: f64,
    /// Index and sample seed where the maximum occurred.
    pub worst_index: String,
    pub worst_seed: u64,
    /// Number of (index, sample) evaluations.
    pub evaluations: usize,
    /// Samples rejected by the denominator guard.
    pub rejected: usize,
    pub pass: bool,
}

fn index_label(n: i64, k: i64, two: bool) -> String {
    if two {
        format!("n={n},k={k}")
    } else {
        format!("n={n}")
    }
}

/// Evaluates an identity at `samples` random samples for every index of
/// its default range. With `mutate`, the ladder constant is perturbed as in
/// the exact mutation run.
pub fn numeric_identity_check(
    id: &str,
    samples: usize,
    tol: f64,
    seed: u64,
    mutate: bool,
) -> Result<NumericReport, NumError> {
    let case = find_case(id).ok_or_else(|| NumError::UnknownIdentity(id.into()))?;
    let shadow = shadows::shadow(id).ok_or_else(|| NumError::UnknownIdentity(id.into()))?;
    let two = matches!(case.range, crate::verify::IndexRange::NK { .. });
    let indices = case.indices(None, None);
    let jobs: Vec<(usize, i64, i64, usize)> = indices
        .iter()
        .enumerate()
        .flat_map(|(ix, &(n, k))| (0..samples).map(move |i| (ix, n, k, i)))
        .collect();
    let results: Vec<Result<(f64, u64, u32), NumError>> = jobs
        .par_iter()
        .map(|&(ix, n, k, i)| {
            for attempt in 0..MAX_ATTEMPTS {
                let s = NumericSample::draw(sample_seed(seed, ix, i, attempt));
                match shadow(n, k, &s, mutate) {
                    Ok(pairs) => {
                        let dev = pairs
                            .iter()
                            .map(|(l, r)| {
                                let d = (l - r).norm() / (1.0 + l.norm());
                                if d.is_nan() {
                                    f64::INFINITY
                                } else {
                                    d
                                }
                            })
                            .fold(0.0, f64::max);
                        return Ok((dev, s.seed, attempt));
                    }
                    Err(NumError::DenominatorNearZero { .. }) => continue,
                    Err(e) => return Err(e),
                }
            }
            Err(NumError::NoValidSample {
                id: id.into(),
                index: index_label(n, k, two),
                attempts: MAX_ATTEMPTS,
            })
        })
        .collect();
    let mut report = NumericReport {
        id: id.into(),
        samples,
        tol,
        seed,
        mutate,
        max_deviation: 0.0,
        worst_index: String::new(),
        worst_seed: 0,
        evaluations: jobs.len(),
        rejected: 0,
        pass: true,
    };
    for (job, r) in jobs.iter().zip(results) {
        let (dev, s, attempts) = r?;
        report.rejected += attempts as usize;
        if dev > report.max_deviation || report.worst_index.is_empty() {
            report.max_deviation = dev.max(report.max_deviation);
            report.worst_index = index_label(job.1, job.2, two);
            report.worst_seed = s;
        }
    }
    report.pass = report.max_deviation <= tol;
    Ok(report)
}

/// One row of the `q → 1` table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitRow {
    pub epsilon: f64,
    pub q: f64,
    pub value: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitTable {
    pub n: u32,
    pub lambda: f64,
    pub x: f64,
    /// `C_n^{(λ)}(x)`.
    pub limit: f64,
    pub rows: Vec<LimitRow>,
    /// Empirical orders `log(d_i/d_{i+1}) / log(ε_i/ε_{i+1})`; empty when
    /// the deviations vanish to rounding.
    pub orders: Vec<f64>,
}

impl LimitTable {
    /// Deviations at the level of rounding error.
    pub fn is_exact(&self) -> bool {
        self.rows.iter().all(|r| r.deviation <= 1e-12 * (1.0 + self.limit.abs()))
    }

    /// First-order convergence: every empirical order in `[0.9, 1.1]`, or
    /// no deviation at all.
    pub fn first_order(&self) -> bool {
        self.is_exact() || self.orders.iter().all(|o| (0.9..=1.1).contains(o))
    }
}

/// `C_n(x; q^λ | q)` at `q = 1 - ε` against `C_n^{(λ)}(x)`.
pub fn q_limit_check(n: u32, lambda: f64, x: f64, epsilons: &[f64]) -> LimitTable {
    let limit = special::gegenbauer(n, lambda, &Jet::real(x, 0)).value().re;
    let rows: Vec<LimitRow> = epsilons
        .iter()
        .map(|&eps| {
            let q = 1.0 - eps;
            let value = if x.abs() <= 1.0 {
                special::qultra_fourier_cos(n, lambda, q, x.acos())
            } else {
                special::qultra(n, q.powf(lambda), q, &Jet::real(x, 0)).value().re
            };
            LimitRow {
                epsilon: eps,
                q,
                value,
                deviation: (value - limit).abs(),
            }
        })
        .collect();
    let mut table = LimitTable {
        n,
        lambda,
        x,
        limit,
        rows,
        orders: Vec::new(),
    };
    if !table.is_exact() {
        table.orders = table
            .rows
            .windows(2)
            .map(|w| (w[0].deviation / w[1].deviation).ln() / (w[0].epsilon / w[1].epsilon).ln())
            .collect();
    }
    table
}

/// Numeric rank data of `Ω` on homogeneous symmetric polynomials.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelRank {
    pub n: u32,
    pub t: f64,
    pub q: f64,
    /// Dimension of the symmetric degree-`n` space.
    pub dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    /// Singular values after scaling each column by the size of its
    /// entries before cancellation.
    pub singular_values: Vec<f64>,
}

/// Relative singular value separating rank from kernel.
const RANK_TOL: f64 = 1e-9;

/// `Ω` applied to the symmetric monomials of degree `n`, evaluated at
/// enough points to determine the image; the kernel dimension is the
/// column count minus the numeric rank.
pub fn omega_kernel_rank(n: u32, t: f64, q: f64, seed: u64) -> Result<KernelRank, NumError> {
    let basis: Vec<(i32, i32)> = (0..=n as i32 / 2).map(|k| (n as i32 - k, k)).collect();
    let cols = basis.len();
    let rows = 2 * cols + 4;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mono = |x: f64, y: f64, (a, b): (i32, i32)| {
        if a == b {
            x.powi(a) * y.powi(b)
        } else {
            x.powi(a) * y.powi(b) + x.powi(b) * y.powi(a)
        }
    };
    let mut m = DMatrix::<f64>::zeros(rows, cols);
    // per-column size of the entries before cancellation, the reference
    // against which a column counts as zero
    let mut scale = vec![0.0f64; cols];
    let mut r = 0;
    while r < rows {
        // Ω is homogeneous, so only the ratio x/y matters; spread it
        // log-uniformly around 1
        let x: f64 = rng.gen_range(-1.5f64..1.5).exp();
        let y = 1.0;
        if guard(C::new(x - y, 0.0), x + y, "x - y").is_err() || (x - y).abs() < 0.05 {
            continue;
        }
        for (c, &e) in basis.iter().enumerate() {
            let f = |a: f64, b: f64| mono(a, b, e);
            let terms = [
                f(x, y),
                -(t * x - y) / (x - y) * f(q * x, y),
                -(x - t * y) / (x - y) * f(x, q * y),
                t * f(q * x, q * y),
            ];
            m[(r, c)] = terms.iter().sum::<f64>() / (x * y);
            scale[c] += (terms.iter().map(|v| v.abs()).sum::<f64>() / (x * y)).powi(2);
        }
        r += 1;
    }
    for (c, s) in scale.iter().enumerate() {
        let s = s.sqrt();
        if s > 0.0 {
            m.column_mut(c).scale_mut(1.0 / s);
        }
    }
    let rel: Vec<f64> = m.singular_values().iter().copied().collect();
    if rel.iter().any(|&s| s > 1e-12 && s < 1e-7) {
        return Err(NumError::RankUnstable { n });
    }
    let rank = rel.iter().filter(|&&s| s > RANK_TOL).count();
    let mut singular_values = rel;
    singular_values.sort_by(|a, b| b.partial_cmp(a).expect("finite singular values"));
    Ok(KernelRank {
        n,
        t,
        q,
        dim: cols,
        rank,
        kernel_dim: cols - rank,
        singular_values,
    })
}

/// Ids with a numeric counterpart, in registry order.
pub fn numeric_ids() -> Vec<&'static str> {
    crate::verify::registry()
        .iter()
        .map(|c| c.id)
        .filter(|id| shadows::shadow(id).is_some())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{jacobi_r, macdonald_j_n0};
    use crate::exactalg::{MultiPoly, RationalFunction};

    fn close(a: C, b: f64) -> bool {
        (a - b).norm() < 1e-12 * (1.0 + b.abs())
    }

    #[test]
    fn every_registered_identity_has_a_shadow() {
        assert_eq!(numeric_ids().len(), crate::verify::registry().len());
    }

    #[test]
    fn exact_evaluation_examples() {
        let mut s = NumericSample::draw(1);
        s.t = 0.3;
        s.x = 1.0;
        s.y = 2.0;
        let j1 = RationalFunction::from_poly(macdonald_j_n0(1));
        assert!(close(eval_exact(&j1, &s).unwrap(), 2.1));
        s.x = 1.0;
        assert!(close(eval_exact(&jacobi_r(1).unwrap(), &s).unwrap(), 1.0));
        let g2 = RationalFunction::from_poly(crate::families::gegenbauer_x(2));
        s.lambda = 1.0;
        s.x = 0.5;
        assert!(close(eval_exact(&g2, &s).unwrap(), 0.0));
    }

    #[test]
    fn guarded_denominator() {
        let mut s = NumericSample::draw(2);
        s.x = 0.7;
        s.y = 0.7;
        let r = RationalFunction::ratio(MultiPoly::one(), &MultiPoly::var(Var::X) - &MultiPoly::var(Var::Y));
        assert!(matches!(eval_exact(&r, &s), Err(NumError::DenominatorNearZero { .. })));
    }

    #[test]
    fn recurrences_match_exact_families() {
        let s = NumericSample::draw(3);
        let x = Jet::real(s.x, 0);
        let exact = eval_exact(&jacobi_r(4).unwrap(), &s).unwrap();
        assert!((special::jacobi_r(4, s.alpha, s.beta, &x).value() - exact).norm() < 1e-10);
        let exact = eval_exact(&RationalFunction::from_poly(macdonald_j_n0(3)), &s).unwrap();
        let num = special::macdonald_j(3, s.t, s.q(), &x, &Jet::real(s.y, 0)).value();
        assert!((num - exact).norm() < 1e-10 * (1.0 + exact.norm()));
    }

    #[test]
    fn trivial_and_mutated_checks() {
        let r = numeric_identity_check("1.04", 10, 1e-9, 7, false).unwrap();
        assert!(r.pass, "{r:?}");
        let r = numeric_identity_check("6.02", 10, 1e-9, 7, true).unwrap();
        assert!(!r.pass && r.max_deviation > 1e-6, "{r:?}");
        assert!(numeric_identity_check("nope", 1, 1e-9, 0, false).is_err());
    }

    #[test]
    fn limit_examples() {
        let eps = [1e-3, 1e-4, 1e-5];
        let t0 = q_limit_check(0, 0.7, 0.3, &eps);
        assert!(t0.rows.iter().all(|r| r.deviation == 0.0));
        let t1 = q_limit_check(1, 1.0, 0.5, &eps);
        assert!(t1.is_exact());
        let t4 = q_limit_check(4, 0.7, 0.3, &eps);
        for w in t4.rows.windows(2) {
            let ratio = w[0].deviation / w[1].deviation;
            assert!((ratio - 10.0).abs() < 0.5, "{ratio}");
        }
        assert!(t4.first_order());
        for n in 0..=8 {
            for (lam, x) in [(0.7, 0.3), (1.5, -0.8), (0.25, 0.95)] {
                let t = q_limit_check(n, lam, x, &eps);
                assert!(t.first_order(), "{t:?}");
            }
        }
    }

    #[test]
    fn omega_rank_examples() {
        for n in [1, 4, 7] {
            let r = omega_kernel_rank(n, 0.37, 0.52, 11).unwrap();
            assert_eq!(r.kernel_dim, 1, "{r:?}");
        }
        for (t, q, seed) in [(0.37, 0.52, 1), (0.61, 0.33, 2), (0.22, 0.81, 3)] {
            for n in 0..=8 {
                let r = omega_kernel_rank(n, t, q, seed).unwrap();
                assert_eq!(r.kernel_dim, 1, "{r:?}");
            }
        }
    }
}
