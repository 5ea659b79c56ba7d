//! Registry of identities as executable exact checks.
//!
//! Each case builds both sides exactly for one index (or index pair) and
//! passes iff their difference is identically zero.

mod cases_bc2;
mod cases_q;
mod cases_rank1;
mod registry;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{render_ratfun, AlgebraError, KernelPoly, RationalFunction};
use crate::families::FamilyError;
use crate::operators::{DiffOp, OperatorError, ShiftOp};

pub use registry::{find_case, registry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("identity {id} at {index}: {message}")]
    BuilderError { id: String, index: String, message: String },
}

/// Failure inside a case builder.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildFailure {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("{0}")]
    Other(String),
}

/// An exact value that can be compared with another of the same kind.
#[derive(Clone, Debug)]
pub enum Comparable {
    Rational(RationalFunction),
    Kernel(KernelPoly),
    Diff(DiffOp),
    Shift(ShiftOp),
}

impl From<RationalFunction> for Comparable {
    fn from(r: RationalFunction) -> Self {
        Comparable::Rational(r)
    }
}

impl From<KernelPoly> for Comparable {
    fn from(k: KernelPoly) -> Self {
        Comparable::Kernel(k)
    }
}

impl From<DiffOp> for Comparable {
    fn from(d: DiffOp) -> Self {
        Comparable::Diff(d)
    }
}

impl From<ShiftOp> for Comparable {
    fn from(s: ShiftOp) -> Self {
        Comparable::Shift(s)
    }
}

impl Comparable {
    /// Rendering of `self - other`, or `None` when it vanishes.
    pub fn residual(&self, other: &Comparable) -> Result<Option<String>, BuildFailure> {
        let text = match (self, other) {
            (Comparable::Rational(a), Comparable::Rational(b)) => {
                let d = a - b;
                (!d.is_zero()).then(|| render_ratfun(&d))
            }
            (Comparable::Kernel(a), Comparable::Kernel(b)) => {
                let d = a.sub(b)?;
                (!d.is_zero()).then(|| d.to_string())
            }
            (Comparable::Diff(a), Comparable::Diff(b)) => {
                let d = a.sub(b);
                (!d.is_zero()).then(|| d.render())
            }
            (Comparable::Shift(a), Comparable::Shift(b)) => {
                let d = a.sub(b);
                (!d.is_zero()).then(|| d.render())
            }
            _ => return Err(BuildFailure::Other("sides have different kinds".into())),
        };
        Ok(text)
    }
}

/// One equation inside a case: `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub lhs: Comparable,
    pub rhs: Comparable,
}

impl Check {
    pub fn new(label: impl Into<String>, lhs: impl Into<Comparable>, rhs: impl Into<Comparable>) -> Self {
        Check {
            label: label.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

/// Index and mutation flag handed to a builder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ctx {
    pub n: i64,
    pub k: i64,
    pub mutate: bool,
}

impl Ctx {
    /// `exact`, or `perturbed` when the case runs as a mutation test.
    pub fn pick<T>(&self, exact: T, perturbed: T) -> T {
        if self.mutate {
            perturbed
        } else {
            exact
        }
    }
}

pub type Builder = fn(&Ctx) -> Result<Vec<Check>, BuildFailure>;

/// Index set a case runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IndexRange {
    /// A single index-free check.
    Single,
    /// `n_min ..= n_max`.
    N { min: i64, max: i64 },
    /// All `n >= k >= 0` with `n + k <= max_sum`.
    NK { max_sum: i64 },
}

#[derive(Clone, Copy)]
pub struct IdentityCase {
    pub id: &'static str,
    pub chart: &'static str,
    pub notes: &'static str,
    pub range: IndexRange,
    pub builder: Builder,
}

impl IdentityCase {
    /// Index tuples for the given overrides.
    pub fn indices(&self, n_max: Option<i64>, k_max: Option<i64>) -> Vec<(i64, i64)> {
        match self.range {
            IndexRange::Single => vec![(0, 0)],
            IndexRange::N { min, max } => {
                let max = n_max.unwrap_or(max);
                (min..=max).map(|n| (n, 0)).collect()
            }
            IndexRange::NK { max_sum } => {
                // the n cap bounds the total degree n + k
                let total = n_max.unwrap_or(max_sum);
                let k_cap = k_max.unwrap_or(total);
                let mut out = Vec::new();
                for n in 0..=total {
                    for k in 0..=n.min(k_cap).min(total - n) {
                        out.push((n, k));
                    }
                }
                out
            }
        }
    }

    fn index_label(&self, n: i64, k: i64) -> String {
        match self.range {
            IndexRange::Single => "-".into(),
            IndexRange::N { .. } => format!("n={n}"),
            IndexRange::NK { .. } => format!("n={n},k={k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexOutcome {
    pub index: String,
    pub status: Status,
    /// Label of the failing check, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    /// Nonzero residual (fail) or error message (error).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub checks: usize,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub chart: String,
    pub notes: String,
    pub outcomes: Vec<IndexOutcome>,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub millis: f64,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0 && self.errors == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<i64>,
    /// Restricts the run to these identifiers (all when `None`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ids: Option<Vec<String>>,
    /// Runs every case with its ladder constant perturbed.
    #[serde(default)]
    pub mutate: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub reports: Vec<IdentityReport>,
    pub unknown: Vec<String>,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    /// The slowest identities, slowest first, with their total time.
    pub slowest: Vec<(String, f64)>,
}

impl Summary {
    pub fn all_pass(&self) -> bool {
        self.unknown.is_empty() && self.reports.iter().all(IdentityReport::all_pass)
    }
}

fn run_index(case: &IdentityCase, n: i64, k: i64, mutate: bool) -> IndexOutcome {
    let start = Instant::now();
    let index = case.index_label(n, k);
    let ctx = Ctx { n, k, mutate };
    let mut outcome = IndexOutcome {
        index,
        status: Status::Pass,
        check: None,
        detail: None,
        checks: 0,
        millis: 0.0,
    };
    match (case.builder)(&ctx) {
        Err(e) => {
            outcome.status = Status::Error;
            outcome.detail = Some(e.to_string());
        }
        Ok(checks) => {
            outcome.checks = checks.len();
            for c in &checks {
                match c.lhs.residual(&c.rhs) {
                    Ok(None) => {}
                    Ok(Some(r)) => {
                        outcome.status = Status::Fail;
                        outcome.check = Some(c.label.clone());
                        outcome.detail = Some(r);
                        break;
                    }
                    Err(e) => {
                        outcome.status = Status::Error;
                        outcome.check = Some(c.label.clone());
                        outcome.detail = Some(e.to_string());
                        break;
                    }
                }
            }
        }
    }
    outcome.millis = start.elapsed().as_secs_f64() * 1e3;
    outcome
}

fn run_case(case: &IdentityCase, config: &VerifyConfig) -> IdentityReport {
    let outcomes: Vec<IndexOutcome> = case
        .indices(config.n_max, config.k_max)
        .into_par_iter()
        .map(|(n, k)| run_index(case, n, k, config.mutate))
        .collect();
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    IdentityReport {
        id: case.id.into(),
        chart: case.chart.into(),
        notes: case.notes.into(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        errors: count(Status::Error),
        millis: outcomes.iter().map(|o| o.millis).sum(),
        outcomes,
    }
}

/// Runs one identity over its default range, optionally capped.
pub fn verify_identity(id: &str, n_max: Option<i64>, k_max: Option<i64>) -> Result<IdentityReport, VerifyError> {
    let case = find_case(id).ok_or_else(|| VerifyError::UnknownIdentity(id.into()))?;
    Ok(run_case(
        case,
        &VerifyConfig {
            n_max,
            k_max,
            ..VerifyConfig::default()
        },
    ))
}

/// Runs one identity with its ladder constant perturbed.
pub fn verify_mutated(id: &str, n_max: Option<i64>) -> Result<IdentityReport, VerifyError> {
    let case = find_case(id).ok_or_else(|| VerifyError::UnknownIdentity(id.into()))?;
    Ok(run_case(
        case,
        &VerifyConfig {
            n_max,
            mutate: true,
            ..VerifyConfig::default()
        },
    ))
}

/// Runs the selected identities concurrently; reports come back in
/// registry order.
pub fn verify_all(config: &VerifyConfig) -> Summary {
    let mut unknown = Vec::new();
    let cases: Vec<&IdentityCase> = match &config.ids {
        None => registry().iter().collect(),
        Some(ids) => {
            let mut out = Vec::new();
            for id in ids {
                match find_case(id) {
                    Some(c) => out.push(c),
                    None => unknown.push(id.clone()),
                }
            }
            out
        }
    };
    let reports: Vec<IdentityReport> = cases.par_iter().map(|c| run_case(c, config)).collect();
    let mut slowest: Vec<(String, f64)> = reports.iter().map(|r| (r.id.clone(), r.millis)).collect();
    slowest.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    slowest.truncate(5);
    Summary {
        passed: reports.iter().filter(|r| r.all_pass()).count(),
        failed: reports.iter().filter(|r| r.failed > 0).count(),
        errors: reports.iter().filter(|r| r.errors > 0).count(),
        reports,
        unknown,
        slowest,
    }
}

/// Machine-readable report of a verification run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema: String,
    pub version: String,
    pub config: VerifyConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub identities: Vec<IdentityReport>,
    pub unknown: Vec<String>,
    pub totals: BTreeMap<String, usize>,
}

pub const REPORT_SCHEMA: &str = "ladderops-report/1";

impl ReportFile {
    pub fn new(config: &VerifyConfig, summary: &Summary) -> Self {
        let mut totals = BTreeMap::new();
        totals.insert("identities".to_string(), summary.reports.len());
        totals.insert("passed".to_string(), summary.passed);
        totals.insert("failed".to_string(), summary.failed);
        totals.insert("errors".to_string(), summary.errors);
        ReportFile {
            schema: REPORT_SCHEMA.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            config: config.clone(),
            seed: None,
            identities: summary.reports.clone(),
            unknown: summary.unknown.clone(),
            totals,
        }
    }
}
