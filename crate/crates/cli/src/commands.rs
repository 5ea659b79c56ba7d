//! Command implementations. Each writes its report to `out` and returns
//! whether everything passed; usage problems come back as `Err`.

use std::io::Write;
use std::path::Path;

use ladderops_core::exactalg::Var;
use ladderops_core::families::{bc2_coefficient, Chart, Family, FamilyElement};
use ladderops_core::numcheck::{numeric_identity_check, numeric_ids, omega_kernel_rank, q_limit_check};
use ladderops_core::qseries::ParamAffine;
use ladderops_core::verify::{verify_all, IdentityReport, ReportFile, Status, VerifyConfig};

use crate::expr::parse_expr;

/// A usage, parse or I/O problem (exit status 2).
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub type CmdResult = Result<bool, UsageError>;

const DETAIL_WIDTH: usize = 160;

fn clip(s: &str) -> String {
    if s.chars().count() <= DETAIL_WIDTH {
        s.to_string()
    } else {
        let head: String = s.chars().take(DETAIL_WIDTH).collect();
        format!("{head}...")
    }
}

fn element(family: &str, indices: &[i64], chart: Option<&str>) -> Result<FamilyElement, UsageError> {
    let f = Family::from_name(family).ok_or_else(|| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        UsageError(format!("unknown family '{family}'; expected one of {}", names.join(", ")))
    })?;
    let el = FamilyElement::build(f, indices)?;
    match chart {
        None => Ok(el),
        Some(c) => {
            let c = Chart::from_name(c)
                .ok_or_else(|| UsageError(format!("unknown chart '{c}'; expected z, x, xy, zw or xieta")))?;
            Ok(el.in_chart(c)?)
        }
    }
}

pub fn show(out: &mut dyn Write, family: &str, indices: &[i64], chart: Option<&str>) -> CmdResult {
    let el = element(family, indices, chart)?;
    writeln!(out, "{}", el.value)?;
    Ok(true)
}

pub fn apply(out: &mut dyn Write, expr: &str, family: &str, indices: &[i64], chart: Option<&str>) -> CmdResult {
    let op = parse_expr(expr)?.eval()?;
    let el = element(family, indices, chart)?;
    let result = match op {
        crate::Value::Scalar(r) => &r * &el.value,
        crate::Value::Op(o) => o.apply(&el.value),
    };
    writeln!(out, "{result}")?;
    Ok(true)
}

pub fn eval(out: &mut dyn Write, expr: &str) -> CmdResult {
    let v = parse_expr(expr)?.eval()?;
    writeln!(out, "{}", v.render())?;
    Ok(true)
}

/// Jack-basis coefficients of `R_{n,k}`, one line per `(m, l)`.
pub fn expand_jack(out: &mut dyn Write, n: u32, k: u32) -> CmdResult {
    if k > n {
        return Err(UsageError(format!("expand-jack needs k <= n, got n={n} k={k}")));
    }
    let a = ParamAffine::param(Var::Alpha);
    let b = ParamAffine::param(Var::Beta);
    let g = ParamAffine::param(Var::Gamma);
    for l in 0..=k {
        for m in l..=n {
            let c = bc2_coefficient(n, k, m, l, &a, &b, &g)?;
            writeln!(out, "c[{n},{k};{m},{l}] = {c}")?;
        }
    }
    Ok(true)
}

fn index_lines(out: &mut dyn Write, r: &IdentityReport) -> std::io::Result<()> {
    for o in &r.outcomes {
        match o.status {
            Status::Pass => writeln!(out, "pass  {} {} ({} checks, {:.1} ms)", r.id, o.index, o.checks, o.millis)?,
            Status::Fail => writeln!(
                out,
                "FAIL  {} {}: {} has residual {}",
                r.id,
                o.index,
                o.check.as_deref().unwrap_or("check"),
                clip(o.detail.as_deref().unwrap_or(""))
            )?,
            Status::Error => writeln!(
                out,
                "ERROR {} {}: {}",
                r.id,
                o.index,
                clip(o.detail.as_deref().unwrap_or(""))
            )?,
        }
    }
    Ok(())
}

pub fn verify(out: &mut dyn Write, id: &str, n_max: Option<i64>, k_max: Option<i64>, mutate: bool) -> CmdResult {
    let config = VerifyConfig {
        n_max,
        k_max,
        ids: Some(vec![id.to_string()]),
        mutate,
    };
    let summary = verify_all(&config);
    if !summary.unknown.is_empty() {
        return Err(UsageError(format!("unknown identity '{id}'")));
    }
    let r = &summary.reports[0];
    index_lines(out, r)?;
    writeln!(
        out,
        "{}: {} passed, {} failed, {} errors ({:.0} ms)",
        r.id, r.passed, r.failed, r.errors, r.millis
    )?;
    Ok(r.all_pass())
}

pub fn verify_all_cmd(out: &mut dyn Write, config: &VerifyConfig, json: Option<&Path>) -> CmdResult {
    let summary = verify_all(config);
    for id in &summary.unknown {
        writeln!(out, "ERROR {id}: unknown identity")?;
    }
    for r in &summary.reports {
        let total = r.outcomes.len();
        if r.all_pass() {
            writeln!(out, "pass  {:<18} [{}] {}/{} ({:.0} ms)", r.id, r.chart, r.passed, total, r.millis)?;
        } else {
            let first = r.outcomes.iter().find(|o| o.status != Status::Pass).expect("a failing index");
            writeln!(
                out,
                "FAIL  {:<18} [{}] {}/{}; first failure {}: {}",
                r.id,
                r.chart,
                r.passed,
                total,
                first.index,
                clip(first.detail.as_deref().unwrap_or(""))
            )?;
        }
    }
    writeln!(
        out,
        "{} identities: {} passed, {} with failures, {} with errors",
        summary.reports.len(),
        summary.passed,
        summary.failed,
        summary.errors
    )?;
    let slow: Vec<String> = summary.slowest.iter().map(|(id, ms)| format!("{id} {ms:.0} ms")).collect();
    writeln!(out, "slowest: {}", slow.join(", "))?;
    if let Some(path) = json {
        let report = ReportFile::new(config, &summary);
        let text = serde_json::to_string_pretty(&report)?;
        std::fs::write(path, text + "\n").map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    }
    Ok(summary.all_pass())
}

pub fn numcheck(out: &mut dyn Write, id: &str, samples: usize, tol: f64, seed: u64, mutate: bool) -> CmdResult {
    let ids: Vec<String> = if id == "all" {
        numeric_ids().into_iter().map(String::from).collect()
    } else {
        vec![id.to_string()]
    };
    let mut all = true;
    for id in &ids {
        let r = match numeric_identity_check(id, samples, tol, seed, mutate) {
            Ok(r) => r,
            Err(e @ ladderops_core::numcheck::NumError::UnknownIdentity(_)) => return Err(e.into()),
            Err(e) => {
                writeln!(out, "ERROR {id}: {e}")?;
                all = false;
                continue;
            }
        };
        writeln!(
            out,
            "{}  {:<18} max deviation {:.2e} at {} (sample seed {}), {} evaluations, {} resampled, tol {:.0e}",
            if r.pass { "pass " } else { "FAIL " },
            r.id,
            r.max_deviation,
            r.worst_index,
            r.worst_seed,
            r.evaluations,
            r.rejected,
            r.tol
        )?;
        all &= r.pass;
    }
    Ok(all)
}

pub fn limits(out: &mut dyn Write, n: u32, lambda: f64, x: f64, eps: &[f64]) -> CmdResult {
    let t = q_limit_check(n, lambda, x, eps);
    writeln!(out, "C_{n}^({lambda})({x}) = {:.15e}", t.limit)?;
    writeln!(out, "{:>10} {:>12} {:>24} {:>12}", "eps", "q", "value", "deviation")?;
    for r in &t.rows {
        writeln!(out, "{:>10.1e} {:>12.8} {:>24.15e} {:>12.3e}", r.epsilon, r.q, r.value, r.deviation)?;
    }
    let orders: Vec<String> = t.orders.iter().map(|o| format!("{o:.3}")).collect();
    let ok = t.first_order();
    writeln!(
        out,
        "{} observed orders [{}]{}",
        if ok { "pass " } else { "FAIL " },
        orders.join(", "),
        if t.is_exact() { " (exact)" } else { "" }
    )?;
    Ok(ok)
}

pub fn omega_rank(out: &mut dyn Write, n: u32, t: f64, q: f64, seed: u64) -> CmdResult {
    let r = omega_kernel_rank(n, t, q, seed)?;
    let sv: Vec<String> = r.singular_values.iter().map(|s| format!("{s:.2e}")).collect();
    writeln!(
        out,
        "{} n={} t={} q={}: dim {}, rank {}, kernel {}; singular values [{}]",
        if r.kernel_dim == 1 { "pass " } else { "FAIL " },
        r.n,
        r.t,
        r.q,
        r.dim,
        r.rank,
        r.kernel_dim,
        sv.join(", ")
    )?;
    Ok(r.kernel_dim == 1)
}
