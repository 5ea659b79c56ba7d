use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ladderops_cli::commands::{self, CmdResult};
use ladderops_core::verify::VerifyConfig;

/// Exact construction and verification of orthogonal polynomial ladder
/// identities.
#[derive(Parser)]
#[command(name = "ladderops", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Render a family member.
    Show {
        family: String,
        #[arg(allow_negative_numbers = true, required = true)]
        indices: Vec<i64>,
        /// Chart override (xy and xieta convert into each other).
        #[arg(long)]
        chart: Option<String>,
    },
    /// Apply an operator expression to a family member.
    Apply {
        expr: String,
        family: String,
        #[arg(allow_negative_numbers = true, required = true)]
        indices: Vec<i64>,
        #[arg(long)]
        chart: Option<String>,
    },
    /// Evaluate an expression and render the result.
    Eval { expr: String },
    /// Coefficients c[n,k;m,l] of R_{n,k} in the Jack basis.
    ExpandJack { n: u32, k: u32 },
    /// Verify one identity exactly.
    Verify {
        id: String,
        #[arg(long, env = "LADDEROPS_N_MAX")]
        n_max: Option<i64>,
        #[arg(long)]
        k_max: Option<i64>,
        /// Perturb the ladder constant; every identity should then fail.
        #[arg(long)]
        mutate: bool,
    },
    /// Verify every registered identity.
    VerifyAll {
        #[arg(long, env = "LADDEROPS_N_MAX")]
        n_max: Option<i64>,
        #[arg(long)]
        k_max: Option<i64>,
        /// Write the machine-readable report here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        mutate: bool,
    },
    /// Floating-point check of an identity (or `all`) at random samples.
    Numcheck {
        id: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        mutate: bool,
    },
    /// Convergence of the q-ultraspherical polynomials as q -> 1.
    Limits {
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = 0.7)]
        lambda: f64,
        #[arg(long, default_value_t = 0.3)]
        x: f64,
        #[arg(long, value_delimiter = ',', default_values_t = [1e-3, 1e-4, 1e-5])]
        eps: Vec<f64>,
    },
    /// Numeric kernel dimension of the q-shift operator on symmetric
    /// homogeneous polynomials of degree n.
    OmegaRank {
        n: u32,
        #[arg(long, default_value_t = 0.37)]
        t: f64,
        #[arg(long, default_value_t = 0.52)]
        q: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cmd: Cmd, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Cmd::Show { family, indices, chart } => commands::show(out, &family, &indices, chart.as_deref()),
        Cmd::Apply {
            expr,
            family,
            indices,
            chart,
        } => commands::apply(out, &expr, &family, &indices, chart.as_deref()),
        Cmd::Eval { expr } => commands::eval(out, &expr),
        Cmd::ExpandJack { n, k } => commands::expand_jack(out, n, k),
        Cmd::Verify { id, n_max, k_max, mutate } => commands::verify(out, &id, n_max, k_max, mutate),
        Cmd::VerifyAll {
            n_max,
            k_max,
            json,
            mutate,
        } => {
            let config = VerifyConfig {
                n_max,
                k_max,
                ids: None,
                mutate,
            };
            commands::verify_all_cmd(out, &config, json.as_deref())
        }
        Cmd::Numcheck {
            id,
            samples,
            tol,
            seed,
            mutate,
        } => commands::numcheck(out, &id, samples, tol, seed, mutate),
        Cmd::Limits { n, lambda, x, eps } => commands::limits(out, n, lambda, x, &eps),
        Cmd::OmegaRank { n, t, q, seed } => commands::omega_rank(out, n, t, q, seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        // help and version exit 0, usage errors 2
        Err(e) => e.exit(),
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = run(cli.cmd, &mut out);
    let _ = out.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e.0);
            ExitCode::from(2)
        }
    }
}
