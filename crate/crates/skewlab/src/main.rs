use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use skewlab::matrix_json::read_matrix;
use skewlab::verify::VerifyConfig;
use skewlab::{compute, sweep, verify, with_threads};
use skewlab_core::{Family, Tolerance};

/// Skew information and uncertainty relations for non-Hermitian operators.
#[derive(Parser)]
#[command(name = "skewlab", version)]
struct Cli {
    /// Worker threads for parallel commands (0 = one per core).
    #[arg(long, global = true, env = "SKEWLAB_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Werner,
    Isotropic,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Werner => Family::Werner,
            FamilyArg::Isotropic => Family::Isotropic,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check every relation on seeded random states and operators.
    Verify {
        /// Comma-separated dimensions.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4", value_parser = clap::value_parser!(u16).range(2..=64))]
        dims: Vec<u16>,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Relative tolerance on every comparison (absolute floor 1e-12).
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Report path; the report goes to stdout when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Also check the scalar lemmas.
        #[arg(long)]
        include_lemmas: bool,
    },
    /// Sweep a state family at fixed exponents.
    Sweep {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        start: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        end: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rectangular (alpha, beta) grid at one family parameter.
    Grid {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, allow_negative_numbers = true)]
        param: f64,
        #[arg(long, default_value_t = 50)]
        alpha_steps: usize,
        #[arg(long, default_value_t = 50)]
        beta_steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate every quantity on matrices read from JSON files.
    Compute {
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        op_a: PathBuf,
        #[arg(long)]
        op_b: Option<PathBuf>,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
    },
}

enum Outcome {
    Pass,
    Violation,
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .context("writing to stdout"),
    }
}

fn fmt_gap(g: Option<f64>) -> String {
    g.map_or_else(|| "n/a".to_owned(), sweep::format_number)
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let threads = cli.threads;
    match cli.command {
        Command::Verify {
            dims,
            samples,
            seed,
            tol,
            report,
            include_lemmas,
        } => {
            if !(tol.is_finite() && tol >= 0.0) {
                anyhow::bail!("--tol must be a nonnegative number");
            }
            let cfg = VerifyConfig {
                dims: dims.into_iter().map(usize::from).collect(),
                samples,
                seed,
                tol: Tolerance {
                    rel: tol,
                    abs: 1e-12,
                },
                include_lemmas,
            };
            let rep = with_threads(threads, || verify::run(&cfg))?;
            emit(report.as_deref(), &rep.to_json())?;
            for r in &rep.relations {
                eprintln!(
                    "{:<34} {:>7}/{:<7} worst slack {}",
                    r.relation,
                    r.passed,
                    r.total,
                    fmt_gap(r.worst_slack)
                );
            }
            Ok(if rep.all_hold() {
                Outcome::Pass
            } else {
                Outcome::Violation
            })
        }
        Command::Sweep {
            family,
            start,
            end,
            steps,
            alpha,
            beta,
            out,
        } => {
            let rows = with_threads(threads, || {
                sweep::sweep(family.into(), start, end, steps, alpha, beta)
            })??;
            emit(out.as_deref(), &sweep::to_csv(&rows))?;
            Ok(Outcome::Pass)
        }
        Command::Grid {
            family,
            param,
            alpha_steps,
            beta_steps,
            out,
        } => {
            let rows = with_threads(threads, || {
                sweep::grid(family.into(), param, alpha_steps, beta_steps)
            })??;
            emit(out.as_deref(), &sweep::to_csv(&rows))?;
            let (g14, g17) = sweep::mean_gaps(&rows);
            eprintln!("mean gap14 {}  mean gap17 {}", fmt_gap(g14), fmt_gap(g17));
            Ok(Outcome::Pass)
        }
        Command::Compute {
            state,
            op_a,
            op_b,
            alpha,
            beta,
        } => {
            let rho = read_matrix(&state)?;
            let a = read_matrix(&op_a)?;
            let b = op_b.as_deref().map(read_matrix).transpose()?;
            let result = compute::compute(&rho, &a, b.as_ref(), alpha, beta)?;
            emit(None, &result.to_json())?;
            Ok(if result.theorems_hold() {
                Outcome::Pass
            } else {
                Outcome::Violation
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
