//! `crlie`: problem files in, deterministic JSON or text reports out.

mod commands;
mod context;
mod corpus;
mod error;
mod problem;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

pub use commands::{execute, Command};
pub use context::Context;
pub use corpus::{fixtures, run_corpus, Fixture};
pub use error::CliError;
pub use problem::{parse_problem, Ambient, Format, Options, Problem, SubalgebraSource, Target, Toral};
pub use report::{canonical, emit_report, to_text};
pub use rootsys::DEFAULT_RANK_CAP;

#[derive(Parser, Debug)]
#[command(name = "crlie", version, about = "CR algebras of compact Lie groups: regularization, Par(v), fibrations")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Output format (overrides the problem file).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for randomized steps (overrides the problem file).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest rank for parabolic enumeration.
    #[arg(long = "rank-cap", global = true)]
    rank_cap: Option<usize>,
    /// Worker threads for the corpus.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Dimensions, n-reductivity, CR dimensions, regularity type, F-sets.
    Analyze { problem: PathBuf },
    /// Normalizer chain to the parabolic regularization.
    Regularize { problem: PathBuf },
    /// Maximal elements of Par(v).
    ParMax { problem: PathBuf },
    /// Minimal elements of Par(v).
    ParMin { problem: PathBuf },
    /// The map (k₀, v) → (k₀, q) for the target parabolic.
    Fibration { problem: PathBuf },
    /// v_q = v + nr(q) for the target parabolic.
    Lift { problem: PathBuf },
    /// Runs the bundled golden fixtures.
    Corpus,
}

/// Settings given on the command line; they win over the problem file.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub format: Option<Format>,
    pub seed: Option<u64>,
    pub rank_cap: Option<usize>,
}

/// Runs one command on a parsed problem and returns the report document.
pub fn run(command: Command, problem: Problem, overrides: Overrides) -> Result<serde_json::Value, CliError> {
    let seed = overrides.seed.or(problem.options.seed).unwrap_or(0);
    let rank_cap = overrides.rank_cap.or(problem.options.rank_cap).unwrap_or(DEFAULT_RANK_CAP);
    let timings = problem.options.timings;
    let input = problem.source.clone();
    let start = Instant::now();
    let ctx = Context::new(problem, seed, rank_cap)?;
    let result = execute(command, &ctx)?;
    let mut report = serde_json::json!({
        "command": command.name(),
        "input": input,
        "seed": seed,
        "rank_cap": rank_cap,
        "result": result,
    });
    if timings {
        report["timings_ms"] = serde_json::json!(start.elapsed().as_millis() as u64);
    }
    Ok(canonical(report))
}

fn read_problem(path: &PathBuf) -> Result<Problem, CliError> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Usage(format!("stdin: {e}")))?
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
    };
    parse_problem(&text)
}

/// Entry point shared by the binary and the tests; returns the exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let overrides = Overrides { format: cli.format, seed: cli.seed, rank_cap: cli.rank_cap };
    let outcome = match &cli.command {
        Cmd::Corpus => run_corpus(overrides, cli.jobs.unwrap_or(1)).map(|(report, ok)| (report, ok, Format::Json)),
        Cmd::Analyze { problem }
        | Cmd::Regularize { problem }
        | Cmd::ParMax { problem }
        | Cmd::ParMin { problem }
        | Cmd::Fibration { problem }
        | Cmd::Lift { problem } => {
            let command = match &cli.command {
                Cmd::Analyze { .. } => Command::Analyze,
                Cmd::Regularize { .. } => Command::Regularize,
                Cmd::ParMax { .. } => Command::ParMax,
                Cmd::ParMin { .. } => Command::ParMin,
                Cmd::Fibration { .. } => Command::Fibration,
                _ => Command::Lift,
            };
            read_problem(problem).and_then(|p| {
                let format = p.options.format.unwrap_or(Format::Json);
                run(command, p, overrides).map(|r| (r, true, format))
            })
        }
    };
    match outcome {
        Ok((report, ok, format)) => {
            let bytes = emit_report(&report, overrides.format.unwrap_or(format));
            let _ = out.write_all(&bytes);
            if ok {
                0
            } else {
                2
            }
        }
        Err(e) => {
            let _ = writeln!(err, "crlie: {e}");
            e.exit_code()
        }
    }
}
