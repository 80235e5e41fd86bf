use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use bicenter::format::{parse_instance, write_spec, FormatError};
use bicenter::gen::{generate, parse_range, GenParams, GraphKind, PairMode};
use bicenter::report::Report;
use bicenter::solve_parallel;
use bicenter::verify::{default_solver, describe, verify, VerifyConfig};
use bicenter_core::{SolveError, SolverKind, DEFAULT_ORACLE_CAP};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "bicenter", version, about = "Exact weighted bichromatic two-center solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    Graph,
    Tree,
    TreeUnweighted,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        solver: Option<SolverArg>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Pick witnesses in sequential order when testing edge pairs in parallel.
        #[arg(long)]
        deterministic: bool,
    },
    /// Write a random instance.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(long, value_parser = parse_range, default_value = "1..5")]
        weights: std::ops::RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range, default_value = "1..9")]
        lengths: std::ops::RangeInclusive<i64>,
        /// Pair every vertex instead of a random subset.
        #[arg(long)]
        all_paired: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check all solvers against the oracles on generated instances.
    Verify {
        /// Half-open range `A..B`.
        #[arg(long, value_parser = parse_seeds)]
        seeds: std::ops::Range<u64>,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn parse_seeds(text: &str) -> Result<std::ops::Range<u64>, String> {
    let (a, b) = text.split_once("..").ok_or_else(|| format!("expected A..B, got `{text}`"))?;
    let parse = |s: &str| s.trim().parse::<u64>().map_err(|_| format!("invalid seed range `{text}`"));
    Ok(parse(a)?..parse(b)?)
}

fn oracle_cap() -> anyhow::Result<usize> {
    match std::env::var("BICENTER_ORACLE_CAP") {
        Ok(v) => v.parse().with_context(|| format!("BICENTER_ORACLE_CAP=`{v}` is not a number")),
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
    }
}

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn cmd_solve(file: PathBuf, solver: Option<SolverArg>, format: OutputFormat, deterministic: bool) -> ExitCode {
    let text = match std::fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_INPUT, format!("{}: {e}", file.display())),
    };
    let instance = match parse_instance(&text) {
        Ok(i) => i,
        Err(e @ (FormatError::Syntax { .. } | FormatError::Truncated(_) | FormatError::Invalid(_))) => {
            return fail(EXIT_INPUT, format!("{}: {e}", file.display()))
        }
    };
    let kind = solver.map(|s| match s {
        SolverArg::Graph => SolverKind::Graph,
        SolverArg::Tree => SolverKind::Tree,
        SolverArg::TreeUnweighted => SolverKind::TreeUnweighted,
    });
    match solve_parallel(&instance, kind, deterministic) {
        Ok((solution, kind)) => {
            let report = Report::new(&instance, &solution, kind);
            match format {
                OutputFormat::Text => print!("{}", report.to_text()),
                OutputFormat::Json => println!("{}", report.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(e @ (SolveError::NotTree | SolveError::UnequalWeights | SolveError::NoEdges)) => fail(EXIT_INPUT, e),
        Err(e @ (SolveError::NoFeasibleCandidate | SolveError::Inconsistent { .. })) => fail(EXIT_INTERNAL, e),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    seed: u64,
    n: usize,
    m: Option<usize>,
    kind: GraphKind,
    weights: std::ops::RangeInclusive<i64>,
    lengths: std::ops::RangeInclusive<i64>,
    all_paired: bool,
    output: Option<PathBuf>,
) -> ExitCode {
    let pairs = if all_paired { PairMode::All } else { PairMode::Subset };
    let params = GenParams { seed, n, m, kind, weights, lengths, pairs };
    let spec = match generate(&params) {
        Ok(s) => s,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let text = write_spec(&spec);
    match output {
        Some(path) => match std::fs::write(&path, text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(EXIT_INPUT, format!("{}: {e}", path.display())),
        },
        None => {
            print!("{text}");
            ExitCode::SUCCESS
        }
    }
}

fn cmd_verify(seeds: std::ops::Range<u64>, max_n: usize, jobs: Option<usize>) -> ExitCode {
    let oracle_cap = match oracle_cap() {
        Ok(c) => c,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    if max_n > oracle_cap {
        return fail(EXIT_INPUT, format!("--max-n {max_n} exceeds the oracle cap {oracle_cap} (set BICENTER_ORACLE_CAP)"));
    }
    let summary = verify(&VerifyConfig { seeds, max_n, jobs, oracle_cap, solver: default_solver });
    print!("{}", describe(&summary));
    if summary.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(EXIT_INPUT);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match cli.command {
        Command::Solve { file, solver, format, deterministic } => cmd_solve(file, solver, format, deterministic),
        Command::Gen { seed, n, m, kind, weights, lengths, all_paired, output } => {
            cmd_gen(seed, n, m, kind, weights, lengths, all_paired, output)
        }
        Command::Verify { seeds, max_n, jobs } => cmd_verify(seeds, max_n, jobs),
    }
}
