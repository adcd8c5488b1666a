//! Command-line front end for the solvers: `solve` for explicit graphs,
//! `scan` for corpus sweeps with filters, `verify` for the theorem suite.
//!
//! Reports go to stdout in a machine-readable format (JSON by default);
//! progress and diagnostics go to stderr. Exit codes are a contract:
//! 0 success, 2 unusable input or parameters, 3 disconnected input,
//! 4 over-capacity input, 5 theorem-suite failure.

mod input;
mod report;
mod scan;
mod solve;
mod verify;

use clap::{Parser, Subcommand};

use report::OutputFormat;

#[derive(Parser)]
#[command(
    name = "resolvent",
    version,
    about = "Metric dimension, resolving number, and basis number of small connected graphs"
)]
struct Cli {
    /// Report format written to stdout.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Worker threads for corpus sweeps (default: all cores).
    #[arg(long, short = 'j', global = true, env = "RESOLVENT_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of explicitly named graphs.
    Solve(solve::SolveArgs),
    /// Sweep a corpus and report the graphs matching a filter.
    Scan(scan::ScanArgs),
    /// Re-verify the theorem suite over a corpus.
    Verify(verify::VerifyArgs),
}

fn exit_code(err: &resolvent::Error) -> i32 {
    use resolvent::Error;
    match err {
        Error::Disconnected => 3,
        Error::CapacityExceeded { .. } | Error::UnsupportedSize { .. } => 4,
        _ => 2,
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .ok();
    }
    let outcome = match &cli.command {
        Command::Solve(args) => solve::run(args, cli.format),
        Command::Scan(args) => scan::run(args, cli.format),
        Command::Verify(args) => verify::run(args, cli.format),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code(&err));
        }
    }
}
