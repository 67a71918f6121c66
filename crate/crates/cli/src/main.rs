//! `zic`: build, convert and search exact matrix-group instances.

mod commands;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "zic",
    version,
    about = "Exact reductions to stabilizer and zero-in-the-corner problems"
)]
struct Cli {
    /// Append a JSON run report (input and output hashes, timing) to this file.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Scan reduced words of the Schottky pair for non-hyperbolic elements.
    CertifyFree {
        /// Maximum word length scanned.
        #[arg(long)]
        depth: usize,
        /// JSON file `[[[s11,s12],[s21,s22]], [[...],[...]]]` replacing the canonical pair.
        #[arg(long, value_name = "FILE")]
        pair: Option<PathBuf>,
    },
    /// Build a problem instance from a presentation and a query.
    Build {
        #[arg(long, value_enum)]
        kind: BuildKind,
        /// Shipped sample name or path to a presentation JSON file.
        #[arg(long)]
        presentation: String,
        /// Word tuple such as "(ab, ab)" for ulcp and urcp, a single word for stabilizer.
        #[arg(long)]
        query: String,
        #[arg(long, value_name = "FILE")]
        pair: Option<PathBuf>,
        /// Output file; standard output when absent.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Bounded breadth-first search; exit 0 found, 3 exhausted, 4 truncated.
    Search {
        #[arg(long, value_name = "FILE")]
        instance: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = zic_core::search::DEFAULT_BUDGET)]
        budget: u64,
        /// Defaults to the instance kind's own predicate.
        #[arg(long)]
        predicate: Option<String>,
    },
    /// Run a named invariant suite, or "all".
    Validate {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = zic_core::search::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// List or export the shipped sample presentations.
    Samples {
        #[command(subcommand)]
        action: SamplesAction,
    },
    /// Convert a hyperplane instance into its zero-in-the-corner form.
    ConvertCorner {
        #[arg(long, value_name = "FILE")]
        instance: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum SamplesAction {
    List,
    /// Write every sample (or just `--name`) as `<name>.json` into `--dir`,
    /// or print one sample to standard output when `--dir` is absent.
    Export {
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_name = "DIR")]
        dir: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum BuildKind {
    Ulcp,
    Urcp,
    Stabilizer,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut run = report::Run::start(std::env::args().skip(1).collect());
    let result = commands::dispatch(&cli.command, &mut run);
    let code = match &result {
        Ok(code) => *code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    if let Some(path) = &cli.report {
        if let Err(e) = run.finish(code).append_to(path) {
            eprintln!("error: cannot write report {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}
