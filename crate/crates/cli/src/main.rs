use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tltt_core::driver::{emit_report, run, Format, RunConfig};

#[derive(Parser)]
#[command(name = "tltt", version, about = "Check two-level type theory source files")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check files in order against one shared signature.
    Check(CheckArgs),
}

#[derive(clap::Args)]
struct CheckArgs {
    /// Identify the strict and fibrant natural numbers, empty types and sums.
    #[arg(long)]
    strong: bool,
    /// Make all proofs of a strict equality definitionally equal.
    #[arg(long)]
    strict_proof_irrelevance: bool,
    /// Print one progress line per declaration to stderr.
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
    format: OutputFormat,
    /// Maximum definition unfoldings per declaration.
    #[arg(long, value_name = "N")]
    unfold_budget: Option<u64>,
    #[arg(required = true, value_name = "FILE")]
    files: Vec<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Human,
    Lines,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Command::Check(args) = cli.command;
    let format = match args.format {
        OutputFormat::Human => Format::Human,
        OutputFormat::Lines => Format::Lines,
    };
    let config = RunConfig {
        files: args.files,
        strong: args.strong,
        strict_proof_irrelevance: args.strict_proof_irrelevance,
        trace: args.trace,
        format,
        unfold_budget: args.unfold_budget,
    };
    let report = match run(&config) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("tltt: {e}");
            return ExitCode::from(2);
        }
    };
    let stderr = io::stderr();
    let mut err = stderr.lock();
    for line in &report.trace {
        let _ = writeln!(err, "{line}");
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match emit_report(&report, format, &mut out).and_then(|code| out.flush().map(|_| code)) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let _ = writeln!(err, "tltt: {e}");
            ExitCode::from(2)
        }
    }
}
