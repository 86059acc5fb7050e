//! `kempe`: command-line front end for the subcubic edge-coloring toolkit.
//!
//! Reports go to stdout as JSON (or plain text for `gen` and
//! `solve-params`), diagnostics to stderr. Exit status 0 means the checked
//! property holds, 1 that it fails, and 2 a usage or input error.

mod batch;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::Parser;

use commands::{Command, Outcome, EXIT_USAGE};
use report::{RunReport, VERSION};

#[derive(Parser, Debug)]
#[command(
    name = "kempe",
    version,
    about = "Edge-coloring tools for subcubic critical graphs"
)]
pub struct Cli {
    /// Worker threads for parallel searches; results do not depend on it
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Batch { manifest } => batch::run_batch(manifest),
        other => other.run(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    }
    let start = Instant::now();
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let mut stdout = std::io::stdout().lock();
    let written = match &outcome.text {
        Some(text) => stdout.write_all(text.as_bytes()),
        None => {
            let report = RunReport {
                subcommand: cli.command.name().to_string(),
                input_digest: outcome.digest,
                version: VERSION,
                payload: outcome.payload,
                wall_time_ms: start.elapsed().as_millis(),
            };
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            writeln!(stdout, "{json}")
        }
    };
    if let Err(e) = written.and_then(|()| stdout.flush()) {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(outcome.exit as u8)
}
