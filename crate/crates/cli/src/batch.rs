//! Manifest-driven runs of several commands.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use clap::Parser;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::commands::{Command, Outcome, EXIT_HOLDS, EXIT_USAGE};
use crate::report::InputDigest;
use crate::Cli;

struct Task {
    line: usize,
    text: String,
    command: Command,
}

/// Parses every task before running any, so a malformed line fails the
/// whole batch without side effects.
fn parse_manifest(path: &Path, text: &str) -> Result<Vec<Task>> {
    let base = path.parent().unwrap_or(Path::new("."));
    let mut tasks = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let argv = std::iter::once("kempe").chain(line.split_whitespace());
        let cli = Cli::try_parse_from(argv).map_err(|e| {
            anyhow!(
                "manifest line {}: {}",
                idx + 1,
                e.render().to_string().trim_end()
            )
        })?;
        if cli.threads.is_some() {
            bail!(
                "manifest line {}: --threads applies to the whole batch only",
                idx + 1
            );
        }
        if matches!(cli.command, Command::Batch { .. }) {
            bail!(
                "manifest line {}: batch manifests cannot be nested",
                idx + 1
            );
        }
        let mut command = cli.command;
        command.resolve_paths(base);
        tasks.push(Task {
            line: idx + 1,
            text: line.to_string(),
            command,
        });
    }
    Ok(tasks)
}

/// Runs the manifest's tasks in parallel and reports them in manifest
/// order. The exit status is the largest task status.
pub fn run_batch(path: &Path) -> Result<Outcome> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let text = String::from_utf8(bytes.clone())
        .with_context(|| format!("{} is not UTF-8", path.display()))?;
    let tasks = parse_manifest(path, &text)?;

    let results: Vec<(i32, Value)> = tasks
        .par_iter()
        .map(|task| match task.command.run() {
            Ok(outcome) => (
                outcome.exit,
                json!({
                    "line": task.line,
                    "command": task.text,
                    "subcommand": task.command.name(),
                    "exit_code": outcome.exit,
                    "input_digest": outcome.digest,
                    "payload": outcome.payload,
                    "error": null,
                }),
            ),
            Err(e) => (
                EXIT_USAGE,
                json!({
                    "line": task.line,
                    "command": task.text,
                    "subcommand": task.command.name(),
                    "exit_code": EXIT_USAGE,
                    "input_digest": null,
                    "payload": null,
                    "error": format!("{e:#}"),
                }),
            ),
        })
        .collect();

    let exit = results.iter().map(|(c, _)| *c).max().unwrap_or(EXIT_HOLDS);
    let passed = results.iter().filter(|(c, _)| *c == EXIT_HOLDS).count();
    let mut digest = InputDigest::new("batch");
    digest.file("manifest", &bytes);
    for (_, r) in &results {
        if let Some(d) = r["input_digest"].as_str() {
            digest.scalar("task", d);
        }
    }
    let payload = json!({
        "total": results.len(),
        "passed": passed,
        "failed": results.len() - passed,
        "tasks": results.into_iter().map(|(_, r)| r).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        payload,
        text: None,
        exit,
        digest: digest.finish(),
    })
}
