//! Subcommand grammar and execution.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Subcommand;
use serde_json::{json, Value};

use kempe_core::audit::audit;
use kempe_core::coloring::{chromatic_index, is_3_critical};
use kempe_core::discharge::{parse_ratio, run_discharge, solve_parameters};
use kempe_core::fixability::{
    analyze, enumerate_boards, verify_certificate, Certificate, Configuration, Mode,
};
use kempe_core::generators::{enumerate_subcubic, petersen_star, woodall_j};
use kempe_core::Graph;

use crate::report::InputDigest;

/// Exit status meaning the checked property holds.
pub const EXIT_HOLDS: i32 = 0;
/// Exit status meaning the checked property fails.
pub const EXIT_FAILS: i32 = 1;
/// Exit status for usage, input and parse errors.
pub const EXIT_USAGE: i32 = 2;

/// Main bound's rich-vertex type sum, used when no parameters are given.
const DEFAULT_TYPE_SUM: u32 = 11;

#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// Exact chromatic index with a witness coloring
    Chi { file: PathBuf },
    /// Whether a connected graph of maximum degree 3 is 3-critical
    Critical { file: PathBuf },
    /// Generate graph families in the text format
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Scan for forbidden substructures
    Audit {
        file: PathBuf,
        /// Use the stricter rich-vertex threshold
        #[arg(long)]
        strict: bool,
    },
    /// Boards, reducibility proofs and certificate checks
    Fix {
        #[command(subcommand)]
        action: Fix,
    },
    /// Run the discharging rules and report final charges
    Discharge {
        file: PathBuf,
        #[arg(long, requires = "beta", conflicts_with = "type_sum")]
        alpha: Option<String>,
        #[arg(long, requires = "alpha", conflicts_with = "type_sum")]
        beta: Option<String>,
        /// Derive alpha and beta from this rich-vertex type sum [default: 11]
        #[arg(long)]
        type_sum: Option<u32>,
    },
    /// Print the equalizing alpha and beta for a type sum
    SolveParams { type_sum: u32 },
    /// Run every command listed in a manifest
    Batch { manifest: PathBuf },
}

#[derive(Subcommand, Clone, Debug)]
pub enum Family {
    /// The Petersen graph minus a vertex
    PStar,
    /// The k-th member of the iterated-join family
    Jk { k: usize },
    /// Every connected subcubic graph on n vertices, up to isomorphism
    Enumerate { n: usize },
}

#[derive(Subcommand, Clone, Debug)]
pub enum Fix {
    /// List canonical boards with the given number of slots
    Boards { t: usize },
    /// Search for a winning strategy and emit a certificate
    Prove {
        file: PathBuf,
        #[arg(long, default_value = "basic")]
        mode: Mode,
        /// Write the certificate here instead of embedding it in the payload
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate against its configuration
    Verify { file: PathBuf, cert: PathBuf },
}

/// Result of one command.
pub struct Outcome {
    pub payload: Value,
    /// Plain-text rendering printed instead of the JSON report.
    pub text: Option<String>,
    pub exit: i32,
    pub digest: String,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Chi { .. } => "chi",
            Command::Critical { .. } => "critical",
            Command::Gen { .. } => "gen",
            Command::Audit { .. } => "audit",
            Command::Fix {
                action: Fix::Boards { .. },
            } => "fix boards",
            Command::Fix {
                action: Fix::Prove { .. },
            } => "fix prove",
            Command::Fix {
                action: Fix::Verify { .. },
            } => "fix verify",
            Command::Discharge { .. } => "discharge",
            Command::SolveParams { .. } => "solve-params",
            Command::Batch { .. } => "batch",
        }
    }

    /// Rewrites relative file arguments against `base`.
    pub fn resolve_paths(&mut self, base: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        match self {
            Command::Chi { file }
            | Command::Critical { file }
            | Command::Audit { file, .. }
            | Command::Discharge { file, .. } => fix(file),
            Command::Fix { action } => match action {
                Fix::Boards { .. } => {}
                Fix::Prove { file, output, .. } => {
                    fix(file);
                    if let Some(o) = output {
                        fix(o);
                    }
                }
                Fix::Verify { file, cert } => {
                    fix(file);
                    fix(cert);
                }
            },
            Command::Batch { manifest } => fix(manifest),
            Command::Gen { .. } | Command::SolveParams { .. } => {}
        }
    }

    /// Runs every command except `batch`.
    pub fn run(&self) -> Result<Outcome> {
        let mut digest = InputDigest::new(self.name());
        let (payload, text, exit) = match self {
            Command::Chi { file } => {
                let g = read_graph(file, &mut digest)?;
                let chi = chromatic_index(&g)?;
                let payload = json!({
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "chi": chi.chromatic_index,
                    "witness": chi.witness,
                });
                (payload, None, EXIT_HOLDS)
            }
            Command::Critical { file } => critical(&read_graph(file, &mut digest)?)?,
            Command::Gen { family } => generate(family, &mut digest)?,
            Command::Audit { file, strict } => {
                let g = read_graph(file, &mut digest)?;
                digest.scalar("strict", strict);
                let report = audit(&g, *strict)?;
                let exit = if report.is_clean() {
                    EXIT_HOLDS
                } else {
                    EXIT_FAILS
                };
                let mut payload = serde_json::to_value(&report)?;
                payload["clean"] = json!(report.is_clean());
                payload["violation_count"] = json!(report.violation_count());
                (payload, None, exit)
            }
            Command::Fix { action } => fix(action, &mut digest)?,
            Command::Discharge {
                file,
                alpha,
                beta,
                type_sum,
            } => {
                let g = read_graph(file, &mut digest)?;
                let (alpha, beta) = match (alpha, beta) {
                    (Some(a), Some(b)) => (parse_ratio(a)?, parse_ratio(b)?),
                    _ => solve_parameters(type_sum.unwrap_or(DEFAULT_TYPE_SUM)),
                };
                digest.scalar("alpha", &alpha);
                digest.scalar("beta", &beta);
                let h = kempe_core::audit::decompose_h(&g);
                let trace = run_discharge(&g, &h, &alpha, &beta)?;
                let meets = trace.below_target.is_empty();
                let mut payload = serde_json::to_value(&trace)?;
                payload["meets_target"] = json!(meets);
                (payload, None, if meets { EXIT_HOLDS } else { EXIT_FAILS })
            }
            Command::SolveParams { type_sum } => {
                digest.scalar("type_sum", type_sum);
                let (a, b) = solve_parameters(*type_sum);
                let payload = json!({
                    "type_sum": type_sum,
                    "alpha": a.to_string(),
                    "beta": b.to_string(),
                });
                (payload, Some(format!("{a} {b}\n")), EXIT_HOLDS)
            }
            Command::Batch { .. } => bail!("batch manifests cannot be nested"),
        };
        Ok(Outcome {
            payload,
            text,
            exit,
            digest: digest.finish(),
        })
    }
}

fn read_bytes(path: &Path, digest: &mut InputDigest, name: &str) -> Result<String> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    digest.file(name, &bytes);
    String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
}

fn read_graph(path: &Path, digest: &mut InputDigest) -> Result<Graph> {
    let text = read_bytes(path, digest, "graph")?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_config(path: &Path, digest: &mut InputDigest) -> Result<Configuration> {
    let text = read_bytes(path, digest, "configuration")?;
    Configuration::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Graphs outside the domain (not maximum degree 3) are reported as not
/// critical; disconnected or non-simple input is an input error.
fn critical(g: &Graph) -> Result<(Value, Option<String>, i32)> {
    if g.max_degree() != 3 {
        g.require_simple()?;
        if !g.is_connected() {
            bail!("graph is disconnected");
        }
        let chi = chromatic_index(g)?.chromatic_index;
        let payload = json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "critical": false,
            "chromatic_index": chi,
            "first_failing_edge": null,
            "reason": format!("maximum degree is {}, not 3", g.max_degree()),
        });
        return Ok((payload, None, EXIT_FAILS));
    }
    let report = is_3_critical(g)?;
    let reason = if report.critical {
        None
    } else if report.chromatic_index == 3 {
        Some("the graph is 3-edge-colorable".to_string())
    } else {
        report
            .first_failing_edge()
            .map(|(u, v)| format!("deleting edge {u}-{v} leaves a graph needing 4 colors"))
    };
    let payload = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "critical": report.critical,
        "chromatic_index": report.chromatic_index,
        "first_failing_edge": report.first_failing_edge(),
        "reason": reason,
    });
    let exit = if report.critical {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    };
    Ok((payload, None, exit))
}

fn generate(family: &Family, digest: &mut InputDigest) -> Result<(Value, Option<String>, i32)> {
    let (name, graphs) = match family {
        Family::PStar => ("p-star", vec![petersen_star()]),
        Family::Jk { k } => {
            digest.scalar("k", k);
            ("jk", vec![woodall_j(*k)?])
        }
        Family::Enumerate { n } => {
            digest.scalar("n", n);
            ("enumerate", enumerate_subcubic(*n)?)
        }
    };
    digest.scalar("family", name);
    let texts: Vec<String> = graphs.iter().map(Graph::emit).collect();
    let mut text = texts.join("\n---\n");
    if !text.is_empty() {
        text.push('\n');
    }
    let payload = json!({ "family": name, "count": texts.len(), "graphs": texts });
    Ok((payload, Some(text), EXIT_HOLDS))
}

fn fix(action: &Fix, digest: &mut InputDigest) -> Result<(Value, Option<String>, i32)> {
    match action {
        Fix::Boards { t } => {
            digest.scalar("t", t);
            let boards: Vec<String> = enumerate_boards(*t)?
                .iter()
                .map(ToString::to_string)
                .collect();
            let payload = json!({ "slot_count": t, "count": boards.len(), "boards": boards });
            Ok((payload, None, EXIT_HOLDS))
        }
        Fix::Prove { file, mode, output } => {
            let cfg = read_config(file, digest)?;
            digest.scalar("mode", mode);
            let report = analyze(&cfg, *mode)?;
            let proved = report.certificate.is_some();
            let embedded = match (&report.certificate, output) {
                (Some(cert), Some(path)) => {
                    fs::write(path, cert.to_json() + "\n")
                        .with_context(|| format!("writing {}", path.display()))?;
                    Value::Null
                }
                (Some(cert), None) => serde_json::to_value(cert)?,
                (None, _) => Value::Null,
            };
            let payload = json!({
                "config_hash": cfg.hash(),
                "mode": report.mode,
                "proved": proved,
                "slot_count": report.slot_count,
                "board_count": report.board_count,
                "colorable_boards": report.colorable_boards,
                "losing_boards": report.losing_boards.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "states_explored": report.states_explored,
                "max_rank": report.max_rank,
                "certificate": embedded,
            });
            Ok((payload, None, if proved { EXIT_HOLDS } else { EXIT_FAILS }))
        }
        Fix::Verify { file, cert } => {
            let cfg = read_config(file, digest)?;
            let text = read_bytes(cert, digest, "certificate")?;
            let cert = Certificate::from_json(&text)
                .with_context(|| format!("parsing {}", cert.display()))?;
            let report = verify_certificate(&cfg, &cert);
            let payload = json!({
                "valid": report.valid,
                "diagnostic": report.diagnostic,
                "path": report.path,
            });
            Ok((
                payload,
                None,
                if report.valid { EXIT_HOLDS } else { EXIT_FAILS },
            ))
        }
    }
}
