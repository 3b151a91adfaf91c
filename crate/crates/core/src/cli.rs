//! The `cag` command line: JSON in, JSON out.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse or precondition
//! failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::analysis::family_stats;
use crate::constructions::{build, build_auto, BoxRep, Method};
use crate::error::Result;
use crate::generators::{gen_random, gen_roberts, gen_tightness};
use crate::model::{parse_ratio, ArcFamily, Graph};
use crate::oracle::{boxicity_exact_with, verify, OracleLimits};

#[derive(Debug, Parser)]
#[command(
    name = "cag",
    version,
    about = "Box representations of circular arc graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rewrite an arc family with distinct, evenly spaced, axis-free endpoints.
    Normalize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        alpha: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// Print n, max degree, r_inf, circular cover number and minimal alpha.
    Stats {
        #[arg(long)]
        input: PathBuf,
    },
    /// Build and verify a box representation.
    Build {
        #[arg(long)]
        input: PathBuf,
        /// interval | degree | overlap | cover | auto
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long)]
        output: PathBuf,
    },
    /// Check a box representation against an arc family or a graph.
    Verify {
        #[arg(long)]
        rep: PathBuf,
        #[command(flatten)]
        against: Against,
    },
    /// Exact boxicity of a small graph. The complete graph has boxicity 0.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 16)]
        max_non_edges: usize,
    },
    /// Generate arc families.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Against {
    #[arg(long)]
    arcs: Option<PathBuf>,
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Complement of a perfect matching on n vertices.
    Roberts {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Degree-bound tightness family.
    Tightness {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Seeded random family.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_len: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    VerifyFailed = 1,
    Precondition = 2,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_json(value)?)?;
    Ok(())
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    out.write_all(serde_json::to_string(value)?.as_bytes())?;
    out.write_all(b"\n")?;
    Ok(())
}

fn emit_family(out: &mut dyn Write, f: &ArcFamily, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => write_json(p, f),
        None => Ok(out.write_all(to_json(f)?.as_bytes())?),
    }
}

/// Runs one command; messages go to `out` and `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Status {
    match execute(cli.command, out, err) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_verification_failure() {
                Status::VerifyFailed
            } else {
                Status::Precondition
            }
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    match cmd {
        Command::Normalize {
            input,
            alpha,
            output,
        } => {
            let f: ArcFamily = read_json(&input)?;
            let g = f.normalize(alpha)?;
            write_json(&output, &g)?;
            let delta = g.intersection_graph().max_degree();
            emit(out, &json!({ "n": g.n(), "delta": delta }))?;
        }
        Command::Stats { input } => {
            let f: ArcFamily = read_json(&input)?;
            emit(out, &family_stats(&f)?)?;
        }
        Command::Build {
            input,
            method,
            alpha,
            output,
        } => {
            let f: ArcFamily = read_json(&input)?;
            let method: Method = method.parse()?;
            let (used, rep) = if method == Method::Auto {
                let report = build_auto(&f)?;
                for c in &report.candidates {
                    match &c.outcome {
                        Ok(dims) => writeln!(err, "{:<9}dims {dims}", c.method)?,
                        Err(why) => writeln!(err, "{:<9}skipped: {why}", c.method)?,
                    }
                }
                (report.method, report.rep)
            } else {
                build(&f, method, alpha)?
            };
            write_json(&output, &rep)?;
            emit(out, &json!({ "dims": rep.dims(), "method_used": used }))?;
        }
        Command::Verify { rep, against } => {
            let rep: BoxRep = read_json(&rep)?;
            let g: Graph = match (against.arcs, against.graph) {
                (Some(p), _) => read_json::<ArcFamily>(&p)?.intersection_graph(),
                (None, Some(p)) => read_json(&p)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            let report = verify(&rep, &g)?;
            emit(out, &report)?;
            if !report.ok {
                return Ok(Status::VerifyFailed);
            }
        }
        Command::Oracle {
            input,
            max_n,
            max_non_edges,
        } => {
            let g: Graph = read_json(&input)?;
            let limits = OracleLimits {
                max_vertices: max_n,
                max_non_edges,
            };
            let k = boxicity_exact_with(&g, limits)?;
            emit(out, &json!({ "boxicity": k }))?;
        }
        Command::Gen(g) => match g {
            GenCommand::Roberts { n, output } => {
                emit_family(out, &gen_roberts(n)?, output.as_deref())?
            }
            GenCommand::Tightness { alpha, n, output } => {
                emit_family(out, &gen_tightness(alpha, n)?, output.as_deref())?
            }
            GenCommand::Random {
                n,
                max_len,
                seed,
                output,
            } => {
                let len = parse_ratio(&max_len)?;
                emit_family(out, &gen_random(n, &len, seed)?, output.as_deref())?
            }
        },
    }
    Ok(Status::Ok)
}

impl From<Status> for std::process::ExitCode {
    fn from(s: Status) -> Self {
        std::process::ExitCode::from(s as u8)
    }
}
