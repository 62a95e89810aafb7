//! edgepoly: decide decomposability of edge polytopes from the command line.
//!
//! Machine-readable JSON goes to stdout, human-readable notes to stderr.
//! Exit codes: 0 decomposable / valid / clean, 1 indecomposable / invalid /
//! violations found, 2 error.

mod analyze;
mod generate;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use edgepoly::sweep::{run_sweep, SweepConfig};
use edgepoly::{classify, edge_signs, io, Weighting, DEFAULT_ORACLE_CAP};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "edgepoly",
    version,
    about = "Decide whether the edge polytope of a graph is decomposable",
    after_help = "EXAMPLES:\n\
                  \n  edgepoly generate tripan 5 --out t5.g\
                  \n  edgepoly analyze t5.g\
                  \n  edgepoly verify graph.g -- -1,-1,1,1,-1,1\
                  \n  edgepoly sweep 6 --oracle --jobs 8"
)]
struct Cli {
    /// Output format for stdout
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Search for type I and type II certificates of an edge-list file
    Analyze {
        file: PathBuf,
        /// Cross-check against exhaustive enumeration of {-1,0,1}^d
        #[arg(long)]
        oracle: bool,
        /// Largest vertex count the oracle accepts
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        max_oracle_d: usize,
    },
    /// Write a graph of a named family as an edge-list file
    #[command(after_help = "FAMILIES:\n\
                      \n  complete N            complete graph K_N\
                      \n  multipartite N1 N2 .. complete multipartite graph\
                      \n  cycle N               cycle C_N\
                      \n  path N                path on N vertices\
                      \n  tripan N              n-joined tri-pan T(N)\
                      \n  attach BASE --edge U,V   attach a 4-cycle to BASE at {U,V}")]
    Generate {
        family: String,
        params: Vec<String>,
        /// Edge for `attach`, as `u,v`
        #[arg(long)]
        edge: Option<String>,
        /// Output file (stdout if omitted)
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check a proposed weighting such as -1,0,1,... against a graph
    Verify {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        weights: String,
    },
    /// Sweep all labeled connected graphs up to MAX_N vertices
    Sweep {
        max_n: usize,
        #[arg(long)]
        oracle: bool,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        max_oracle_d: usize,
        /// Largest MAX_N accepted
        #[arg(long, default_value_t = edgepoly::families::DEFAULT_ENUMERATION_CAP)]
        max_n_cap: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print_json<T: Serialize>(_format: Format, value: &T) -> Result<()> {
    let mut out = std::io::stdout().lock();
    let written = serde_json::to_writer(&mut out, value)
        .map_err(std::io::Error::from)
        .and_then(|()| writeln!(out));
    match written {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let format = cli.format;
    match cli.command {
        Command::Analyze {
            file,
            oracle,
            max_oracle_d,
        } => {
            let g = read(&file)?;
            let out = analyze::run(&g, oracle.then_some(max_oracle_d))?;
            eprintln!(
                "{}: {} (type I: {}, type II: {})",
                file.display(),
                if out.report.decomposable {
                    "decomposable"
                } else {
                    "indecomposable"
                },
                yes_no(out.report.type_i.is_some()),
                yes_no(out.report.type_ii.is_some()),
            );
            if let Some(o) = &out.oracle {
                if !o.discrepancies.is_empty() {
                    eprintln!("oracle: {} discrepancies", o.discrepancies.len());
                }
            }
            print_json(format, &out)?;
            Ok(verdict(out.report.decomposable))
        }
        Command::Generate {
            family,
            params,
            edge,
            out,
        } => {
            let g = generate::build(&family, &params, edge.as_deref())?;
            let text = io::write_edge_list(&g);
            match out {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .with_context(|| format!("writing {}", path.display()))?;
                    eprintln!(
                        "wrote {} ({} vertices, {} edges)",
                        path.display(),
                        g.d(),
                        g.edge_count()
                    );
                }
                None => {
                    let mut out = std::io::stdout().lock();
                    match out.write_all(text.as_bytes()) {
                        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                        other => other?,
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, weights } => {
            let g = read(&file)?;
            let a: Weighting = weights.parse()?;
            let signs = edge_signs(&g, &a)?;
            let c = classify(&g, &a)?;
            let valid = c.pattern.is_some();
            for (p, n) in &c.incompatible {
                eprintln!("not cycle-compatible: positive {p}, negative {n}");
            }
            eprintln!(
                "{}",
                match c.pattern {
                    Some(p) => format!("valid, type {p}"),
                    None if c.general_valid => "separating, but matches neither pattern".into(),
                    None => "invalid".into(),
                }
            );
            print_json(
                format,
                &VerifyOutput {
                    weights: &a,
                    valid,
                    general_valid: c.general_valid,
                    pattern: c.pattern.map(|p| p.to_string()),
                    signs: &signs,
                    incompatible: &c.incompatible,
                },
            )?;
            Ok(verdict(valid))
        }
        Command::Sweep {
            max_n,
            oracle,
            jobs,
            max_oracle_d,
            max_n_cap,
        } => {
            let summary = run_sweep(&SweepConfig {
                max_n,
                oracle,
                jobs,
                max_oracle_d,
                max_n_cap,
            })?;
            let t = &summary.totals;
            eprintln!(
                "{} graphs ({} skipped): {} decomposable, {} type I only, {} type II only, {} both, {} neither; {} violations",
                t.graphs,
                t.skipped,
                t.decomposable,
                t.type_i_only,
                t.type_ii_only,
                t.both,
                t.neither,
                summary.violations.len()
            );
            print_json(format, &summary)?;
            Ok(verdict(summary.violations.is_empty()))
        }
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    weights: &'a Weighting,
    valid: bool,
    general_valid: bool,
    pattern: Option<String>,
    signs: &'a [edgepoly::EdgeSign],
    incompatible: &'a [(edgepoly::Edge, edgepoly::Edge)],
}

fn read(path: &std::path::Path) -> Result<edgepoly::Graph> {
    io::read_graph(path).with_context(|| format!("reading {}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
