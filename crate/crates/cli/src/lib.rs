//! The `bidikl` command line: graph files in, JSON reports and DOT out.
//!
//! Exit codes: 0 on success, 1 when the question has a negative answer
//! (no b-factor, a failed `verify`), 2 on bad input.

pub mod document;
pub mod dot;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use bidikl_core::{
    b_factor_components, b_flexible_components, b_kl_by_reduction, b_kl_decomposition, circular_components,
    classify_edges, find_b_factor, kl_decomposition, reach_profile, BidirectedGraph, EdgeId, EdgeSet, KlMethod, Sign,
    VertexId,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

pub use document::{load_graph_file, parse_graph_file, DocError, GraphDocument, LoadedGraph};
pub use dot::export_dot;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write `{path}`: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Document(#[from] DocError),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("partition covers {got} vertices but the graph has {expected}")]
    PartitionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Core(#[from] bidikl_core::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Reduction,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Reduction => "reduction",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bidikl",
    version,
    about = "Circular connectivity and Kotzig-Lovász classes of bidirected graphs"
)]
struct Cli {
    /// Write the output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ditrail reachability profiles, for one pair or all of them.
    Reach {
        file: PathBuf,
        #[arg(long, value_name = "ID")]
        from: Option<String>,
        #[arg(long, value_name = "ID")]
        to: Option<String>,
    },
    /// Circular and non-circular edges.
    Circular { file: PathBuf },
    /// Circular components.
    Components { file: PathBuf },
    /// Kotzig-Lovász classes.
    Kl {
        file: PathBuf,
        #[arg(long, default_value = "-", allow_hyphen_values = true)]
        sign: Sign,
    },
    /// Find a b-factor, optionally forcing or forbidding edges.
    Bfactor {
        file: PathBuf,
        #[arg(long, value_name = "EDGEID")]
        force: Vec<String>,
        #[arg(long, value_name = "EDGEID")]
        forbid: Vec<String>,
    },
    /// Kotzig-Lovász classes with respect to b.
    Bkl {
        file: PathBuf,
        #[arg(long, default_value = "-", allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
    },
    /// Graphviz rendering, with vertices coloured by class when a sign is given.
    ExportDot {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<Sign>,
    },
    /// Run the invariant suite.
    Verify { file: PathBuf },
}

impl Command {
    fn file(&self) -> &PathBuf {
        match self {
            Command::Reach { file, .. }
            | Command::Circular { file }
            | Command::Components { file }
            | Command::Kl { file, .. }
            | Command::Bfactor { file, .. }
            | Command::Bkl { file, .. }
            | Command::ExportDot { file, .. }
            | Command::Verify { file } => file,
        }
    }
}

struct Output {
    text: String,
    code: i32,
}

fn vertex(g: &BidirectedGraph, name: &str) -> Result<VertexId, CliError> {
    g.vertex_id(name)
        .ok_or_else(|| CliError::UnknownVertex(name.to_owned()))
}

fn edge_set(g: &BidirectedGraph, names: &[String]) -> Result<EdgeSet, CliError> {
    let ids: Vec<EdgeId> = names
        .iter()
        .map(|n| g.edge_id(n).ok_or_else(|| CliError::UnknownEdge(n.clone())))
        .collect::<Result<_, _>>()?;
    Ok(EdgeSet::from_edges(g.edge_count(), ids))
}

fn json_report(g: &BidirectedGraph, command: Value, results: Value, code: i32) -> Output {
    Output {
        text: report::to_text(&report::envelope(g, command, results)),
        code,
    }
}

fn execute(command: &Command, loaded: &LoadedGraph) -> Result<Output, CliError> {
    let g = &loaded.graph;
    let file = command.file().display().to_string();
    match command {
        Command::Reach { from, to, .. } => {
            let sources = match from {
                Some(n) => vec![vertex(g, n)?],
                None => g.vertices().collect(),
            };
            let targets = match to {
                Some(n) => vec![vertex(g, n)?],
                None => g.vertices().collect(),
            };
            let mut profiles = Vec::with_capacity(sources.len() * targets.len());
            for &u in &sources {
                for &v in &targets {
                    let p = reach_profile(g, u, v)?;
                    profiles.push(json!({
                        "from": g.vertex_name(u),
                        "to": g.vertex_name(v),
                        "profile": report::profile(&p),
                    }));
                }
            }
            let command = json!({"name": "reach", "file": file, "from": from, "to": to});
            Ok(json_report(g, command, json!({ "profiles": profiles }), EXIT_OK))
        }
        Command::Circular { .. } => {
            let structure = circular_components(g);
            let rest = EdgeSet::from_edges(g.edge_count(), g.edge_ids().filter(|&e| !structure.is_circular(e)));
            let results = json!({
                "circular_edges": report::edges(g, &structure.circular_edges),
                "non_circular_edges": report::edges(g, &rest),
            });
            Ok(json_report(
                g,
                json!({"name": "circular", "file": file}),
                results,
                EXIT_OK,
            ))
        }
        Command::Components { .. } => {
            let structure = circular_components(g);
            let results = json!({
                "components": report::partition(g, &structure.components),
                "circular_edges": report::edges(g, &structure.circular_edges),
            });
            Ok(json_report(
                g,
                json!({"name": "components", "file": file}),
                results,
                EXIT_OK,
            ))
        }
        Command::Kl { sign, .. } => {
            let kl = kl_decomposition(g, *sign);
            let results = json!({"sign": sign.as_str(), "classes": report::partition(g, &kl.partition)});
            let command = json!({"name": "kl", "file": file, "sign": sign.as_str()});
            Ok(json_report(g, command, results, EXIT_OK))
        }
        Command::Bfactor { force, forbid, .. } => {
            let plain = &loaded.plain;
            let forced = edge_set(plain, force)?;
            let forbidden = edge_set(plain, forbid)?;
            let command = json!({"name": "bfactor", "file": file, "force": force, "forbid": forbid});
            let found = match find_b_factor(plain, &loaded.b, &forced, &forbidden) {
                Ok(found) => found,
                Err(bidikl_core::Error::Conflict(_)) => None,
                Err(e) => return Err(e.into()),
            };
            let Some(m) = found else {
                return Ok(json_report(
                    plain,
                    command,
                    json!({"found": false, "edges": null}),
                    EXIT_NEGATIVE,
                ));
            };
            let mut results = json!({"found": true, "edges": report::edges(plain, &m)});
            if force.is_empty() && forbid.is_empty() {
                let status = classify_edges(plain, &loaded.b)?;
                let by_edge: serde_json::Map<String, Value> = plain
                    .edge_ids()
                    .map(|e| (plain.edge_name(e).to_owned(), json!(status[e.index()].as_str())))
                    .collect();
                results["edge_status"] = Value::Object(by_edge);
                results["flexible_components"] = report::partition(plain, &b_flexible_components(plain, &loaded.b)?);
                results["factor_components"] = report::partition(plain, &b_factor_components(plain, &loaded.b)?);
            }
            Ok(json_report(plain, command, results, EXIT_OK))
        }
        Command::Bkl { sign, method, .. } => {
            let plain = &loaded.plain;
            let command = json!({"name": "bkl", "file": file, "sign": sign.as_str(), "method": method.as_str()});
            let outcome = match (method, &loaded.matching) {
                (Method::Reduction, Some(m)) => b_kl_by_reduction(plain, &loaded.b, *sign, m),
                (Method::Reduction, None) => b_kl_decomposition(plain, &loaded.b, *sign, KlMethod::Reduction),
                (Method::Direct, _) => b_kl_decomposition(plain, &loaded.b, *sign, KlMethod::Direct),
            };
            match outcome {
                Ok(kl) => {
                    let results = json!({
                        "found": true,
                        "sign": sign.as_str(),
                        "classes": report::partition(plain, &kl.partition),
                    });
                    Ok(json_report(plain, command, results, EXIT_OK))
                }
                Err(bidikl_core::Error::NotFactorizable) => {
                    let results = json!({"found": false, "sign": sign.as_str(), "classes": null});
                    Ok(json_report(plain, command, results, EXIT_NEGATIVE))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::ExportDot { sign, .. } => {
            let kl = sign.map(|s| kl_decomposition(g, s));
            Ok(Output {
                text: export_dot(g, kl.as_ref())?,
                code: EXIT_OK,
            })
        }
        Command::Verify { .. } => {
            let checks = verify::run_checks(loaded);
            let passed = checks.iter().all(verify::Check::passed);
            let results = json!({
                "passed": passed,
                "checks": checks.iter().map(verify::Check::to_json).collect::<Vec<_>>(),
            });
            let code = if passed { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(json_report(g, json!({"name": "verify", "file": file}), results, code))
        }
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let path = cli.command.file();
    let bytes = std::fs::read(path).map_err(|source| CliError::Read {
        path: path.clone(),
        source,
    })?;
    let loaded = load_graph_file(&bytes)?;
    execute(&cli.command, &loaded)
}

/// Runs the command line `argv` (program name first), writing the result
/// to `stdout` or `--out` and diagnostics to `stderr`. Returns the exit code.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let output = match run(&cli) {
        Ok(output) => output,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &output.text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => stdout
            .write_all(output.text.as_bytes())
            .map_err(|source| CliError::Write {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_INPUT;
    }
    output.code
}
