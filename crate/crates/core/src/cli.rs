//! The `tdcrit` command line. [`run`] does all the work so that it can be
//! driven from tests with in-memory streams.

use std::io::{Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::claims;
use crate::criticality::{is_gamma_t_critical, Verdict};
use crate::families::{FamilyKind, FamilySpec};
use crate::graph::Graph;
use crate::io::{parse_graph, parse_graphs, to_graph6};
use crate::search::{structured_search, SearchOptions, DEFAULT_CAP};
use crate::solver::total_domination_number;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "tdcrit",
    version,
    about = "Total domination numbers and γt-critical graphs"
)]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Total domination number and one minimum total dominating set.
    Gammat {
        /// File path, literal graph6 / edge list, or `-` for stdin (default).
        input: Option<String>,
    },
    /// Check total domination vertex criticality.
    Critical { input: Option<String> },
    /// Build a member of a critical family.
    Construct {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Enumerate m-γt-critical graphs of order Δ + m up to isomorphism.
    Search {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Disable the connectivity and lemma-2 pruners.
        #[arg(long)]
        no_prune: bool,
        /// Stop after this many candidates.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Identify vertex v1 of g1 with vertex v2 of g2.
    Amalgamate {
        g1: String,
        v1: usize,
        g2: String,
        v2: usize,
    },
    /// Replay the published claims.
    VerifyPaper {
        #[arg(long, default_value = "all")]
        scope: String,
    },
}

/// Sizes the global rayon pool from the `THREADS` environment variable.
pub fn configure_threads() {
    if let Some(n) = std::env::var("THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

struct Streams<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Streams { stdin, out, err };
    match execute(&cli, &mut io) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn read_input(arg: Option<&str>, stdin: &mut dyn Read) -> Result<String, String> {
    match arg {
        None | Some("-") => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| format!("reading stdin: {e}"))?;
            Ok(s)
        }
        Some(a) if Path::new(a).is_file() => {
            std::fs::read_to_string(a).map_err(|e| format!("reading {a}: {e}"))
        }
        Some(a) => Ok(a.to_string()),
    }
}

fn graph_arg(arg: &str) -> Result<Graph, String> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| format!("reading {arg}: {e}"))?
    } else {
        arg.to_string()
    };
    parse_graph(&text).map_err(|e| e.to_string())
}

fn emit(io: &mut Streams, json: bool, doc: Value, text: &[String]) -> Result<(), String> {
    let res = if json {
        writeln!(io.out, "{doc}")
    } else {
        text.iter().try_for_each(|l| writeln!(io.out, "{l}"))
    };
    res.map_err(|e| format!("writing output: {e}"))
}

fn execute(cli: &Cli, io: &mut Streams) -> Result<i32, String> {
    let json = cli.json;
    match &cli.command {
        Command::Gammat { input } => {
            let text = read_input(input.as_deref(), io.stdin)?;
            let graphs = parse_graphs(&text).map_err(|e| e.to_string())?;
            if graphs.is_empty() {
                return Err("no graph in input".into());
            }
            let mut lines = Vec::new();
            let mut results = Vec::new();
            let mut code = EXIT_OK;
            for g in &graphs {
                let r = total_domination_number(g);
                match (&r.value.finite(), &r.witness) {
                    (Some(k), Some(w)) => lines.push(format!("gamma_t={k} witness={w}")),
                    _ => {
                        lines.push("infeasible".to_string());
                        code = EXIT_INFEASIBLE;
                    }
                }
                results.push(json!({
                    "graph6": to_graph6(g),
                    "gamma_t": r.value,
                    "witness": r.witness,
                }));
            }
            emit(
                io,
                json,
                json!({"schema": SCHEMA, "results": results}),
                &lines,
            )?;
            Ok(code)
        }
        Command::Critical { input } => {
            let text = read_input(input.as_deref(), io.stdin)?;
            let graphs = parse_graphs(&text).map_err(|e| e.to_string())?;
            if graphs.is_empty() {
                return Err("no graph in input".into());
            }
            let mut lines = Vec::new();
            let mut results = Vec::new();
            let mut code = EXIT_OK;
            for g in &graphs {
                match is_gamma_t_critical(g) {
                    Ok(r) => {
                        lines.push(match r.verdict {
                            Verdict::Critical => format!("critical gamma_t={}", r.gamma_t),
                            Verdict::NotCritical(v) => {
                                format!("not_critical gamma_t={} vertex={v}", r.gamma_t)
                            }
                        });
                        results.push(json!({"graph6": to_graph6(g), "report": r}));
                    }
                    Err(e) => {
                        lines.push(format!("infeasible ({e})"));
                        results.push(json!({"graph6": to_graph6(g), "error": e.to_string()}));
                        code = EXIT_INFEASIBLE;
                    }
                }
            }
            emit(
                io,
                json,
                json!({"schema": SCHEMA, "results": results}),
                &lines,
            )?;
            Ok(code)
        }
        Command::Construct { family, m, delta } => {
            let spec = FamilySpec::new(*family, *m, *delta).map_err(|e| e.to_string())?;
            let g6 = to_graph6(&spec.build());
            let (order, d, gamma) = spec.expected();
            let doc = json!({
                "schema": SCHEMA,
                "spec": spec,
                "expected": {"order": order, "delta": d, "gamma_t": gamma},
                "graph6": g6,
            });
            emit(io, json, doc, std::slice::from_ref(&g6))?;
            Ok(EXIT_OK)
        }
        Command::Search {
            m,
            delta,
            cap,
            no_prune,
            budget,
        } => {
            let opts = SearchOptions {
                cap: *cap,
                prune: !no_prune,
                budget: *budget,
            };
            let o = structured_search(*m, *delta, &opts).map_err(|e| e.to_string())?;
            let found = o.graph6_lines();
            let mut lines = found.clone();
            lines.push(format!(
                "# summary m={m} delta={delta} nodes_explored={} exhausted={} count={}",
                o.nodes_explored,
                o.exhausted,
                found.len()
            ));
            let doc = json!({
                "schema": SCHEMA,
                "m": m,
                "delta": delta,
                "found": found,
                "nodes_explored": o.nodes_explored,
                "exhausted": o.exhausted,
                "count": found.len(),
            });
            emit(io, json, doc, &lines)?;
            Ok(EXIT_OK)
        }
        Command::Amalgamate { g1, v1, g2, v2 } => {
            let a = graph_arg(g1)?;
            let b = graph_arg(g2)?;
            let g = Graph::vertex_amalgamation(&a, *v1, &b, *v2).map_err(|e| e.to_string())?;
            let g6 = to_graph6(&g);
            emit(
                io,
                json,
                json!({"schema": SCHEMA, "graph6": g6}),
                std::slice::from_ref(&g6),
            )?;
            Ok(EXIT_OK)
        }
        Command::VerifyPaper { scope } => {
            let results = claims::verify(scope).ok_or_else(|| {
                format!(
                    "unknown scope {scope:?}; expected one of {}",
                    claims::SCOPES.join(", ")
                )
            })?;
            let passed = results.iter().filter(|c| c.pass).count();
            let mut lines: Vec<String> = results.iter().map(|c| c.to_string()).collect();
            lines.push(format!(
                "# summary scope={scope} passed={passed} total={}",
                results.len()
            ));
            let doc = json!({
                "schema": SCHEMA,
                "scope": scope,
                "claims": results,
                "passed": passed,
                "total": results.len(),
            });
            emit(io, json, doc, &lines)?;
            Ok(if passed == results.len() {
                EXIT_OK
            } else {
                EXIT_USAGE
            })
        }
    }
}
