//! Command-line surface: file loading, dispatch, and JSON reports.
//!
//! Analysis commands print one `RunReport` JSON document; `gen` and
//! `basis-graph` print plain graph/matroid text so their output can be
//! piped straight back in. Exit codes: 0 = completed, 2 = negative or
//! inconclusive answer (NO/UNKNOWN separation, refused class
//! requirement, oracle disagreement), 1 = error.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::classes::{
    self, ClassReport,
};
use crate::convexity::hull;
use crate::enumeration::{enumerate_bruteforce, enumerate_flashlight};
use crate::formats;
use crate::generate;
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::matroid::{graphic_matroid, uniform_matroid};
use crate::separation::{halfspace_separation, shadow_closure, Answer};
use crate::vertex_set::VertexSet;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "geoconvex", version, about = "Geodesic convexity toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every structural class check on a graph
    Classify { graph: PathBuf },
    /// Convex hull of a vertex set
    Hull {
        graph: PathBuf,
        /// Comma-separated vertices, e.g. 0,2
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Shadow-closure trace and fixpoint for two seed sets
    ShadowClosure {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        b: Vec<usize>,
    },
    /// Decide whether complementary halfspaces separate two sets
    Separate {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        b: Vec<usize>,
        /// Refuse to run unless a supported class certificate holds
        #[arg(long)]
        require_class: bool,
        /// Write the last branch's formula in DIMACS CNF to this path
        #[arg(long, value_name = "PATH")]
        dimacs_cnf: Option<PathBuf>,
    },
    /// List all halfspaces of a graph
    Enumerate {
        graph: PathBuf,
        /// Also run the exhaustive subset scan and diff the lists
        #[arg(long)]
        oracle: bool,
    },
    /// Emit the basis graph of a matroid file in graph format
    BasisGraph { matroid: PathBuf },
    /// Print a generated graph or matroid
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Cross-validate separation answers against the subset scan
    OracleCheck {
        graph: PathBuf,
        /// Largest side size for the scanned (A, B) pairs
        #[arg(long, default_value_t = 2)]
        max_ab: usize,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Cycle on n >= 3 vertices
    Cycle { n: usize },
    /// Complete graph on n >= 1 vertices
    Complete { n: usize },
    /// Path on n >= 1 vertices
    Path { n: usize },
    /// Hypercube of dimension 1..=10
    Hypercube { d: u32 },
    /// The 6-vertex octahedron
    Octahedron,
    /// Uniform matroid of the given rank (matroid format output)
    Uniform { r: usize, n: usize },
    /// Graphic matroid of a graph file (matroid format output)
    Graphic { graph: PathBuf },
}

#[derive(Serialize)]
struct RunReport {
    schema: u32,
    command: &'static str,
    input_digest: String,
    result: Value,
    class_certificates: Vec<ClassReport>,
    timing_ms: u64,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            1
        }
    }
}

/// Prints to stdout, treating a closed pipe as a normal end of output.
fn print_stdout(text: &str) -> Result<()> {
    use std::io::{ErrorKind, Write};
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() == ErrorKind::BrokenPipe => Ok(()),
        other => other.context("writing to stdout"),
    }
}

fn digest_of(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let hex: String = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

/// Reads an input file, with `-` meaning stdin so commands compose in
/// pipelines.
fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin().lock(), &mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// Name used for `path` in messages: the file name, or "stdin" for `-`.
fn input_name(path: &Path) -> String {
    if path == Path::new("-") { "stdin".into() } else { path.display().to_string() }
}

struct GraphInput {
    graph: Graph,
    dist: DistanceMatrix,
    digest: String,
}

fn load_graph(path: &Path) -> Result<GraphInput> {
    let text = read_input(path)?;
    let digest = digest_of(text.as_bytes());
    let graph = formats::parse_graph(&text)?;
    let dist = all_pairs_distances(&graph)
        .with_context(|| format!("{} must describe a connected graph", input_name(path)))?;
    Ok(GraphInput { graph, dist, digest })
}

fn vertex_set(n: usize, members: &[usize]) -> Result<VertexSet> {
    for &v in members {
        if v >= n {
            bail!("vertex {v} out of range for a graph on {n} vertices");
        }
    }
    Ok(VertexSet::from_members(n, members.iter().copied()))
}

/// The class checks whose certificates make separation answers complete.
fn certificates(g: &Graph, d: &DistanceMatrix) -> Vec<ClassReport> {
    vec![
        classes::is_weakly_bridged(g, d),
        classes::is_pseudo_modular_metric(g, d),
        classes::is_matroid_basis_graph_candidate(g, d),
    ]
}

fn emit(
    command: &'static str,
    digest: String,
    result: Value,
    certs: Vec<ClassReport>,
    started: Instant,
) -> Result<()> {
    let report = RunReport {
        schema: SCHEMA_VERSION,
        command,
        input_digest: digest,
        result,
        class_certificates: certs,
        timing_ms: started.elapsed().as_millis() as u64,
    };
    let mut rendered = serde_json::to_string_pretty(&report)?;
    rendered.push('\n');
    print_stdout(&rendered)
}

fn execute(command: Command) -> Result<i32> {
    let started = Instant::now();
    match command {
        Command::Classify { graph } => {
            let input = load_graph(&graph)?;
            let (g, d) = (&input.graph, &input.dist);
            let reports = vec![
                classes::satisfies_tc(g, d),
                classes::satisfies_qc(g, d),
                classes::is_weakly_modular(g, d),
                classes::is_meshed(g, d),
                classes::is_pseudo_modular_metric(g, d),
                classes::is_pseudo_modular_3helly(g, d),
                classes::is_bridged(g, d),
                classes::is_weakly_bridged(g, d),
                classes::has_convex_balls(g, d),
                classes::satisfies_k_sd(g, d, 2)?,
                classes::satisfies_k_sd(g, d, 3)?,
                classes::satisfies_ic(g, d),
                classes::satisfies_pc(g, d),
                classes::is_matroid_basis_graph_candidate(g, d),
            ];
            let certs = certificates(g, d);
            emit("classify", input.digest, json!({ "reports": reports }), certs, started)?;
            Ok(0)
        }
        Command::Hull { graph, set } => {
            let input = load_graph(&graph)?;
            let s = vertex_set(input.graph.vertex_count(), &set)?;
            let h = hull(&input.dist, &s);
            let certs = certificates(&input.graph, &input.dist);
            emit("hull", input.digest, json!({ "set": s, "hull": h }), certs, started)?;
            Ok(0)
        }
        Command::ShadowClosure { graph, a, b } => {
            let input = load_graph(&graph)?;
            let n = input.graph.vertex_count();
            let a = vertex_set(n, &a)?;
            let b = vertex_set(n, &b)?;
            let out = shadow_closure(&input.dist, &a, &b)?;
            let trace: Vec<Value> = out
                .trace
                .iter()
                .map(|(x, y)| json!({ "a": x, "b": y }))
                .collect();
            let result = json!({
                "a": out.a,
                "b": out.b,
                "overlap": out.overlap,
                "rounds": out.trace.len() - 1,
                "trace": trace,
            });
            let certs = certificates(&input.graph, &input.dist);
            emit("shadow-closure", input.digest, result, certs, started)?;
            Ok(0)
        }
        Command::Separate { graph, a, b, require_class, dimacs_cnf } => {
            let input = load_graph(&graph)?;
            let n = input.graph.vertex_count();
            let a = vertex_set(n, &a)?;
            let b = vertex_set(n, &b)?;
            let certs = certificates(&input.graph, &input.dist);
            if require_class && !certs.iter().any(|c| c.holds) {
                let result = json!({
                    "refused": "no supported class certificate holds",
                    "a": a,
                    "b": b,
                });
                emit("separate", input.digest, result, certs, started)?;
                return Ok(2);
            }
            let out = halfspace_separation(&input.graph, &input.dist, &a, &b)?;
            let dimacs_branch = match (&dimacs_cnf, out.formulas.last()) {
                (Some(path), Some((branch, formula))) => {
                    fs::write(path, formula.to_dimacs())
                        .with_context(|| format!("writing {}", path.display()))?;
                    Some(*branch)
                }
                _ => None,
            };
            let result = json!({
                "a": a,
                "b": b,
                "answer": out.answer,
                "halfspace": out.halfspace,
                "branch": out.branch,
                "diagnostics": out.diagnostics,
                "dimacs_branch": dimacs_branch,
            });
            let code = match out.answer {
                Answer::Yes => 0,
                Answer::No | Answer::Unknown => 2,
            };
            emit("separate", input.digest, result, certs, started)?;
            Ok(code)
        }
        Command::Enumerate { graph, oracle } => {
            let input = load_graph(&graph)?;
            let run = enumerate_flashlight(&input.graph, &input.dist);
            let mut result = json!({
                "count": run.halfspaces.len(),
                "halfspaces": run.halfspaces,
                "extension_calls": run.extension_calls,
                "complete": run.complete,
            });
            let mut code = 0;
            if oracle {
                let brute = enumerate_bruteforce(&input.graph, &input.dist)?;
                let missing: Vec<&VertexSet> =
                    brute.iter().filter(|h| !run.halfspaces.contains(h)).collect();
                let extra: Vec<&VertexSet> =
                    run.halfspaces.iter().filter(|h| !brute.contains(h)).collect();
                let agreement = missing.is_empty() && extra.is_empty();
                if !agreement {
                    code = 2;
                }
                result["oracle"] = json!({
                    "count": brute.len(),
                    "missing": missing,
                    "extra": extra,
                    "agreement": agreement,
                });
            }
            let certs = certificates(&input.graph, &input.dist);
            emit("enumerate", input.digest, result, certs, started)?;
            Ok(code)
        }
        Command::BasisGraph { matroid } => {
            let text = read_input(&matroid)?;
            let m = formats::parse_matroid(&text)?;
            print_stdout(&formats::format_graph(&m.basis_graph()))?;
            Ok(0)
        }
        Command::Gen { family } => {
            let rendered = match family {
                Family::Cycle { n } => {
                    if n < 3 {
                        bail!("cycle needs at least 3 vertices");
                    }
                    formats::format_graph(&generate::cycle(n))
                }
                Family::Complete { n } => {
                    if n < 1 {
                        bail!("complete graph needs at least 1 vertex");
                    }
                    formats::format_graph(&generate::complete(n))
                }
                Family::Path { n } => {
                    if n < 1 {
                        bail!("path needs at least 1 vertex");
                    }
                    formats::format_graph(&generate::path(n))
                }
                Family::Hypercube { d } => {
                    if !(1..=10).contains(&d) {
                        bail!("hypercube dimension must be between 1 and 10");
                    }
                    formats::format_graph(&generate::hypercube(d))
                }
                Family::Octahedron => formats::format_graph(&generate::octahedron()),
                Family::Uniform { r, n } => formats::format_matroid(&uniform_matroid(r, n)?),
                Family::Graphic { graph } => {
                    let text = read_input(&graph)?;
                    let g = formats::parse_graph(&text)?;
                    formats::format_matroid(&graphic_matroid(&g)?)
                }
            };
            print_stdout(&rendered)?;
            Ok(0)
        }
        Command::OracleCheck { graph, max_ab } => {
            if max_ab < 1 {
                bail!("--max-ab must be at least 1");
            }
            let input = load_graph(&graph)?;
            let (g, d) = (&input.graph, &input.dist);
            let truth = enumerate_bruteforce(g, d)?;
            let n = g.vertex_count();
            let sides = small_subsets(n, max_ab);
            let mut pairs = 0usize;
            let mut agreements = 0usize;
            let mut unknowns = 0usize;
            let mut mismatches = Vec::new();
            for a in &sides {
                for b in &sides {
                    if a.intersects(b) {
                        continue;
                    }
                    pairs += 1;
                    let separable =
                        truth.iter().any(|h| a.is_subset(h) && b.is_disjoint(h));
                    let answer = halfspace_separation(g, d, a, b)?.answer;
                    match answer {
                        Answer::Unknown => unknowns += 1,
                        Answer::Yes if separable => agreements += 1,
                        Answer::No if !separable => agreements += 1,
                        _ => mismatches.push(json!({
                            "a": a,
                            "b": b,
                            "separable": separable,
                            "answer": answer,
                        })),
                    }
                }
            }
            let code = if mismatches.is_empty() { 0 } else { 2 };
            let result = json!({
                "max_ab": max_ab,
                "pairs": pairs,
                "agreements": agreements,
                "unknowns": unknowns,
                "mismatches": mismatches,
            });
            let certs = certificates(g, d);
            emit("oracle-check", input.digest, result, certs, started)?;
            Ok(code)
        }
    }
}

/// All nonempty vertex subsets of size at most `max`, in canonical order.
fn small_subsets(n: usize, max: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut scratch = Vec::new();
    fn extend(
        n: usize,
        max: usize,
        from: usize,
        scratch: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        for v in from..n {
            scratch.push(v);
            out.push(VertexSet::from_members(n, scratch.iter().copied()));
            if scratch.len() < max {
                extend(n, max, v + 1, scratch, out);
            }
            scratch.pop();
        }
    }
    extend(n, max, 0, &mut scratch, &mut out);
    out.sort();
    out
}
