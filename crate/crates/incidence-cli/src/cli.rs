//! Command-line front door. Exit codes: 0 success/valid, 1 invalid coloring
//! (or nonempty inspection residual), 2 unsupported class, 3 bad input,
//! 4 search budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use incidence::colorers::{color, ColorerError};
use incidence::coloring::{ColoringDoc, IncidenceColoring};
use incidence::generate::{generate, Kind};
use incidence::graph::Graph;
use incidence::latin;
use incidence::oracle;
use incidence::outerplanar;
use incidence::par::{set_worker_count, ExecMode};
use incidence::verify::{check_conditional, check_defective};

const EXIT_OK: u8 = 0;
const EXIT_INVALID: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 2;
const EXIT_BAD_INPUT: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(
    name = "incidence",
    about = "Defective incidence colorings: construct, verify, search",
    version
)]
struct CliArgs {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph with the optimal construction for its class.
    Color(ColorArgs),
    /// Verify a coloring document against the defect conditions.
    Verify(VerifyArgs),
    /// Exact defective chromatic number by exhaustive search.
    Chromatic(ChromaticArgs),
    /// Print (or check) a Latin square without principal intercalates.
    Latin(LatinArgs),
    /// Reproduce gadget reducibility inspections.
    Inspect(InspectArgs),
    /// Generate a graph in edge-list format.
    Gen(GenArgs),
}

#[derive(Args)]
struct ColorArgs {
    /// Defect bound d >= 1.
    #[arg(long, default_value_t = 1)]
    d: u32,
    /// Input edge list (defaults to stdin).
    #[arg(long = "in")]
    input: Option<String>,
    /// Output path (defaults to stdout).
    #[arg(long)]
    out: Option<String>,
    /// Display colors as 1..=k instead of 0..k.
    #[arg(long)]
    one_based: bool,
    /// Also write a DOT rendering with incidence color labels.
    #[arg(long)]
    dot: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Defect bound to verify against.
    #[arg(long, default_value_t = 1)]
    d: u32,
    /// Coloring document (defaults to stdin).
    #[arg(long = "in")]
    input: Option<String>,
    /// Optional edge list; when omitted the graph is reconstructed from the
    /// coloring's incidence records.
    #[arg(long)]
    graph: Option<String>,
    /// Check the conditional conditions (palette = declared k) instead.
    #[arg(long)]
    conditional: bool,
}

#[derive(Args)]
struct ChromaticArgs {
    #[arg(long, default_value_t = 1)]
    d: u32,
    /// Largest palette size to try.
    #[arg(long, default_value_t = 16)]
    kmax: u32,
    #[arg(long = "in")]
    input: Option<String>,
    /// Node budget per palette size.
    #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct LatinArgs {
    /// Order of the square to construct.
    n: Option<usize>,
    /// Read a square from a file and report its status instead.
    #[arg(long)]
    check: Option<String>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct InspectArgs {
    /// Inspection target (only `t1` exists).
    target: String,
    /// Worker count for the enumeration (1 forces the sequential path).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    /// One of: path, cycle, star, complete, complete-bipartite, random-tree,
    /// fan, random-maximal-outerplanar, random-outerplanar.
    kind: String,
    /// Numeric parameters of the kind (sizes, probability).
    params: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<String>,
}

pub fn run<I>(args: I) -> ExitCode
where
    I: IntoIterator<Item = OsString>,
{
    let parsed = match CliArgs::try_parse_from(args) {
        Ok(p) => p,
        Err(e) => {
            // clap prints help/version through the error path with status 0.
            let code = if e.use_stderr() {
                EXIT_BAD_INPUT
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match parsed.command {
        Command::Color(a) => cmd_color(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Chromatic(a) => cmd_chromatic(a),
        Command::Latin(a) => cmd_latin(a),
        Command::Inspect(a) => cmd_inspect(a),
        Command::Gen(a) => cmd_gen(a),
    };
    ExitCode::from(code.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.code
    }))
}

struct CliError {
    code: u8,
    message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn bad_input(msg: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_BAD_INPUT,
        message: msg.into(),
    }
}

fn read_input(path: &Option<String>) -> Result<String, CliError> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| bad_input(format!("cannot read {p}: {e}"))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| bad_input(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn write_output(path: &Option<String>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| bad_input(format!("cannot write {p}: {e}"))),
        None => {
            let mut out = std::io::stdout();
            out.write_all(content.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| bad_input(format!("cannot write stdout: {e}")))
        }
    }
}

fn parse_graph(text: &str) -> Result<Graph, CliError> {
    Graph::parse(text).map_err(|e| bad_input(e.to_string()))
}

/// The coloring document decorated with the construction metadata.
#[derive(Serialize)]
struct ColorOutput {
    d: u32,
    method: &'static str,
    #[serde(flatten)]
    doc: ColoringDoc,
}

fn cmd_color(a: ColorArgs) -> Result<u8, CliError> {
    if a.d == 0 {
        return Err(bad_input("--d must be at least 1"));
    }
    let g = parse_graph(&read_input(&a.input)?)?;
    let result = color(&g, a.d).map_err(|e| match e {
        ColorerError::UnsupportedClass(msg) => CliError {
            code: EXIT_UNSUPPORTED,
            message: msg,
        },
        other => CliError {
            code: EXIT_INVALID,
            message: other.to_string(),
        },
    })?;
    if let Some(dot_path) = &a.dot {
        fs::write(dot_path, g.to_dot(Some(&result.coloring)))
            .map_err(|e| bad_input(format!("cannot write {dot_path}: {e}")))?;
    }
    let mut doc = result.coloring.to_records();
    if a.one_based {
        doc = doc.into_one_based();
    }
    let out = ColorOutput {
        d: result.d_claimed,
        method: result.method,
        doc,
    };
    let mut text = serde_json::to_string_pretty(&out).expect("serializable");
    text.push('\n');
    write_output(&a.out, &text)?;
    Ok(EXIT_OK)
}

/// Rebuilds a graph from the edges mentioned in a coloring document.
fn graph_from_doc(doc: &ColoringDoc) -> Result<Graph, CliError> {
    let mut edges: Vec<(u32, u32)> = doc
        .incidences
        .iter()
        .map(|r| (r.e[0].min(r.e[1]), r.e[0].max(r.e[1])))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let n = edges.iter().map(|&(_, b)| b).max().unwrap_or(0) as usize;
    Graph::new(n, &edges).map_err(|e| bad_input(e.to_string()))
}

fn cmd_verify(a: VerifyArgs) -> Result<u8, CliError> {
    let doc: ColoringDoc = serde_json::from_str(&read_input(&a.input)?)
        .map_err(|e| bad_input(format!("invalid coloring document: {e}")))?;
    let coloring = IncidenceColoring::from_records(&doc).map_err(|e| bad_input(e.to_string()))?;
    let g = match &a.graph {
        Some(path) => parse_graph(
            &fs::read_to_string(path).map_err(|e| bad_input(format!("cannot read {path}: {e}")))?,
        )?,
        None => graph_from_doc(&doc)?,
    };
    let report = if a.conditional {
        check_conditional(&g, &coloring, coloring.palette_size())
    } else {
        check_defective(&g, &coloring, a.d)
    }
    .map_err(|e| bad_input(e.to_string()))?;
    let mut text = serde_json::to_string_pretty(&report).expect("serializable");
    text.push('\n');
    write_output(&None, &text)?;
    Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
}

#[derive(Serialize)]
struct ChromaticOutput {
    chi: Option<u32>,
    d: u32,
    k_max: u32,
    nodes: u64,
    max_depth: usize,
    elapsed_ms: u128,
    outcome: &'static str,
}

fn cmd_chromatic(a: ChromaticArgs) -> Result<u8, CliError> {
    let g = parse_graph(&read_input(&a.input)?)?;
    let start = std::time::Instant::now();
    // Track aggregate stats over the ascending palette scan.
    let mut nodes = 0u64;
    let mut max_depth = 0usize;
    let lb = if g.edge_count() == 0 {
        0
    } else {
        (g.max_degree() as u32).max(2) + u32::from(a.d == 0)
    };
    let mut chi = None;
    let mut outcome = "exhausted";
    for k in lb..=a.kmax.min(oracle::MAX_ORACLE_COLORS) {
        let (witness, stats) = oracle::find_coloring_exhaustive(&g, a.d, k, a.budget)
            .map_err(|e| bad_input(e.to_string()))?;
        nodes += stats.nodes;
        max_depth = max_depth.max(stats.max_depth);
        match stats.outcome {
            oracle::Outcome::Found => {
                debug_assert!(witness.is_some());
                chi = Some(k);
                outcome = "exact";
                break;
            }
            oracle::Outcome::Exhausted => {}
            oracle::Outcome::BudgetExceeded => {
                outcome = "budget-exceeded";
                break;
            }
        }
    }
    let out = ChromaticOutput {
        chi,
        d: a.d,
        k_max: a.kmax,
        nodes,
        max_depth,
        elapsed_ms: start.elapsed().as_millis(),
        outcome,
    };
    let mut text = serde_json::to_string_pretty(&out).expect("serializable");
    text.push('\n');
    write_output(&None, &text)?;
    Ok(if outcome == "budget-exceeded" {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}

fn cmd_latin(a: LatinArgs) -> Result<u8, CliError> {
    if let Some(path) = &a.check {
        let text =
            fs::read_to_string(path).map_err(|e| bad_input(format!("cannot read {path}: {e}")))?;
        let sq = latin::parse_square(&text).map_err(|e| bad_input(e.to_string()))?;
        let is_latin = sq.is_latin();
        let (total, principal) = if is_latin {
            let l = latin::LatinSquare::new(sq).expect("checked");
            (
                latin::find_intercalates(&l, false).len(),
                latin::find_intercalates(&l, true).len(),
            )
        } else {
            (0, 0)
        };
        #[derive(Serialize)]
        struct LatinReport {
            latin: bool,
            intercalates: usize,
            principal_intercalates: usize,
        }
        let report = LatinReport {
            latin: is_latin,
            intercalates: total,
            principal_intercalates: principal,
        };
        let mut text = serde_json::to_string_pretty(&report).expect("serializable");
        text.push('\n');
        write_output(&None, &text)?;
        return Ok(EXIT_OK);
    }
    let n =
        a.n.ok_or_else(|| bad_input("usage: latin <n> or latin --check FILE"))?;
    let square = latin::latin_square_no_principal(n).map_err(|e| bad_input(e.to_string()))?;
    write_output(&a.out, &latin::format_square(square.as_square()))?;
    Ok(EXIT_OK)
}

fn cmd_inspect(a: InspectArgs) -> Result<u8, CliError> {
    if a.target != "t1" {
        return Err(bad_input(format!(
            "unknown inspection target {:?}",
            a.target
        )));
    }
    let mode = match a.jobs {
        Some(0) => return Err(bad_input("--jobs must be at least 1")),
        Some(1) => ExecMode::Sequential,
        Some(n) => {
            set_worker_count(n);
            ExecMode::Parallel
        }
        None => ExecMode::default(),
    };
    let report = outerplanar::reducibility_inspection_with(mode);
    let mut text = serde_json::to_string_pretty(&report).expect("serializable");
    text.push('\n');
    write_output(&None, &text)?;
    Ok(if report.residual.is_empty() {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}

fn cmd_gen(a: GenArgs) -> Result<u8, CliError> {
    let usize_param = |idx: usize| -> Result<usize, CliError> {
        a.params
            .get(idx)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad_input(format!("{} needs a size parameter", a.kind)))
    };
    let kind = match a.kind.as_str() {
        "path" => Kind::Path(usize_param(0)?),
        "cycle" => Kind::Cycle(usize_param(0)?),
        "star" => Kind::Star(usize_param(0)?),
        "complete" => Kind::Complete(usize_param(0)?),
        "complete-bipartite" => Kind::CompleteBipartite(usize_param(0)?, usize_param(1)?),
        "random-tree" => Kind::RandomTree(usize_param(0)?, a.seed),
        "fan" => Kind::Fan(usize_param(0)?),
        "random-maximal-outerplanar" => Kind::RandomMaximalOuterplanar(usize_param(0)?, a.seed),
        "random-outerplanar" => {
            let p: f64 = a
                .params
                .get(1)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad_input("random-outerplanar needs n and p"))?;
            Kind::RandomOuterplanar(usize_param(0)?, p, a.seed)
        }
        other => return Err(bad_input(format!("unknown generator kind {other:?}"))),
    };
    let g = generate(kind).map_err(|e| bad_input(e.to_string()))?;
    write_output(&a.out, &g.to_edge_list())?;
    Ok(EXIT_OK)
}
