//! Command-line surface: gp computation, set verification, the tree-product
//! construction, product materialization, and the verification sweeps.
//!
//! Reports go to stdout (human text or JSON via `--format json`), all
//! diagnostics to stderr. Exit codes are the machine-readable failure
//! channel:
//!
//! - 2  input parse error
//! - 3  disconnected input where connectivity is required
//! - 4  solver budget exhausted (the best-so-far result is still printed)
//! - 5  set or forced vertex out of range
//! - 6  construct factor is not a tree or has order < 3
//! - 7  construct anchor override is not a usable non-leaf
//! - 8  sweep or membership mismatch

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use genpos::enumerate::{
    sweep_verify_membership, sweep_verify_theorem, MembershipReport, SweepReport,
};
use genpos::io::{parse_edge_list, parse_product_spec};
use genpos::solver::{
    first_violating_triple, gp_number_exact, is_maximal_gp, verify_general_position, GpInstance,
};
use genpos::tree::TreeProfile;
use genpos::{Error, Graph, ProductGraph};

const EXIT_PARSE: u8 = 2;
const EXIT_DISCONNECTED: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_SET_RANGE: u8 = 5;
const EXIT_BAD_FACTOR: u8 = 6;
const EXIT_BAD_ANCHOR: u8 = 7;
const EXIT_MISMATCH: u8 = 8;

const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Parser)]
#[command(name = "genpos", version, about = "General position numbers of connected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for reports on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    json: bool,
    /// Omit timing fields so identical inputs produce byte-identical reports.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Worker threads for sweeps; defaults to the available parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized workloads; the exact subcommands are
    /// deterministic and do not consume it.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the general position number of a graph (edge-list file).
    Gp(GpArgs),
    /// Classify a vertex set: not-gp, gp-but-not-maximal, maximal-gp, or
    /// maximum-gp.
    Verify(VerifyArgs),
    /// Build the maximal general position set of a product of two trees.
    Construct(ConstructArgs),
    /// Materialize the Cartesian product of a two-section spec file as an
    /// edge list.
    Product(ProductArgs),
    /// Check gp(T [] T*) = l(T) + l(T*) over all free-tree pairs in an
    /// order range.
    Sweep(SweepArgs),
    /// Check the non-leaf membership characterization against the
    /// forced-inclusion solver over all free trees up to an order.
    Membership(MembershipArgs),
}

#[derive(Args)]
struct GpArgs {
    /// Graph in edge-list format.
    input: String,
    /// Comma-separated vertices required in the solution.
    #[arg(long, value_delimiter = ',')]
    forced: Vec<usize>,
    /// Node-expansion budget for the solver.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph in edge-list format.
    input: String,
    /// Comma-separated vertex set to classify.
    #[arg(long, value_delimiter = ',', required = true)]
    set: Vec<usize>,
    /// Node-expansion budget for the maximum-gp confirmation.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct ConstructArgs {
    /// Product spec: two tree edge-list sections separated by a "%" line.
    input: String,
    /// Non-leaf anchor in the first factor (default: its smallest-index
    /// non-leaf).
    #[arg(long)]
    vi: Option<usize>,
    /// Non-leaf anchor in the second factor.
    #[arg(long)]
    vj: Option<usize>,
}

#[derive(Args)]
struct ProductArgs {
    /// Product spec: two edge-list sections separated by a "%" line.
    input: String,
}

#[derive(Args)]
struct SweepArgs {
    /// Smallest tree order in the range.
    #[arg(long, default_value_t = 3)]
    min: usize,
    /// Largest tree order in the range (at most 6, or 7 with
    /// --allow-order-7).
    #[arg(long, default_value_t = 6)]
    max: usize,
    /// Acknowledge the cost of order-7 factors (hundreds of solves).
    #[arg(long)]
    allow_order_7: bool,
}

#[derive(Args)]
struct MembershipArgs {
    /// Largest tree order to check (3..=8).
    #[arg(long, default_value_t = 8)]
    max: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("warning: could not configure {jobs} workers: {e}");
        }
    }
    let format = if cli.json { Format::Json } else { cli.format };
    let ctx = Output { format, timing: !cli.no_timing };
    match &cli.command {
        Command::Gp(args) => cmd_gp(args, &ctx),
        Command::Verify(args) => cmd_verify(args, &ctx),
        Command::Construct(args) => cmd_construct(args, &ctx),
        Command::Product(args) => cmd_product(args, &ctx),
        Command::Sweep(args) => cmd_sweep(args, &ctx),
        Command::Membership(args) => cmd_membership(args, &ctx),
    }
}

struct Output {
    format: Format,
    timing: bool,
}

impl Output {
    fn elapsed(&self, start: Instant) -> Option<u64> {
        self.timing.then(|| start.elapsed().as_millis() as u64)
    }

    fn emit<T: Serialize>(&self, report: &T, human: &str) {
        match self.format {
            Format::Json => {
                println!("{}", serde_json::to_string(report).expect("reports serialize"))
            }
            Format::Human => print!("{human}"),
        }
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn load_graph(path: &str) -> Result<Graph, ExitCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot read {path}: {e}")))?;
    parse_edge_list(&text).map_err(|e| fail(EXIT_PARSE, format!("{path}: {e}")))
}

fn load_product_spec(path: &str) -> Result<(Graph, Graph), ExitCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("cannot read {path}: {e}")))?;
    parse_product_spec(&text).map_err(|e| fail(EXIT_PARSE, format!("{path}: {e}")))
}

fn timing_line(out: &mut String, elapsed_ms: Option<u64>) {
    if let Some(ms) = elapsed_ms {
        writeln!(out, "elapsed_ms: {ms}").unwrap();
    }
}

fn join(values: &[usize]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct GpReport<'a> {
    command: &'static str,
    input: &'a str,
    gp_number: usize,
    witness: &'a [usize],
    proven_optimal: bool,
    nodes_expanded: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

fn cmd_gp(args: &GpArgs, ctx: &Output) -> ExitCode {
    let start = Instant::now();
    let graph = match load_graph(&args.input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if !graph.is_connected() {
        return fail(EXIT_DISCONNECTED, format!("{}: graph is disconnected", args.input));
    }
    if let Some(&v) = args.forced.iter().find(|&&v| v >= graph.order()) {
        return fail(
            EXIT_SET_RANGE,
            format!("forced vertex {v} out of range for order {}", graph.order()),
        );
    }
    let dm = graph.distances().expect("connected graph has distances");
    let inst = GpInstance::new(&graph, &dm)
        .with_forced(args.forced.clone())
        .with_budget(args.budget);
    let result = match gp_number_exact(&inst) {
        Ok(r) => r,
        Err(Error::InfeasibleForcedSet) => {
            return fail(EXIT_SET_RANGE, "forced set is not in general position")
        }
        Err(e) => return fail(1, e),
    };
    let report = GpReport {
        command: "gp",
        input: &args.input,
        gp_number: result.gp_number,
        witness: result.witness.vertices(),
        proven_optimal: result.proven_optimal,
        nodes_expanded: result.nodes_expanded,
        elapsed_ms: ctx.elapsed(start),
    };
    let mut human = String::new();
    writeln!(human, "gp_number: {}", report.gp_number).unwrap();
    writeln!(human, "witness: {}", join(report.witness)).unwrap();
    writeln!(human, "proven_optimal: {}", report.proven_optimal).unwrap();
    writeln!(human, "nodes_expanded: {}", report.nodes_expanded).unwrap();
    timing_line(&mut human, report.elapsed_ms);
    ctx.emit(&report, &human);
    if !result.proven_optimal {
        eprintln!("warning: budget of {} node expansions exhausted", args.budget);
        return ExitCode::from(EXIT_BUDGET);
    }
    ExitCode::SUCCESS
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    command: &'static str,
    input: &'a str,
    set: &'a [usize],
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    violating_triple: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

fn cmd_verify(args: &VerifyArgs, ctx: &Output) -> ExitCode {
    let start = Instant::now();
    let graph = match load_graph(&args.input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if !graph.is_connected() {
        return fail(EXIT_DISCONNECTED, format!("{}: graph is disconnected", args.input));
    }
    if let Some(&v) = args.set.iter().find(|&&v| v >= graph.order()) {
        return fail(
            EXIT_SET_RANGE,
            format!("set vertex {v} out of range for order {}", graph.order()),
        );
    }
    let dm = graph.distances().expect("connected graph has distances");
    let mut set = args.set.clone();
    set.sort_unstable();
    set.dedup();

    let mut violating_triple = None;
    let verdict = if !verify_general_position(&dm, &set).expect("set is in range") {
        violating_triple = first_violating_triple(&dm, &set).expect("set is in range");
        "not-gp"
    } else if !is_maximal_gp(&dm, &set).expect("set was just verified") {
        "gp-but-not-maximal"
    } else {
        // Maximal; ask the solver whether it is also maximum.
        let inst = GpInstance::new(&graph, &dm).with_budget(args.budget);
        let optimum = gp_number_exact(&inst).expect("connected instance solves");
        if optimum.proven_optimal && optimum.gp_number == set.len() {
            "maximum-gp"
        } else {
            if !optimum.proven_optimal {
                eprintln!("note: budget exhausted before the maximum could be confirmed");
            }
            "maximal-gp"
        }
    };
    let report = VerifyReport {
        command: "verify",
        input: &args.input,
        set: &set,
        verdict,
        violating_triple,
        elapsed_ms: ctx.elapsed(start),
    };
    let mut human = String::new();
    writeln!(human, "set: {}", join(&set)).unwrap();
    writeln!(human, "verdict: {verdict}").unwrap();
    if let Some([x, y, z]) = violating_triple {
        writeln!(human, "violating_triple: {x},{y},{z}").unwrap();
    }
    timing_line(&mut human, report.elapsed_ms);
    ctx.emit(&report, &human);
    ExitCode::SUCCESS
}

#[derive(Serialize)]
struct ConstructReport<'a> {
    command: &'static str,
    input: &'a str,
    vi: usize,
    vj: usize,
    size: usize,
    coordinates: &'a [(usize, usize)],
    flattened: &'a [usize],
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

fn cmd_construct(args: &ConstructArgs, ctx: &Output) -> ExitCode {
    let start = Instant::now();
    let (g, h) = match load_product_spec(&args.input) {
        Ok(pair) => pair,
        Err(code) => return code,
    };
    let profiles: Vec<TreeProfile> = match [g, h]
        .into_iter()
        .map(TreeProfile::new)
        .collect::<Result<_, _>>()
    {
        Ok(p) => p,
        Err(_) => return fail(EXIT_BAD_FACTOR, "both factors must be trees"),
    };
    let (t_g, t_h) = (&profiles[0], &profiles[1]);
    for t in [t_g, t_h] {
        if t.order() < 3 {
            return fail(
                EXIT_BAD_FACTOR,
                format!("factor of order {} is too small, order >= 3 required", t.order()),
            );
        }
    }
    let anchor = |t: &TreeProfile, over: Option<usize>, name: &str| -> Result<usize, ExitCode> {
        match over {
            None => Ok(t.first_non_leaf().expect("order >= 3 has a non-leaf")),
            Some(v) if v >= t.order() => Err(fail(
                EXIT_BAD_ANCHOR,
                format!("{name}={v} out of range for factor of order {}", t.order()),
            )),
            Some(v) if t.is_leaf(v) => {
                Err(fail(EXIT_BAD_ANCHOR, format!("{name}={v} is a leaf of its factor")))
            }
            Some(v) => Ok(v),
        }
    };
    let vi = match anchor(t_g, args.vi, "vi") {
        Ok(v) => v,
        Err(code) => return code,
    };
    let vj = match anchor(t_h, args.vj, "vj") {
        Ok(v) => v,
        Err(code) => return code,
    };

    let coordinates = genpos::construct_maximal_gp(t_g, t_h, vi, vj)
        .expect("anchors were validated as non-leaves");
    let product = ProductGraph::new(t_g.graph().clone(), t_h.graph().clone());
    let flattened: Vec<usize> = coordinates.iter().map(|&(a, b)| product.flatten(a, b)).collect();
    let dm = product.materialized().distances().expect("tree products are connected");
    let verdict = if !verify_general_position(&dm, &flattened).expect("set is in range") {
        "not-gp"
    } else if is_maximal_gp(&dm, &flattened).expect("set was just verified") {
        "maximal-gp"
    } else {
        "gp-but-not-maximal"
    };

    let report = ConstructReport {
        command: "construct",
        input: &args.input,
        vi,
        vj,
        size: coordinates.len(),
        coordinates: &coordinates,
        flattened: &flattened,
        verdict,
        elapsed_ms: ctx.elapsed(start),
    };
    let mut human = String::new();
    writeln!(human, "vi: {vi}").unwrap();
    writeln!(human, "vj: {vj}").unwrap();
    writeln!(human, "size: {}", report.size).unwrap();
    let coords = coordinates
        .iter()
        .zip(&flattened)
        .map(|(&(a, b), &idx)| format!("{a},{b} [{idx}]"))
        .collect::<Vec<_>>()
        .join("  ");
    writeln!(human, "set: {coords}").unwrap();
    writeln!(human, "verdict: {verdict}").unwrap();
    timing_line(&mut human, report.elapsed_ms);
    ctx.emit(&report, &human);
    ExitCode::SUCCESS
}

#[derive(Serialize)]
struct ProductReport<'a> {
    command: &'static str,
    input: &'a str,
    order: usize,
    size: usize,
    edges: &'a [(usize, usize)],
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

fn cmd_product(args: &ProductArgs, ctx: &Output) -> ExitCode {
    let start = Instant::now();
    let (g, h) = match load_product_spec(&args.input) {
        Ok(pair) => pair,
        Err(code) => return code,
    };
    let product = ProductGraph::new(g, h);
    let m = product.materialized();
    let report = ProductReport {
        command: "product",
        input: &args.input,
        order: m.order(),
        size: m.size(),
        edges: m.edges(),
        elapsed_ms: ctx.elapsed(start),
    };
    // Human output is the canonical edge-list format, ready to feed back in.
    let human = genpos::io::format_edge_list(m);
    ctx.emit(&report, &human);
    ExitCode::SUCCESS
}

#[derive(Serialize)]
struct SweepCliReport<'a> {
    command: &'static str,
    #[serde(flatten)]
    report: &'a SweepReport,
}

fn cmd_sweep(args: &SweepArgs, ctx: &Output) -> ExitCode {
    let cap = if args.allow_order_7 { 7 } else { 6 };
    if args.min < 3 || args.min > args.max || args.max > cap {
        let hint = if args.max == 7 { " (pass --allow-order-7 to go up to 7)" } else { "" };
        return fail(
            EXIT_PARSE,
            format!("sweep range must satisfy 3 <= min <= max <= {cap}{hint}"),
        );
    }
    let mut report = match sweep_verify_theorem(args.min, args.max) {
        Ok(r) => r,
        Err(e) => return fail(1, e),
    };
    if !ctx.timing {
        report.elapsed_ms = None;
        for r in &mut report.records {
            r.elapsed_ms = None;
        }
    }
    let mut human = String::new();
    writeln!(
        human,
        "pairs_checked: {} (orders {}..={})",
        report.pairs_checked, report.min_order, report.max_order
    )
    .unwrap();
    writeln!(human, "mismatches: {}", report.mismatches.len()).unwrap();
    for r in &report.records {
        let status = if r.computed == r.predicted && r.proven_optimal { "ok" } else { "MISMATCH" };
        write!(
            human,
            "{status}  {} x {}  orders=({},{}) leaves=({},{}) predicted={} computed={} nodes={}",
            r.key_left,
            r.key_right,
            r.order_left,
            r.order_right,
            r.leaves_left,
            r.leaves_right,
            r.predicted,
            r.computed,
            r.nodes_expanded
        )
        .unwrap();
        match r.elapsed_ms {
            Some(ms) => writeln!(human, " ms={ms}").unwrap(),
            None => writeln!(human).unwrap(),
        }
    }
    timing_line(&mut human, report.elapsed_ms);
    ctx.emit(&SweepCliReport { command: "sweep", report: &report }, &human);
    if report.mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: {} mismatching pair(s)", report.mismatches.len());
        ExitCode::from(EXIT_MISMATCH)
    }
}

#[derive(Serialize)]
struct MembershipCliReport<'a> {
    command: &'static str,
    #[serde(flatten)]
    report: &'a MembershipReport,
}

fn cmd_membership(args: &MembershipArgs, ctx: &Output) -> ExitCode {
    if !(3..=8).contains(&args.max) {
        return fail(EXIT_PARSE, "membership range must satisfy 3 <= max <= 8");
    }
    let mut report = match sweep_verify_membership(args.max) {
        Ok(r) => r,
        Err(e) => return fail(1, e),
    };
    if !ctx.timing {
        report.elapsed_ms = None;
    }
    let mut human = String::new();
    writeln!(human, "trees_checked: {} (orders 3..={})", report.trees_checked, report.max_order)
        .unwrap();
    writeln!(human, "vertices_checked: {}", report.vertices_checked).unwrap();
    writeln!(human, "mismatches: {}", report.mismatches.len()).unwrap();
    for m in &report.mismatches {
        writeln!(
            human,
            "MISMATCH  {} order={} vertex={} characterization={} solver_attains={}",
            m.key, m.order, m.vertex, m.characterization, m.solver_attains
        )
        .unwrap();
    }
    timing_line(&mut human, report.elapsed_ms);
    ctx.emit(&MembershipCliReport { command: "membership", report: &report }, &human);
    if report.mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: {} mismatching vertex(es)", report.mismatches.len());
        ExitCode::from(EXIT_MISMATCH)
    }
}
