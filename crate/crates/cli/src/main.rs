//! Command-line front end: exact invariants, bound checks, family
//! generators, config-driven sweeps, cubic enumeration, triangle–diamond
//! partitions, and equality search.
//!
//! Exit codes: 0 success (all checks hold), 1 usage or input error,
//! 2 violated check or unmet equality expectation, 3 hypothesis failure,
//! 4 size cap exceeded.

use std::fs;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use starfree::check::{self, CheckParams, TheoremId};
use starfree::codec::{self, TextFormat};
use starfree::enumerate;
use starfree::error::Error;
use starfree::families::{self, FamilySpec};
use starfree::graph::Graph;
use starfree::solve::{self, InvariantKind, Witness};
use starfree::sweep;
use starfree::tdp::{self, TdUnit};

#[derive(Parser)]
#[command(
    name = "starfree",
    version,
    about = "Exact invariants and inequality checks for graphs that \
             exclude a star K_{1,r}",
    max_term_width = 80
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant of a graph (with a verifying witness).
    Invariant(InvariantArgs),
    /// Evaluate one bound from the catalog on a graph.
    Check(CheckArgs),
    /// Generate a named family member.
    Family(FamilyArgs),
    /// Run a config-driven sweep of checks over graph collections.
    Sweep(SweepArgs),
    /// List all connected cubic graphs of one order, as graph6.
    EnumerateCubic(EnumerateArgs),
    /// Partition a connected claw-free cubic graph into triangles and
    /// diamonds.
    Partition(PartitionArgs),
    /// Search for graphs that meet a bound with equality.
    EqualitySearch(EqualitySearchArgs),
}

/// Shared positional graph input.
#[derive(Args)]
struct GraphInput {
    /// graph6 text, a path to a graph file, or "-" for stdin.
    graph: String,
    /// Input format; `auto` distinguishes graph6 from edge lists.
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    G6,
    Edges,
}

impl GraphInput {
    fn load(&self) -> anyhow::Result<Graph> {
        let text = if self.graph == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        } else if std::path::Path::new(&self.graph).is_file() {
            fs::read_to_string(&self.graph)?
        } else {
            self.graph.clone()
        };
        let fmt = match self.format {
            FormatArg::Auto => None,
            FormatArg::G6 => Some(TextFormat::Graph6),
            FormatArg::Edges => Some(TextFormat::EdgeList),
        };
        Ok(codec::parse_as(&text, fmt)?)
    }
}

#[derive(Args)]
struct InvariantArgs {
    /// Invariant name: alpha, gamma, chi, alphaF_trianglefree, bipartite,
    /// outerplanar, planar; parameterized as gamma_2 / alpha_1 /
    /// alphaF_chromatic_2 / alphaF_kqfree_3, or via --k / --q on the base
    /// name (gamma --k 2, alphaF_kqfree --q 3).
    kind: String,
    /// Parameter k (for gamma, alpha, alphaF_chromatic).
    #[arg(long)]
    k: Option<usize>,
    /// Parameter q (for alphaF_kqfree).
    #[arg(long)]
    q: Option<usize>,
    /// Require the graph to exclude the star K_{1,r} before computing.
    #[arg(long)]
    r: Option<usize>,
    /// Emit the result as one JSON object instead of text.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    input: GraphInput,
}

#[derive(Args)]
struct CheckArgs {
    /// Catalog identifier, e.g. O3_1, T4_2, T2_3_kq_reduction.
    theorem: String,
    /// Excluded star order r.
    #[arg(long)]
    r: Option<usize>,
    /// Parameter k.
    #[arg(long)]
    k: Option<usize>,
    /// Excluded clique order q.
    #[arg(long)]
    q: Option<usize>,
    /// Regularity degree d (derived from the graph when omitted).
    #[arg(long)]
    d: Option<usize>,
    /// Emit the result as one JSON object instead of text.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    input: GraphInput,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name; see --list.
    #[arg(required_unless_present = "list")]
    name: Option<String>,
    /// Positional integer parameters of the family.
    args: Vec<usize>,
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = EmitArg::G6)]
    emit: EmitArg,
    /// List the available families and their parameters.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    G6,
    Edges,
}

#[derive(Args)]
struct SweepArgs {
    /// TOML sweep config file.
    #[arg(long)]
    config: String,
    /// Write one JSON object per check to this path ("-" for stdout).
    #[arg(long)]
    jsonl: Option<String>,
    /// Write a CSV table of all checks to this path ("-" for stdout).
    #[arg(long)]
    csv: Option<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Order: even, between 4 and 14.
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct PartitionArgs {
    #[command(flatten)]
    input: GraphInput,
}

#[derive(Args)]
struct EqualitySearchArgs {
    /// Excluded star order r (>= 3).
    #[arg(long)]
    r: usize,
    /// Catalog identifier to search.
    #[arg(long)]
    theorem: String,
    /// Total candidate graphs to examine.
    #[arg(long, default_value_t = 200)]
    budget: usize,
}

fn main() -> ExitCode {
    // Die quietly when a downstream consumer closes the pipe, e.g.
    // `starfree enumerate-cubic --n 14 | head -1`.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Keep usage errors on exit code 1; --help and --version are
            // delivered as clap "errors" but still succeed.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = e
                .downcast_ref::<Error>()
                .map(exit_code_for)
                .unwrap_or(1);
            ExitCode::from(code)
        }
    }
}

/// Map library errors to the documented process exit codes.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::HypothesisFailed { .. }
        | Error::TdpNotCubic
        | Error::TdpNotClawFree
        | Error::TdpNotConnected
        | Error::TdpIsK4 => 3,
        Error::SizeLimit { .. } => 4,
        Error::EnumerateRange { n, max } if n > max => 4,
        _ => 1,
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Invariant(a) => cmd_invariant(a),
        Command::Check(a) => cmd_check(a),
        Command::Family(a) => cmd_family(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::EnumerateCubic(a) => cmd_enumerate(a),
        Command::Partition(a) => cmd_partition(a),
        Command::EqualitySearch(a) => cmd_equality_search(a),
    }
}

/// Resolve an invariant name plus optional --k/--q flags to a kind.
fn resolve_kind(
    name: &str,
    k: Option<usize>,
    q: Option<usize>,
) -> Result<InvariantKind, Error> {
    match (name, k, q) {
        ("gamma", Some(k), _) => Ok(InvariantKind::GammaK(k)),
        ("alpha", Some(k), _) => Ok(InvariantKind::AlphaK(k)),
        ("alphaF_chromatic", Some(k), _) => {
            Ok(InvariantKind::AlphaFChromatic(k))
        }
        ("alphaF_kqfree", _, Some(q)) => Ok(InvariantKind::AlphaFKqFree(q)),
        _ => name.parse(),
    }
}

fn cmd_invariant(a: InvariantArgs) -> anyhow::Result<ExitCode> {
    let kind = resolve_kind(&a.kind, a.k, a.q)?;
    let g = a.input.load()?;
    if let Some(r) = a.r {
        if !g.is_k1r_free(r) {
            return Err(Error::HypothesisFailed {
                theorem: "invariant",
                predicate: format!("is_k1r_free({r})"),
            }
            .into());
        }
    }
    let value = solve::compute(&g, kind)?;
    if a.json {
        println!("{}", serde_json::to_string(&value)?);
    } else {
        println!("{} = {}", value.kind, value.value);
        match &value.witness {
            Witness::Set(set) => println!("witness: {}", join(&set.to_vec())),
            Witness::Coloring(colors) => {
                println!("coloring: {}", join(colors))
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(a: CheckArgs) -> anyhow::Result<ExitCode> {
    let id: TheoremId = a.theorem.parse()?;
    let g = a.input.load()?;
    let params = CheckParams {
        r: a.r,
        k: a.k,
        q: a.q,
        d: a.d,
    };
    let c = check::check(&g, id, params)?;
    if a.json {
        println!("{}", serde_json::to_string(&c)?);
    } else {
        println!("{c}");
        for note in &c.notes {
            println!("note: {note}");
        }
    }
    if c.holds {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("violated on {}", codec::emit_graph6(&g));
        Ok(ExitCode::from(2))
    }
}

fn cmd_family(a: FamilyArgs) -> anyhow::Result<ExitCode> {
    if a.list {
        for (name, params) in families::CATALOG {
            if params.is_empty() {
                println!("{name}");
            } else {
                println!("{name} <{params}>");
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let name = a.name.expect("clap enforces name unless --list");
    let spec = FamilySpec::from_name_args(&name, &a.args)?;
    let g = spec.build()?;
    match a.emit {
        EmitArg::G6 => println!("{}", codec::emit_graph6(&g)),
        EmitArg::Edges => print!("{}", codec::emit_edge_list(&g)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(a: SweepArgs) -> anyhow::Result<ExitCode> {
    let cfg = sweep::load_config(&a.config)?;
    let report = sweep::run_sweep(&cfg)?;
    if let Some(path) = &a.jsonl {
        write_out(path, &report.to_jsonl())?;
    }
    if let Some(path) = &a.csv {
        write_out(path, &report.to_csv())?;
    }
    print!("{}", report.human_summary());
    if report.ok() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn write_out(path: &str, body: &str) -> std::io::Result<()> {
    if path == "-" {
        print!("{body}");
        Ok(())
    } else {
        fs::write(path, body)
    }
}

fn cmd_enumerate(a: EnumerateArgs) -> anyhow::Result<ExitCode> {
    for g in enumerate::enumerate_cubic(a.n)? {
        println!("{}", codec::emit_graph6(&g));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_partition(a: PartitionArgs) -> anyhow::Result<ExitCode> {
    let g = a.input.load()?;
    for unit in tdp::td_partition(&g)? {
        let label = match unit {
            TdUnit::Triangle(_) => "triangle",
            TdUnit::Diamond(_) => "diamond",
        };
        println!("{label}: {}", join(&unit.vertices().to_vec()));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_equality_search(a: EqualitySearchArgs) -> anyhow::Result<ExitCode> {
    let id: TheoremId = a.theorem.parse()?;
    for g in sweep::equality_search(a.r, id, a.budget)? {
        println!("{}", codec::emit_graph6(&g));
    }
    Ok(ExitCode::SUCCESS)
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
