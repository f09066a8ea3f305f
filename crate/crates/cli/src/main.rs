//! `nutkit`: analyse, generate, construct and enumerate nut graphs from the
//! command line. Graphs travel as graph6 lines; records as JSON lines.

mod construct;
mod record;
mod stats;
mod stream;
mod verify;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use nutkit::enumerate::{enumerate_connected, enumerate_nut};
use nutkit::families::FamilySpec;
use nutkit::graph::write_graph6;
use nutkit::nut::{is_core, is_nut};
use nutkit::symmetry::automorphism_group;

use stream::{for_each, json_line, CliError, StreamArgs};

#[derive(Parser)]
#[command(name = "nutkit", version, about = "Nut graphs: kernels, symmetry and constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One JSON record per input graph
    Analyze(AnalyzeArgs),
    /// Print a named graph as graph6
    Generate(GenerateArgs),
    /// Apply a construction to each input graph
    #[command(subcommand)]
    Construct(construct::ConstructCommand),
    /// Pass through the input lines that are nut or core graphs
    Filter(FilterArgs),
    /// All connected graphs of a small order, one per isomorphism class
    Enumerate(EnumerateArgs),
    /// Run a verification suite; exits 1 if any check fails
    #[command(subcommand)]
    Verify(verify::VerifyCommand),
    /// CSV counts of the input graphs grouped by order and orbit counts
    Stats(stats::StatsArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    stream: StreamArgs,
    /// Human-readable table instead of JSON lines
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct GenerateArgs {
    /// circulant, antiprism, c3-cart-cycle, c3-twist-cycle, triangle-cycle,
    /// rose-window, complete, cycle, path, hypercube, complete-bipartite, or
    /// a sporadic fixture name
    family: String,
    /// Numeric parameters; a circulant takes its order then the connection set
    params: Vec<usize>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["nut", "core"])))]
struct FilterArgs {
    #[command(flatten)]
    stream: StreamArgs,
    #[arg(long)]
    nut: bool,
    #[arg(long)]
    core: bool,
    /// Keep only vertex-transitive graphs
    #[arg(long)]
    vt: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Order, at most 8
    #[arg(short)]
    n: usize,
    /// Only nut graphs
    #[arg(long)]
    nut: bool,
}

pub(crate) fn graph6_string(g: &nutkit::graph::Graph) -> Result<String, CliError> {
    let bytes = write_graph6(g).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("graph6 is ASCII"))
}

fn analyze<W: Write>(args: &AnalyzeArgs, out: &mut W) -> Result<(), CliError> {
    if args.pretty {
        record::table_header(out)?;
    }
    for_each(
        &args.stream,
        |item| record::analyze(&item.graph, &item.text),
        |_, r| {
            if args.pretty {
                record::table_row(out, &r)?;
                Ok(())
            } else {
                json_line(out, &r)
            }
        },
    )
}

fn generate<W: Write>(args: &GenerateArgs, out: &mut W) -> Result<(), CliError> {
    let g = FamilySpec::parse(&args.family, &args.params)
        .and_then(|spec| spec.build())
        .map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out, "{}", graph6_string(&g)?)?;
    Ok(())
}

fn filter<W: Write>(args: &FilterArgs, out: &mut W) -> Result<(), CliError> {
    for_each(
        &args.stream,
        |item| {
            let g = &item.graph;
            let kind = if args.nut { is_nut(g).is_some() } else { is_core(g).is_some() };
            kind && (!args.vt || automorphism_group(g).is_transitive())
        },
        |item, keep| {
            if keep {
                writeln!(out, "{}", item.text)?;
            }
            Ok(())
        },
    )
}

fn enumerate<W: Write>(args: &EnumerateArgs, out: &mut W) -> Result<(), CliError> {
    let usage = |e: nutkit::enumerate::EnumerateError| CliError::Usage(e.to_string());
    let graphs = if args.nut {
        enumerate_nut(args.n).map_err(usage)?.into_iter().map(|r| r.graph).collect()
    } else {
        enumerate_connected(args.n).map_err(usage)?
    };
    for g in &graphs {
        writeln!(out, "{}", graph6_string(g)?)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Analyze(a) => analyze(a, &mut out),
        Command::Generate(a) => generate(a, &mut out),
        Command::Construct(c) => construct::run(c, &mut out),
        Command::Filter(a) => filter(a, &mut out),
        Command::Enumerate(a) => enumerate(a, &mut out),
        Command::Verify(v) => verify::run(v, &mut out),
        Command::Stats(a) => stats::run(a, &mut out),
    };
    // keep whatever was produced before a failure
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("nutkit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
