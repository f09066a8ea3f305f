use std::io::Write;

use clap::{Args, Subcommand};
use serde::Serialize;

use nutkit::constructions::{
    bridge_construction, coalesce_triangle_pentagon, fowler, multiplier, subdivision_construction, two_orbit_nut,
    Constructed, ConstructionRecord,
};
use nutkit::graph::{Edge, Graph};
use nutkit::symmetry::{automorphism_group, orbits};

use crate::record::SCHEMA_VERSION;
use crate::stream::{for_each, json_line, CliError, StreamArgs};

#[derive(Subcommand)]
pub enum ConstructCommand {
    /// Fuse r disjoint k-cycles at every vertex of a 2r-regular graph
    Multiplier {
        /// Cycle length, odd and at least 3
        #[arg(short)]
        k: usize,
        /// Run the nut test on the (possibly large) output
        #[arg(long)]
        check_nut: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Two new vertices on every edge of the orbit of a bridge
    Bridge {
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Vec<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Four new vertices on every edge of the orbit of an edge
    Subdivide {
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Vec<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Fowler expansion of every vertex in the orbit of a vertex
    Fowler {
        #[arg(long)]
        vertex: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Hang a triangle and a pentagon on a vertex
    Coalesce {
        #[arg(long)]
        vertex: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// A nut graph with two vertex orbits of the given composite order
    TwoOrbitNut {
        n: usize,
        /// JSON record instead of a bare graph6 line
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
pub struct OutputArgs {
    #[command(flatten)]
    stream: StreamArgs,
    /// JSON record instead of a bare graph6 line
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct ConstructionOutput<'a> {
    schema_version: u32,
    input: Option<&'a str>,
    graph6: String,
    order: usize,
    size: usize,
    #[serde(flatten)]
    record: ConstructionRecord,
}

fn emit<W: Write>(out: &mut W, json: bool, input: Option<&str>, c: &Constructed) -> Result<(), CliError> {
    let graph6 = crate::graph6_string(&c.graph)?;
    if json {
        let o = ConstructionOutput {
            schema_version: SCHEMA_VERSION,
            input,
            graph6,
            order: c.graph.order(),
            size: c.graph.size(),
            record: c.record,
        };
        json_line(out, &o)
    } else {
        writeln!(out, "{graph6}")?;
        Ok(())
    }
}

fn edge_orbit(g: &Graph, ends: &[usize]) -> Result<Vec<Edge>, String> {
    let e = Edge::new(ends[0], ends[1]).map_err(|e| e.to_string())?;
    let i = g.edge_index(&e).ok_or_else(|| format!("{} {} is not an edge", ends[0], ends[1]))?;
    let (p, _) = orbits(g, &automorphism_group(g)).expect("group of this graph");
    Ok(p.edge_orbits()[p.edge_orbit_of(i)].clone())
}

fn vertex_orbit(g: &Graph, v: usize) -> Result<Vec<usize>, String> {
    if v >= g.order() {
        return Err(format!("vertex {v} out of range for order {}", g.order()));
    }
    let (p, _) = orbits(g, &automorphism_group(g)).expect("group of this graph");
    Ok(p.vertex_orbits()[p.vertex_orbit_of(v)].clone())
}

fn apply<W, F>(args: &OutputArgs, out: &mut W, f: F) -> Result<(), CliError>
where
    W: Write,
    F: Fn(&Graph) -> Result<Constructed, String> + Sync,
{
    for_each(
        &args.stream,
        |item| f(&item.graph),
        |item, result| match result {
            Ok(c) => emit(out, args.json, Some(&item.text), &c),
            Err(e) if args.stream.lenient => {
                eprintln!("warning: line {}: {e}; skipped", item.line);
                Ok(())
            }
            Err(e) => Err(CliError::Input(format!("line {}: {e}", item.line))),
        },
    )
}

pub fn run<W: Write>(cmd: &ConstructCommand, out: &mut W) -> Result<(), CliError> {
    match cmd {
        ConstructCommand::Multiplier { k, check_nut, out: args } => apply(args, out, |g| {
            let mut c = multiplier(g, *k).map_err(|e| e.to_string())?;
            if *check_nut {
                c.check_nut();
            }
            Ok(c)
        }),
        ConstructCommand::Bridge { edge, out: args } => apply(args, out, |g| {
            bridge_construction(g, &edge_orbit(g, edge)?).map_err(|e| e.to_string())
        }),
        ConstructCommand::Subdivide { edge, out: args } => apply(args, out, |g| {
            subdivision_construction(g, &edge_orbit(g, edge)?).map_err(|e| e.to_string())
        }),
        ConstructCommand::Fowler { vertex, out: args } => {
            apply(args, out, |g| fowler(g, &vertex_orbit(g, *vertex)?).map_err(|e| e.to_string()))
        }
        ConstructCommand::Coalesce { vertex, out: args } => {
            apply(args, out, |g| coalesce_triangle_pentagon(g, *vertex).map_err(|e| e.to_string()))
        }
        ConstructCommand::TwoOrbitNut { n, json } => {
            let c = two_orbit_nut(*n).map_err(|e| CliError::Usage(e.to_string()))?;
            emit(out, *json, None, &c)
        }
    }
}
