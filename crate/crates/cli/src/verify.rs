use std::io::Write;

use clap::{Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use nutkit::graph::{Edge, Graph};
use nutkit::symmetry::{automorphism_group, orbits};
use nutkit::verify::{
    check_circulant_dihedral, check_construction_delta, check_multiplier_symmetry, check_orbit_inequality,
    check_orbit_sums, check_two_orbit_existence, check_two_orbit_prime_exclusion, check_vt_nut_conditions,
    Construction, Outcome, Target, VerificationReport, VerifyError,
};

use crate::record::SCHEMA_VERSION;
use crate::stream::{for_each, json_line, CliError, StreamArgs};

#[derive(Subcommand)]
pub enum VerifyCommand {
    /// o_e >= o_v + 1 on every nut input graph
    OrbitInequality {
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Degree/order congruences and the balanced ±1 kernel of
    /// vertex-transitive nut graphs
    VtNutConditions {
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Orbit sums of the kernel vector
    OrbitSums {
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Orbit counts and group order of M_k(G) against the prediction
    MultiplierSymmetry {
        #[arg(short, default_value_t = 3)]
        k: usize,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Orbit growth of a construction, on every applicable orbit unless
    /// one is selected
    ConstructionDelta {
        #[arg(long, value_enum)]
        construction: ConstructionArg,
        #[arg(long, conflicts_with = "edge")]
        vertex: Option<usize>,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Option<Vec<usize>>,
        #[command(flatten)]
        stream: StreamArgs,
    },
    /// Automorphism groups of Circ(n, {1..k})
    CirculantDihedral {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
    },
    /// No two-orbit nut graph of prime order, exhaustively up to n_max <= 8
    TwoOrbitPrimeExclusion {
        #[arg(long)]
        n_max: usize,
    },
    /// Two-orbit nut graphs for every composite order in a range
    TwoOrbitExistence {
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ConstructionArg {
    Bridge,
    Subdivision,
    Fowler,
}

impl From<ConstructionArg> for Construction {
    fn from(c: ConstructionArg) -> Self {
        match c {
            ConstructionArg::Bridge => Construction::Bridge,
            ConstructionArg::Subdivision => Construction::Subdivision,
            ConstructionArg::Fowler => Construction::Fowler,
        }
    }
}

#[derive(Serialize)]
struct Line<'a> {
    schema_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    #[serde(flatten)]
    report: &'a VerificationReport,
}

/// A check that could not run on this input, reported rather than fatal.
fn not_applicable(claim: &'static str, g: &Graph, text: &str, e: &VerifyError) -> VerificationReport {
    VerificationReport {
        claim,
        instance: format!("n={} m={}", g.order(), g.size()),
        outcome: Outcome::NotApplicable,
        graph6: Some(text.to_string()),
        parameters: Value::Null,
        witness: json!({ "error": e.to_string() }),
    }
}

#[derive(Default)]
struct Tally {
    total: usize,
    failed: usize,
}

impl Tally {
    fn write<W: Write>(&mut self, out: &mut W, line: Option<usize>, r: &VerificationReport) -> Result<(), CliError> {
        self.total += 1;
        self.failed += r.failed() as usize;
        json_line(out, &Line { schema_version: SCHEMA_VERSION, line, report: r })
    }
}

fn targets(g: &Graph, which: Construction, vertex: Option<usize>, edge: &Option<Vec<usize>>) -> Result<Vec<Target>, String> {
    let (p, _) = orbits(g, &automorphism_group(g)).expect("group of this graph");
    match (which, vertex, edge) {
        (Construction::Fowler, Some(v), _) => {
            if v >= g.order() {
                return Err(format!("vertex {v} out of range for order {}", g.order()));
            }
            Ok(vec![Target::Vertices(p.vertex_orbits()[p.vertex_orbit_of(v)].clone())])
        }
        (Construction::Fowler, None, None) => Ok(p.vertex_orbits().iter().cloned().map(Target::Vertices).collect()),
        (Construction::Fowler, None, Some(_)) => Err("fowler takes --vertex".into()),
        (_, Some(_), _) => Err("bridge and subdivision take --edge".into()),
        (_, None, Some(ends)) => {
            let e = Edge::new(ends[0], ends[1]).map_err(|e| e.to_string())?;
            let i = g.edge_index(&e).ok_or_else(|| format!("{} {} is not an edge", ends[0], ends[1]))?;
            Ok(vec![Target::Edges(p.edge_orbits()[p.edge_orbit_of(i)].clone())])
        }
        (_, None, None) => Ok(p
            .edge_orbits()
            .iter()
            .filter(|o| which != Construction::Bridge || g.is_bridge(&o[0]))
            .cloned()
            .map(Target::Edges)
            .collect()),
    }
}

fn per_graph<W, F>(stream: &StreamArgs, out: &mut W, tally: &mut Tally, f: F) -> Result<(), CliError>
where
    W: Write,
    F: Fn(&Graph, &str) -> Vec<VerificationReport> + Sync,
{
    for_each(stream, |item| f(&item.graph, &item.text), |item, reports| {
        for r in &reports {
            tally.write(out, Some(item.line), r)?;
        }
        Ok(())
    })
}

pub fn run<W: Write>(cmd: &VerifyCommand, out: &mut W) -> Result<(), CliError> {
    let mut tally = Tally::default();
    let usage = |e: VerifyError| CliError::Usage(e.to_string());
    match cmd {
        VerifyCommand::OrbitInequality { stream } => {
            per_graph(stream, out, &mut tally, |g, _| vec![check_orbit_inequality(g)])?
        }
        VerifyCommand::VtNutConditions { stream } => per_graph(stream, out, &mut tally, |g, text| {
            vec![check_vt_nut_conditions(g).unwrap_or_else(|e| not_applicable("vt-nut-conditions", g, text, &e))]
        })?,
        VerifyCommand::OrbitSums { stream } => per_graph(stream, out, &mut tally, |g, text| {
            vec![check_orbit_sums(g).unwrap_or_else(|e| not_applicable("orbit-sums", g, text, &e))]
        })?,
        VerifyCommand::MultiplierSymmetry { k, stream } => per_graph(stream, out, &mut tally, |g, text| {
            vec![check_multiplier_symmetry(g, *k).unwrap_or_else(|e| not_applicable("multiplier-symmetry", g, text, &e))]
        })?,
        VerifyCommand::ConstructionDelta { construction, vertex, edge, stream } => {
            let which = Construction::from(*construction);
            per_graph(stream, out, &mut tally, |g, text| {
                let na = |e: VerifyError| not_applicable("construction-delta", g, text, &e);
                match targets(g, which, *vertex, edge) {
                    Err(msg) => {
                        let mut r = na(VerifyError::TargetMismatch(which));
                        r.witness = json!({ "error": msg });
                        vec![r]
                    }
                    Ok(ts) => ts
                        .iter()
                        .map(|t| check_construction_delta(g, which, t).map(|(_, r)| r).unwrap_or_else(na))
                        .collect(),
                }
            })?
        }
        VerifyCommand::CirculantDihedral { k, min, max } => {
            let r = check_circulant_dihedral(*k, *min..=*max).map_err(usage)?;
            tally.write(out, None, &r)?;
        }
        VerifyCommand::TwoOrbitPrimeExclusion { n_max } => {
            let r = check_two_orbit_prime_exclusion(*n_max).map_err(usage)?;
            tally.write(out, None, &r)?;
        }
        VerifyCommand::TwoOrbitExistence { min, max } => {
            for n in (*min).max(9)..=*max {
                if (2..n).take_while(|p| p * p <= n).any(|p| n % p == 0) {
                    let r = check_two_orbit_existence(n).map_err(usage)?;
                    tally.write(out, None, &r)?;
                }
            }
        }
    }
    if tally.failed > 0 {
        return Err(CliError::Failed(format!("{} of {} checks failed", tally.failed, tally.total)));
    }
    Ok(())
}
