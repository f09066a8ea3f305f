use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, ValueEnum};
use num_bigint::BigUint;

use nutkit::nut::is_nut;
use nutkit::symmetry::orbit_signature;

use crate::stream::{for_each, CliError, StreamArgs};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Key {
    /// order
    N,
    /// number of edges
    M,
    /// vertex orbits
    Ov,
    /// edge orbits
    Oe,
    /// automorphism group order
    Aut,
}

impl Key {
    fn column(self) -> &'static str {
        match self {
            Key::N => "n",
            Key::M => "m",
            Key::Ov => "o_v",
            Key::Oe => "o_e",
            Key::Aut => "aut_order",
        }
    }
}

#[derive(Args)]
pub struct StatsArgs {
    #[command(flatten)]
    stream: StreamArgs,
    /// Comma-separated grouping keys
    #[arg(long, value_enum, value_delimiter = ',', default_value = "ov,oe")]
    group_by: Vec<Key>,
}

/// Group key values; the group order sorts numerically.
type Group = Vec<BigUint>;

#[derive(Default)]
struct Counts {
    graphs: usize,
    connected: usize,
    nut: usize,
}

/// Writes `key..., graphs, connected, nut` rows in ascending key order.
pub fn run<W: Write>(args: &StatsArgs, out: &mut W) -> Result<(), CliError> {
    let needs_orbits = args.group_by.iter().any(|k| matches!(k, Key::Ov | Key::Oe | Key::Aut));
    let mut table: BTreeMap<Group, Counts> = BTreeMap::new();
    for_each(
        &args.stream,
        |item| {
            let g = &item.graph;
            let sig = needs_orbits.then(|| orbit_signature(g));
            let key: Group = args
                .group_by
                .iter()
                .map(|k| match k {
                    Key::N => BigUint::from(g.order()),
                    Key::M => BigUint::from(g.size()),
                    Key::Ov => BigUint::from(sig.as_ref().unwrap().o_v),
                    Key::Oe => BigUint::from(sig.as_ref().unwrap().o_e),
                    Key::Aut => sig.as_ref().unwrap().aut_order.clone(),
                })
                .collect();
            (key, g.is_connected(), is_nut(g).is_some())
        },
        |_, (key, connected, nut)| {
            let c = table.entry(key).or_default();
            c.graphs += 1;
            c.connected += connected as usize;
            c.nut += nut as usize;
            Ok(())
        },
    )?;
    let header: Vec<&str> = args.group_by.iter().map(|k| k.column()).collect();
    writeln!(out, "{},graphs,connected,nut", header.join(","))?;
    for (key, c) in &table {
        let key: Vec<String> = key.iter().map(ToString::to_string).collect();
        writeln!(out, "{},{},{},{}", key.join(","), c.graphs, c.connected, c.nut)?;
    }
    Ok(())
}
