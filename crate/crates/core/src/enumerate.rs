//! Canonical forms and isomorph-free generation of small connected graphs.
//!
//! Graphs are generated by edge count: every class with `m + 1` edges
//! arises by adding one edge to some class with `m` edges, and the classes
//! of each layer are deduplicated by canonical form.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{write_graph6, Graph};
use crate::nut::{nullity, nut_witness, KernelVector, NullityReport};
use crate::symmetry::{automorphism_group, orbits, search, OrbitSignature};

/// Largest order [`enumerate_connected`] accepts.
pub const MAX_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {0} exceeds the enumeration limit of {MAX_ORDER}")]
    OrderTooLarge(usize),
}

/// graph6 bytes of the canonically relabelled graph. Equal forms mean
/// isomorphic graphs; the labelling is internal to this crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        crate::graph::parse_graph6(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.0).expect("graph6 is ASCII"))
    }
}

/// Canonical relabelling of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = search::canonical_labelling(g);
    let mut images = vec![0; lab.len()];
    for (k, &v) in lab.iter().enumerate() {
        images[v] = k;
    }
    g.relabel(&images)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(write_graph6(&canonical_graph(g)).expect("order within graph6 range"))
}

fn with_edge(g: &Graph, a: usize, b: usize) -> Graph {
    let edges = g.edges().iter().map(|e| e.endpoints()).chain([(a, b)]);
    Graph::from_edges(g.order(), edges).expect("adding a non-edge")
}

/// All graphs of order `n` up to isomorphism, sorted by canonical form.
fn all_graphs(n: usize) -> Vec<CanonicalForm> {
    let mut layer: BTreeSet<CanonicalForm> = BTreeSet::from([canonical_form(&Graph::empty(n))]);
    let mut out: Vec<CanonicalForm> = layer.iter().cloned().collect();
    for _ in 0..n * n.saturating_sub(1) / 2 {
        let graphs: Vec<Graph> = layer.iter().map(CanonicalForm::to_graph).collect();
        let children: Vec<Vec<CanonicalForm>> = graphs
            .par_iter()
            .map(|g| {
                let mut forms = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        if !g.has_edge(a, b) {
                            forms.push(canonical_form(&with_edge(g, a, b)));
                        }
                    }
                }
                forms
            })
            .collect();
        layer = children.into_iter().flatten().collect();
        out.extend(layer.iter().cloned());
    }
    out.sort_unstable();
    out
}

/// One canonical representative of every connected graph on `n` vertices,
/// sorted by canonical form.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n > MAX_ORDER {
        return Err(EnumerateError::OrderTooLarge(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(all_graphs(n).iter().map(CanonicalForm::to_graph).filter(Graph::is_connected).collect())
}

/// A nut graph with its kernel data and orbit signature.
#[derive(Debug, Clone)]
pub struct NutRecord {
    pub graph: Graph,
    pub nullity: NullityReport,
    pub kernel: KernelVector,
    pub signature: OrbitSignature,
}

/// All nut graphs on `n` vertices up to isomorphism, in canonical order.
pub fn enumerate_nut(n: usize) -> Result<Vec<NutRecord>, EnumerateError> {
    let graphs = enumerate_connected(n)?;
    Ok(graphs
        .into_par_iter()
        .filter_map(|g| {
            let report = nullity(&g);
            let kernel = nut_witness(&g, &report)?;
            let a = automorphism_group(&g);
            let (_, signature) = orbits(&g, &a).expect("group of this graph");
            Some(NutRecord { graph: g, nullity: report, kernel, signature })
        })
        .collect())
}
