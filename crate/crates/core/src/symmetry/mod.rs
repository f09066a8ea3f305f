//! Automorphism groups, vertex and edge orbits, the vertex-orbit graph,
//! and sign-reversing automorphisms.
//!
//! Generators come from an individualization-refinement search; the group
//! order is certified independently by a Schreier–Sims stabilizer chain
//! built from those generators.

mod orbits;
mod partition;
mod perm;
mod schreier;
pub(crate) mod search;

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::nut::{first_local_violation, KernelVector};

pub use orbits::{OrbitPartition, OrbitSignature, VertexOrbitGraph};
pub use perm::{NotAPermutation, Permutation};
pub use schreier::StabChain;

pub(crate) use orbits::point_orbits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("group acts on {group} points but the graph has {graph} vertices")]
    MismatchedGroup { group: usize, graph: usize },
    #[error("graph is not a nut graph with the given kernel vector")]
    NotNutGraph,
    #[error("vertex {vertex} out of range for order {order}")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("vertices of orbit {from} disagree on their neighbour count in orbit {to}")]
    InconsistentOrbitDegrees { from: usize, to: usize },
}

/// Automorphism group of a (vertex-coloured) graph.
#[derive(Debug, Clone)]
pub struct AutGroup {
    degree: usize,
    generators: Vec<Permutation>,
    base: Vec<usize>,
    orbit_sizes: Vec<usize>,
    chain: OnceLock<StabChain>,
}

impl AutGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Base of the search's first path.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Stabilizer chain, built on first use.
    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::new(self.degree, &self.base, &self.generators))
    }

    /// Exact order from the stabilizer chain.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Exact order from the search's orbit sizes alone, without building
    /// the chain. Agrees with [`AutGroup::order`].
    pub fn search_order(&self) -> BigUint {
        self.orbit_sizes.iter().map(|&s| BigUint::from(s)).product()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || point_orbits(self.degree, &self.generators).1.len() == 1
    }

    /// Generators of the stabilizer of `v`.
    pub fn stabilizer_generators(&self, v: usize) -> Vec<Permutation> {
        if self.generators.iter().all(|p| p.apply(v) == v) {
            return self.generators.clone();
        }
        self.chain().with_base_prefix(&[v]).level_generators(1).to_vec()
    }

    /// Whether some automorphism exchanges `u` and `v`.
    ///
    /// With `h` mapping `u` to `v`, the automorphisms sending `u` to `v`
    /// are `g h` for `g` fixing `u`, and such a product sends `v` to `u`
    /// exactly when `g` sends `v` to `h^-1(u)`.
    pub fn swaps(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        let chain = self.chain().with_base_prefix(&[u]);
        let Some(h) = chain.transversal(0, v) else {
            return false;
        };
        let target = h.inverse().apply(u);
        let (orbit_of, _) = point_orbits(self.degree, chain.level_generators(1));
        orbit_of[v] == orbit_of[target]
    }
}

pub fn automorphism_group(g: &Graph) -> AutGroup {
    automorphism_group_coloured(g, &vec![0; g.order()])
}

/// Automorphisms that also preserve the vertex colouring `colours`.
///
/// # Panics
/// If `colours` does not have one entry per vertex.
pub fn automorphism_group_coloured(g: &Graph, colours: &[usize]) -> AutGroup {
    let out = search::search_automorphisms(g, colours);
    for p in &out.generators {
        assert!(g.is_automorphism(p.images()), "search emitted a non-automorphism");
    }
    AutGroup {
        degree: g.order(),
        generators: out.generators,
        base: out.base,
        orbit_sizes: out.orbit_sizes,
        chain: OnceLock::new(),
    }
}

fn check_degree(g: &Graph, a: &AutGroup) -> Result<(), SymmetryError> {
    if a.degree() != g.order() {
        return Err(SymmetryError::MismatchedGroup { group: a.degree(), graph: g.order() });
    }
    Ok(())
}

/// Vertex and edge orbits of `a` on `g`, with `Ω(g)`.
pub fn orbits(g: &Graph, a: &AutGroup) -> Result<(OrbitPartition, OrbitSignature), SymmetryError> {
    check_degree(g, a)?;
    let p = OrbitPartition::compute(g, a.generators());
    let sig = OrbitSignature { o_v: p.o_v(), o_e: p.o_e(), aut_order: a.search_order() };
    Ok((p, sig))
}

/// Full group and orbit signature in one call.
pub fn orbit_signature(g: &Graph) -> OrbitSignature {
    let a = automorphism_group(g);
    orbits(g, &a).expect("group computed for this graph").1
}

pub fn vertex_orbit_graph(g: &Graph, p: &OrbitPartition) -> Result<VertexOrbitGraph, SymmetryError> {
    if p.order() != g.order() {
        return Err(SymmetryError::MismatchedGroup { group: p.order(), graph: g.order() });
    }
    VertexOrbitGraph::build(g, p)
}

/// Whether some automorphism negates the kernel vector `x`.
///
/// When the kernel is one-dimensional every automorphism maps `x` to `±x`,
/// and the sign is multiplicative, so scanning the generators suffices.
/// A generator sending `x` elsewhere means the kernel is larger than
/// assumed, reported as [`SymmetryError::NotNutGraph`].
pub fn has_sign_reversing_automorphism(
    g: &Graph,
    x: &KernelVector,
    a: &AutGroup,
) -> Result<bool, SymmetryError> {
    check_degree(g, a)?;
    let e = x.entries();
    if e.len() != g.order() || e.iter().any(Zero::is_zero) || first_local_violation(g, e).is_some() {
        return Err(SymmetryError::NotNutGraph);
    }
    let mut reversing = false;
    for p in a.generators() {
        let same = (0..e.len()).all(|i| e[p.apply(i)] == e[i]);
        let negated = (0..e.len()).all(|i| e[p.apply(i)] == -&e[i]);
        match (same, negated) {
            (true, _) => {}
            (false, true) => reversing = true,
            (false, false) => return Err(SymmetryError::NotNutGraph),
        }
    }
    Ok(reversing)
}

/// Orbits of the stabilizer of `v` on the neighbourhood of `v`, as sorted
/// classes ordered by least member; `t` is their number.
pub fn stabilizer_orbit_counts(
    g: &Graph,
    v: usize,
    a: &AutGroup,
) -> Result<(usize, Vec<Vec<usize>>), SymmetryError> {
    check_degree(g, a)?;
    if v >= g.order() {
        return Err(SymmetryError::IndexOutOfRange { vertex: v, order: g.order() });
    }
    let (orbit_of, _) = point_orbits(g.order(), &a.stabilizer_generators(v));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for &u in g.neighbours(v) {
        match seen.iter().position(|&o| o == orbit_of[u]) {
            Some(k) => classes[k].push(u),
            None => {
                seen.push(orbit_of[u]);
                classes.push(vec![u]);
            }
        }
    }
    Ok((classes.len(), classes))
}

/// Whether some automorphism of the group exchanges the endpoints of `e`.
pub fn swaps_endpoints(a: &AutGroup, e: Edge) -> bool {
    a.swaps(e.u(), e.v())
}
