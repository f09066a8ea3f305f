//! Constructions that grow nut graphs, and their effect on orbit counts.
//!
//! New vertices are always appended after the existing labels, in a fixed
//! order documented on each function. Constructions do not refuse to build
//! when the hypotheses that guarantee a nut graph fail; instead each output
//! carries a [`ConstructionRecord`] saying whether those hypotheses held and,
//! where cheap enough, whether the output is in fact a nut graph.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::families::{circulant, rose_window, triangle_cycle, FamilyError};
use crate::graph::{Edge, Graph};
use crate::nut::is_nut;
use crate::symmetry::{
    automorphism_group, orbits, point_orbits, stabilizer_orbit_counts, AutGroup, OrbitSignature,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph has odd degree {0}")]
    OddDegree(usize),
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("cycle length {0} is even")]
    EvenCycleLength(usize),
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("input graph is not a nut graph")]
    NotNut,
    #[error("edge {0} is not a bridge")]
    NotBridge(Edge),
    #[error("the given set is not a full orbit of the automorphism group")]
    NotFullOrbit,
    #[error("empty orbit")]
    EmptyOrbit,
    #[error("vertex {vertex} out of range for order {order}")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("edge {0} is not in the graph")]
    EdgeNotPresent(Edge),
    #[error("order {0} is prime: no nut graph with two vertex orbits exists")]
    PrimeOrder(usize),
    #[error("order {0} is below 9")]
    OrderTooSmall(usize),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// What is known about a construction's output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionRecord {
    pub construction: &'static str,
    /// The hypotheses under which the output is guaranteed to be nut hold.
    pub nut_guaranteed: bool,
    /// Direct nut test of the output, when it was run.
    pub output_nut: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct Constructed {
    pub graph: Graph,
    pub record: ConstructionRecord,
}

impl Constructed {
    fn checked(graph: Graph, construction: &'static str, nut_guaranteed: bool) -> Self {
        let output_nut = Some(is_nut(&graph).is_some());
        Constructed { graph, record: ConstructionRecord { construction, nut_guaranteed, output_nut } }
    }

    /// Runs the direct nut test if it has not been run yet.
    pub fn check_nut(&mut self) -> bool {
        *self.record.output_nut.get_or_insert_with(|| is_nut(&self.graph).is_some())
    }
}

/// Orbit counts before and after a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionDelta {
    pub before: OrbitSignature,
    pub after: OrbitSignature,
    /// Stabilizer orbits on the neighbourhood of the expanded vertex.
    pub t: Option<usize>,
    /// Stabilizer orbits on the `(w_i, x_j)` pairs of the expanded vertex.
    pub tau: Option<usize>,
    /// Growth in the number of edge orbits.
    pub phi: i64,
    pub group_preserved: bool,
}

impl ConstructionDelta {
    pub fn between(before: OrbitSignature, after: OrbitSignature) -> Self {
        let phi = after.o_e as i64 - before.o_e as i64;
        let group_preserved = before.aut_order == after.aut_order;
        ConstructionDelta { before, after, t: None, tau: None, phi, group_preserved }
    }
}

/// Half the common degree of a connected, even-regular graph.
fn half_degree(g: &Graph) -> Result<usize, ConstructionError> {
    let d = g.regular_degree().ok_or(ConstructionError::NotRegular)?;
    if d == 0 {
        return Err(ConstructionError::Edgeless);
    }
    if d % 2 == 1 {
        return Err(ConstructionError::OddDegree(d));
    }
    if !g.is_connected() {
        return Err(ConstructionError::Disconnected);
    }
    Ok(d / 2)
}

/// `M_k(g)`: fuses `r` disjoint `k`-cycles to every vertex of the
/// `2r`-regular graph `g`.
///
/// For each vertex `v` in ascending order and each of its `r` cycles, the
/// `k - 1` new vertices are appended in path order `v, p_1, ..., p_{k-1}, v`.
///
/// The output is guaranteed nut when `k ≡ 3 (mod 4)`, or `k ≡ 1 (mod 4)`
/// and `g` is bipartite. The nut test itself is left to
/// [`Constructed::check_nut`] because outputs can be large.
pub fn multiplier(g: &Graph, k: usize) -> Result<Constructed, ConstructionError> {
    if k.is_multiple_of(2) {
        return Err(ConstructionError::EvenCycleLength(k));
    }
    if k < 3 {
        return Err(ConstructionError::CycleTooShort(k));
    }
    let r = half_degree(g)?;
    let n = g.order();
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
    let mut next = n;
    for v in 0..n {
        for _ in 0..r {
            let path: Vec<usize> = (next..next + k - 1).collect();
            next += k - 1;
            edges.push((v, path[0]));
            edges.extend(path.windows(2).map(|w| (w[0], w[1])));
            edges.push((path[k - 2], v));
        }
    }
    let graph = Graph::from_edges(next, edges).expect("simple by construction");
    let nut_guaranteed = k % 4 == 3 || g.is_bipartite();
    Ok(Constructed {
        graph,
        record: ConstructionRecord { construction: "multiplier", nut_guaranteed, output_nut: None },
    })
}

/// Orbit signature of `M_k(g)` predicted from that of `g`, for a connected
/// `2r`-regular `g` of order `n` (bipartite when `k ≡ 1 (mod 4)`).
pub fn multiplier_signature(g: &OrbitSignature, n: usize, r: usize, k: usize) -> OrbitSignature {
    let half = k.div_ceil(2);
    let mut per_vertex = BigUint::from(1u32) << r;
    for i in 2..=r {
        per_vertex *= BigUint::from(i);
    }
    OrbitSignature {
        o_v: half * g.o_v,
        o_e: g.o_e + half * g.o_v,
        aut_order: per_vertex.pow(n as u32) * &g.aut_order,
    }
}

fn require_nut(g: &Graph) -> Result<(), ConstructionError> {
    is_nut(g).map(|_| ()).ok_or(ConstructionError::NotNut)
}

/// Checks that `orbit` is exactly one edge orbit of `a` and returns it
/// sorted.
fn full_edge_orbit(g: &Graph, a: &AutGroup, orbit: &[Edge]) -> Result<Vec<Edge>, ConstructionError> {
    let first = *orbit.first().ok_or(ConstructionError::EmptyOrbit)?;
    for e in orbit {
        if !g.has_edge(e.u(), e.v()) {
            return Err(ConstructionError::EdgeNotPresent(*e));
        }
    }
    let (p, _) = orbits(g, a).expect("group of this graph");
    let idx = g.edge_index(&first).unwrap();
    let mut want = p.edge_orbits()[p.edge_orbit_of(idx)].clone();
    let mut got = orbit.to_vec();
    want.sort_unstable();
    got.sort_unstable();
    got.dedup();
    if want != got {
        return Err(ConstructionError::NotFullOrbit);
    }
    Ok(got)
}

fn full_vertex_orbit(g: &Graph, a: &AutGroup, orbit: &[usize]) -> Result<Vec<usize>, ConstructionError> {
    let first = *orbit.first().ok_or(ConstructionError::EmptyOrbit)?;
    if let Some(&v) = orbit.iter().find(|&&v| v >= g.order()) {
        return Err(ConstructionError::IndexOutOfRange { vertex: v, order: g.order() });
    }
    let (orbit_of, classes) = point_orbits(g.order(), a.generators());
    let mut got = orbit.to_vec();
    got.sort_unstable();
    got.dedup();
    if classes[orbit_of[first]] != got {
        return Err(ConstructionError::NotFullOrbit);
    }
    Ok(got)
}

/// Replaces every edge `uv` of `edges` (in the given order) by a path
/// `u, n_1, ..., n_k, v` of appended vertices.
fn subdivide_all(g: &Graph, edges: &[Edge], k: usize) -> Graph {
    let mut out: Vec<(usize, usize)> =
        g.edges().iter().filter(|e| edges.binary_search(e).is_err()).map(|e| e.endpoints()).collect();
    let mut next = g.order();
    for e in edges {
        let mut prev = e.u();
        for x in next..next + k {
            out.push((prev, x));
            prev = x;
        }
        out.push((prev, e.v()));
        next += k;
    }
    Graph::from_edges(next, out).expect("simple by construction")
}

/// `B(g, E)`: two new vertices on every edge of the bridge orbit `E`.
/// Edges are processed in ascending order; on `uv` (`u < v`) the vertex
/// next to `u` comes first.
pub fn bridge_construction(g: &Graph, orbit: &[Edge]) -> Result<Constructed, ConstructionError> {
    require_nut(g)?;
    let a = automorphism_group(g);
    let orbit = full_edge_orbit(g, &a, orbit)?;
    if let Some(e) = orbit.iter().find(|e| !g.is_bridge(e)) {
        return Err(ConstructionError::NotBridge(*e));
    }
    Ok(Constructed::checked(subdivide_all(g, &orbit, 2), "bridge", true))
}

/// `S(g, E)`: four new vertices on every edge of the orbit `E`, labelled
/// as in [`bridge_construction`].
pub fn subdivision_construction(g: &Graph, orbit: &[Edge]) -> Result<Constructed, ConstructionError> {
    require_nut(g)?;
    let a = automorphism_group(g);
    let orbit = full_edge_orbit(g, &a, orbit)?;
    Ok(Constructed::checked(subdivide_all(g, &orbit, 4), "subdivision", true))
}

/// Labels of the gadget added for one expanded vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FowlerGadget {
    pub vertex: usize,
    /// Original neighbours `u_1 < ... < u_d`.
    pub neighbours: Vec<usize>,
    pub w: Vec<usize>,
    pub x: Vec<usize>,
}

/// `F(g, V)` built on the raw graph, without the nut precondition.
///
/// For each `v` of `vertices` (ascending) with neighbours `u_1 < ... < u_d`,
/// `w_1..w_d` then `x_1..x_d` are appended; `w_i ~ v`, `x_i ~ w_j` for
/// `i ≠ j`, and `x_i` takes over the edge to `u_i`. When `u_i` is expanded
/// too, the old edge `v u_i` becomes an edge between the two `x` vertices.
pub fn fowler_expand(g: &Graph, vertices: &[usize]) -> (Graph, Vec<FowlerGadget>) {
    let mut vs = vertices.to_vec();
    vs.sort_unstable();
    vs.dedup();
    let expanded = |v: usize| vs.binary_search(&v).is_ok();
    let mut next = g.order();
    let mut gadgets = Vec::new();
    for &v in &vs {
        let d = g.degree(v);
        let w: Vec<usize> = (next..next + d).collect();
        let x: Vec<usize> = (next + d..next + 2 * d).collect();
        next += 2 * d;
        gadgets.push(FowlerGadget { vertex: v, neighbours: g.neighbours(v).to_vec(), w, x });
    }
    let x_of = |v: usize, u: usize| {
        let gd = &gadgets[vs.binary_search(&v).unwrap()];
        gd.x[gd.neighbours.binary_search(&u).unwrap()]
    };
    let mut edges = Vec::new();
    for e in g.edges() {
        let (a, b) = e.endpoints();
        match (expanded(a), expanded(b)) {
            (false, false) => edges.push((a, b)),
            (true, false) => edges.push((x_of(a, b), b)),
            (false, true) => edges.push((a, x_of(b, a))),
            (true, true) => edges.push((x_of(a, b), x_of(b, a))),
        }
    }
    for gd in &gadgets {
        for (i, &wi) in gd.w.iter().enumerate() {
            edges.push((gd.vertex, wi));
            for (j, &xj) in gd.x.iter().enumerate() {
                if i != j {
                    edges.push((xj, wi));
                }
            }
        }
    }
    (Graph::from_edges(next, edges).expect("simple by construction"), gadgets)
}

/// `F(g, V)` on a full vertex orbit of a nut graph; see [`fowler_expand`]
/// for the labelling.
pub fn fowler(g: &Graph, orbit: &[usize]) -> Result<Constructed, ConstructionError> {
    require_nut(g)?;
    let a = automorphism_group(g);
    let orbit = full_vertex_orbit(g, &a, orbit)?;
    let (graph, _) = fowler_expand(g, &orbit);
    Ok(Constructed::checked(graph, "fowler", true))
}

/// Fowler expansion of the orbit of `v`, with `t`, `τ` and `Φ(g, v)`.
pub fn fowler_delta(g: &Graph, v: usize) -> Result<(Constructed, ConstructionDelta), ConstructionError> {
    if v >= g.order() {
        return Err(ConstructionError::IndexOutOfRange { vertex: v, order: g.order() });
    }
    require_nut(g)?;
    let a = automorphism_group(g);
    let (orbit_of, classes) = point_orbits(g.order(), a.generators());
    let orbit = classes[orbit_of[v]].clone();
    let (f, gadgets) = fowler_expand(g, &orbit);
    let b = automorphism_group(&f);
    let before = orbits(g, &a).expect("group of g").1;
    let after = orbits(&f, &b).expect("group of f").1;
    let (t, _) = stabilizer_orbit_counts(g, v, &a).expect("v in range");
    let gd = gadgets.iter().find(|gd| gd.vertex == v).unwrap();
    let tau = pair_orbits(&b, gd);
    let mut delta = ConstructionDelta::between(before, after);
    delta.t = Some(t);
    delta.tau = Some(tau);
    Ok((Constructed::checked(f, "fowler", true), delta))
}

/// Orbits of the stabilizer of the gadget's vertex on pairs `(w_i, x_j)`,
/// `i ≠ j`.
fn pair_orbits(b: &AutGroup, gd: &FowlerGadget) -> usize {
    let d = gd.w.len();
    if d < 2 {
        return 0;
    }
    let stab = b.stabilizer_generators(gd.vertex);
    let w_index = |y: usize| gd.w.iter().position(|&z| z == y).expect("stabilizer preserves w");
    let x_index = |y: usize| gd.x.iter().position(|&z| z == y).expect("stabilizer preserves x");
    let mut pair_gens = Vec::new();
    for p in &stab {
        let mut images = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                images[i * d + j] = w_index(p.apply(gd.w[i])) * d + x_index(p.apply(gd.x[j]));
            }
        }
        pair_gens.push(crate::symmetry::Permutation::from_images(images).expect("bijection on pairs"));
    }
    let (orbit_of, _) = point_orbits(d * d, &pair_gens);
    let mut seen: Vec<usize> = (0..d)
        .flat_map(|i| (0..d).filter(move |&j| j != i).map(move |j| i * d + j))
        .map(|k| orbit_of[k])
        .collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// `P(g, v)`: hangs a triangle (`n`, `n+1`) and a pentagon
/// (`v, n+2, n+3, n+4, n+5, v`) on `v`.
pub fn coalesce_triangle_pentagon(g: &Graph, v: usize) -> Result<Constructed, ConstructionError> {
    let n = g.order();
    if v >= n {
        return Err(ConstructionError::IndexOutOfRange { vertex: v, order: n });
    }
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
    edges.extend([(v, n), (n, n + 1), (n + 1, v)]);
    edges.extend([(v, n + 2), (n + 2, n + 3), (n + 3, n + 4), (n + 4, n + 5), (n + 5, v)]);
    let graph = Graph::from_edges(n + 6, edges).expect("simple by construction");
    // nullity is preserved, so the output is nut exactly when the input is
    // (K1 counts here: its kernel is one-dimensional and full)
    let guaranteed = n == 1 || is_nut(g).is_some();
    Ok(Constructed::checked(graph, "coalesce", guaranteed))
}

fn smallest_prime_factor(n: usize) -> usize {
    (2..).take_while(|p| p * p <= n).find(|p| n.is_multiple_of(*p)).unwrap_or(n)
}

/// A nut graph of composite order `n >= 9` with two vertex orbits:
/// `R_{n/2}(1, 2)` for even `n` not divisible by 3, `T_{n/3}` when `3 | n`,
/// and otherwise `M_3(Circ(n/p, {1..(p-1)/2}))` with `p` the smallest prime
/// factor of `n`.
pub fn two_orbit_nut(n: usize) -> Result<Constructed, ConstructionError> {
    if n < 9 {
        return Err(ConstructionError::OrderTooSmall(n));
    }
    let p = smallest_prime_factor(n);
    if p == n {
        return Err(ConstructionError::PrimeOrder(n));
    }
    let graph = if n.is_multiple_of(2) && !n.is_multiple_of(3) {
        rose_window(n / 2, 1, 2)?
    } else if n.is_multiple_of(3) {
        triangle_cycle(n / 3)?
    } else {
        let half = (p - 1) / 2;
        assert!(half >= 1 && n / p > 2 * half, "composite order leaves room for the circulant");
        let s: Vec<usize> = (1..=half).collect();
        multiplier(&circulant(n / p, &s)?, 3)?.graph
    };
    Ok(Constructed::checked(graph, "two-orbit-nut", true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, sporadic, Sporadic, PHI5_D3_VERTEX};
    use crate::graph::fuse_at;
    use crate::symmetry::orbit_signature;

    #[test]
    fn multiplier_of_cycle_is_triangle_cycle() {
        for n in 3..=10 {
            assert_eq!(multiplier(&cycle(n).unwrap(), 3).unwrap().graph, triangle_cycle(n).unwrap());
        }
    }

    #[test]
    fn multiplier_errors() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(multiplier(&path, 3).unwrap_err(), ConstructionError::NotRegular);
        assert_eq!(multiplier(&complete(4).unwrap(), 3).unwrap_err(), ConstructionError::OddDegree(3));
        assert_eq!(multiplier(&cycle(5).unwrap(), 4).unwrap_err(), ConstructionError::EvenCycleLength(4));
        let two = cycle(3).unwrap().disjoint_union(&cycle(3).unwrap());
        assert_eq!(multiplier(&two, 3).unwrap_err(), ConstructionError::Disconnected);
    }

    #[test]
    fn pentagon_multiplier_on_c4() {
        let mut m = multiplier(&cycle(4).unwrap(), 5).unwrap();
        assert_eq!(m.graph.order(), 20);
        assert!(m.record.nut_guaranteed);
        assert!(m.check_nut());
        // odd cycle base: no guarantee for k = 5
        assert!(!multiplier(&cycle(5).unwrap(), 5).unwrap().record.nut_guaranteed);
    }

    #[test]
    fn multiplier_signature_formula() {
        let c5 = cycle(5).unwrap();
        let predicted = multiplier_signature(&orbit_signature(&c5), 5, 1, 3);
        assert_eq!(predicted, OrbitSignature::new(2, 3, 320u32));
        let m = multiplier(&c5, 3).unwrap().graph;
        assert_eq!(orbit_signature(&m), predicted);
    }

    #[test]
    fn coalescence_of_k1_is_s1() {
        let s1 = fuse_at(&cycle(3).unwrap(), 0, &cycle(5).unwrap(), 0).unwrap();
        let c = coalesce_triangle_pentagon(&Graph::empty(1), 0).unwrap();
        assert_eq!(c.graph, s1);
        assert_eq!(c.record.output_nut, Some(true));
        let c2 = coalesce_triangle_pentagon(&s1, 3).unwrap();
        assert_eq!((c2.graph.order(), c2.record.output_nut), (13, Some(true)));
    }

    #[test]
    fn fowler_on_phi5_fixture() {
        let g = sporadic(Sporadic::Phi5D3);
        let (f, delta) = fowler_delta(&g, PHI5_D3_VERTEX).unwrap();
        assert_eq!(f.record.output_nut, Some(true));
        assert!(delta.group_preserved);
        assert_eq!(delta.phi, 5);
        // the only nontrivial automorphism fixes 2 and swaps 4 and 6
        assert_eq!(delta.before.aut_order, BigUint::from(2u32));
        assert_eq!((delta.t, delta.tau), (Some(2), Some(3)));
        assert_eq!(delta.after.o_v, delta.before.o_v + 2 * delta.t.unwrap());
        assert_eq!(delta.phi as usize, delta.t.unwrap() + delta.tau.unwrap());
    }

    #[test]
    fn subdivision_on_triangle_cycle_tops() {
        let t3 = triangle_cycle(3).unwrap();
        let tops: Vec<Edge> = (0..3).map(|i| Edge::new(3 + 2 * i, 4 + 2 * i).unwrap()).collect();
        let s = subdivision_construction(&t3, &tops).unwrap();
        assert_eq!((s.graph.order(), s.record.output_nut), (21, Some(true)));
        assert_eq!(subdivision_construction(&t3, &tops[..2]).unwrap_err(), ConstructionError::NotFullOrbit);
        assert_eq!(bridge_construction(&t3, &tops).unwrap_err(), ConstructionError::NotBridge(tops[0]));
        assert_eq!(subdivision_construction(&cycle(6).unwrap(), &tops).unwrap_err(), ConstructionError::NotNut);
    }

    #[test]
    fn two_orbit_dispatch() {
        assert_eq!(two_orbit_nut(10).unwrap().graph, rose_window(5, 1, 2).unwrap());
        assert_eq!(two_orbit_nut(9).unwrap().graph, triangle_cycle(3).unwrap());
        let g25 = two_orbit_nut(25).unwrap();
        assert_eq!(g25.graph, multiplier(&complete(5).unwrap(), 3).unwrap().graph);
        assert_eq!(g25.record.output_nut, Some(true));
        assert_eq!(two_orbit_nut(13).unwrap_err(), ConstructionError::PrimeOrder(13));
        assert_eq!(two_orbit_nut(8).unwrap_err(), ConstructionError::OrderTooSmall(8));
    }
}
