use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::graph::{Edge, Graph};

use super::perm::Permutation;
use super::SymmetryError;

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes; the smaller root survives.
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Classes in order of their least member, members ascending.
    pub(crate) fn classes(&mut self) -> (Vec<usize>, Vec<Vec<usize>>) {
        let n = self.parent.len();
        let mut index = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; n];
        for x in 0..n {
            let r = self.find(x);
            if index[r] == usize::MAX {
                index[r] = classes.len();
                classes.push(Vec::new());
            }
            class_of[x] = index[r];
            classes[index[r]].push(x);
        }
        (class_of, classes)
    }
}

/// Orbits of a group on points `0..n`, numbered by least member.
pub(crate) fn point_orbits(n: usize, gens: &[Permutation]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut uf = UnionFind::new(n);
    for g in gens {
        for x in 0..n {
            uf.union(x, g.apply(x));
        }
    }
    uf.classes()
}

/// Vertex and edge orbits of a graph under its automorphism group.
///
/// Orbits are numbered in order of their least member; edge orbits are
/// compared by the position of the edge in [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    vertex_orbit_of: Vec<usize>,
    vertex_orbits: Vec<Vec<usize>>,
    edge_orbit_of: Vec<usize>,
    edge_orbits: Vec<Vec<Edge>>,
}

impl OrbitPartition {
    pub(crate) fn compute(g: &Graph, gens: &[Permutation]) -> Self {
        let (vertex_orbit_of, vertex_orbits) = point_orbits(g.order(), gens);
        let mut uf = UnionFind::new(g.size());
        for p in gens {
            for (i, e) in g.edges().iter().enumerate() {
                let j = g.edge_index(&e.map(p.images())).expect("generator maps edges to edges");
                uf.union(i, j);
            }
        }
        let (edge_orbit_of, classes) = uf.classes();
        let edge_orbits =
            classes.into_iter().map(|c| c.into_iter().map(|i| g.edges()[i]).collect()).collect();
        OrbitPartition { vertex_orbit_of, vertex_orbits, edge_orbit_of, edge_orbits }
    }

    pub fn vertex_orbits(&self) -> &[Vec<usize>] {
        &self.vertex_orbits
    }

    pub fn edge_orbits(&self) -> &[Vec<Edge>] {
        &self.edge_orbits
    }

    pub fn vertex_orbit_of(&self, v: usize) -> usize {
        self.vertex_orbit_of[v]
    }

    /// Orbit index of the edge at position `i` of [`Graph::edges`].
    pub fn edge_orbit_of(&self, i: usize) -> usize {
        self.edge_orbit_of[i]
    }

    pub fn o_v(&self) -> usize {
        self.vertex_orbits.len()
    }

    pub fn o_e(&self) -> usize {
        self.edge_orbits.len()
    }

    pub fn order(&self) -> usize {
        self.vertex_orbit_of.len()
    }
}

fn decimal<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

/// The triple `(o_v, o_e, |Aut|)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitSignature {
    pub o_v: usize,
    pub o_e: usize,
    #[serde(serialize_with = "decimal")]
    pub aut_order: BigUint,
}

impl OrbitSignature {
    pub fn new(o_v: usize, o_e: usize, aut_order: impl Into<BigUint>) -> Self {
        OrbitSignature { o_v, o_e, aut_order: aut_order.into() }
    }
}

impl std::fmt::Display for OrbitSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.o_v, self.o_e, self.aut_order)
    }
}

/// Quotient of a graph by its vertex orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrbitGraph {
    sizes: Vec<usize>,
    /// `d[i][j]`: neighbours in orbit `j` of any vertex of orbit `i`.
    d: Vec<Vec<usize>>,
}

impl VertexOrbitGraph {
    pub(crate) fn build(g: &Graph, p: &OrbitPartition) -> Result<Self, SymmetryError> {
        let k = p.o_v();
        let mut d = vec![vec![0; k]; k];
        for (i, orbit) in p.vertex_orbits().iter().enumerate() {
            let mut first: Option<Vec<usize>> = None;
            for &v in orbit {
                let mut row = vec![0; k];
                for &u in g.neighbours(v) {
                    row[p.vertex_orbit_of(u)] += 1;
                }
                match &first {
                    None => first = Some(row),
                    Some(f) => {
                        if let Some(j) = (0..k).find(|&j| f[j] != row[j]) {
                            return Err(SymmetryError::InconsistentOrbitDegrees { from: i, to: j });
                        }
                    }
                }
            }
            d[i] = first.unwrap_or_else(|| vec![0; k]);
        }
        Ok(VertexOrbitGraph { sizes: p.vertex_orbits().iter().map(Vec::len).collect(), d })
    }

    /// Number of orbits (nodes of the quotient).
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn orbit_size(&self, i: usize) -> usize {
        self.sizes[i]
    }

    pub fn d(&self, i: usize, j: usize) -> usize {
        self.d[i][j]
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.d[i][j] > 0
    }

    /// Whether orbit `i` spans at least one edge.
    pub fn has_intra_edges(&self, i: usize) -> bool {
        self.d[i][i] > 0
    }

    pub fn is_independent(&self, i: usize) -> bool {
        !self.has_intra_edges(i)
    }

    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| self.is_adjacent(i, j))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbours(i).count()
    }

    pub fn is_leaf(&self, i: usize) -> bool {
        self.degree(i) == 1
    }

    /// Orbits that are leaves of the quotient and span no edge.
    pub fn independent_leaves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_leaf(i) && self.is_independent(i)).collect()
    }

    /// Whether the quotient is a cycle of odd length (at least three).
    pub fn is_odd_cycle(&self) -> bool {
        let k = self.len();
        if k < 3 || k.is_multiple_of(2) || (0..k).any(|i| self.degree(i) != 2) {
            return false;
        }
        // 2-regular and connected means a single cycle
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in self.neighbours(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}
