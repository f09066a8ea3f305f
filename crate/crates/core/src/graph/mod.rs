//! Simple undirected labelled graphs.
//!
//! Vertices are the dense labels `0..order`. Adjacency is kept twice: as
//! bitset rows for constant-time membership and neighbourhood intersection,
//! and as sorted neighbour lists plus a canonical edge list for iteration.
//! Both views are built together and a [`Graph`] is immutable afterwards.

mod graph6;
mod ops;

pub use graph6::{parse_graph6, write_graph6, Graph6Error, GRAPH6_HEADER};
pub use ops::{cartesian_product, fuse_at, subdivide_edge};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Errors raised while building or editing a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("edge {0} listed more than once")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not present")]
    EdgeNotPresent(Edge),
    #[error("subdivision length must be at least 1")]
    ZeroSubdivision,
    #[error("graph order overflows usize")]
    OrderOverflow,
}

/// An unordered vertex pair stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        Ok(Edge { u: a.min(b), v: a.max(b) })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    /// Image of the edge under a vertex map, re-canonicalised.
    pub fn map(&self, images: &[usize]) -> Edge {
        let (a, b) = (images[self.u], images[self.v]);
        Edge { u: a.min(b), v: a.max(b) }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        let words = order.div_ceil(64);
        Graph {
            order,
            words,
            rows: vec![0; order * words],
            edges: Vec::new(),
            adj: vec![Vec::new(); order],
        }
    }

    /// Builds a graph from an edge list. Loops, out-of-range endpoints and
    /// repeated edges are rejected.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order);
        for (a, b) in edges {
            for x in [a, b] {
                if x >= order {
                    return Err(GraphError::IndexOutOfRange { vertex: x, order });
                }
            }
            let e = Edge::new(a, b)?;
            if g.has_edge(a, b) {
                return Err(GraphError::DuplicateEdge(e));
            }
            g.set_bit(a, b);
            g.set_bit(b, a);
            g.edges.push(e);
        }
        g.finish();
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges.
    pub(crate) fn from_edges_dedup<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order);
        for (a, b) in edges {
            for x in [a, b] {
                if x >= order {
                    return Err(GraphError::IndexOutOfRange { vertex: x, order });
                }
            }
            let e = Edge::new(a, b)?;
            if !g.has_edge(a, b) {
                g.set_bit(a, b);
                g.set_bit(b, a);
                g.edges.push(e);
            }
        }
        g.finish();
        Ok(g)
    }

    fn set_bit(&mut self, a: usize, b: usize) {
        self.rows[a * self.words + b / 64] |= 1u64 << (b % 64);
    }

    fn finish(&mut self) {
        self.edges.sort_unstable();
        for a in self.adj.iter_mut() {
            a.clear();
        }
        for e in &self.edges {
            self.adj[e.u].push(e.v);
            self.adj[e.v].push(e.u);
        }
        for a in self.adj.iter_mut() {
            a.sort_unstable();
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order && b < self.order && self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    /// Bitset row of `v`; bit `b` of word `b / 64` is set iff `b ~ v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn average_degree(&self) -> f64 {
        if self.order == 0 {
            0.0
        } else {
            2.0 * self.size() as f64 / self.order as f64
        }
    }

    /// Common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        self.component_size_from(0, None) == self.order
    }

    fn component_size_from(&self, start: usize, skip: Option<Edge>) -> usize {
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if seen[y] || skip == Some(Edge { u: x.min(y), v: x.max(y) }) {
                    continue;
                }
                seen[y] = true;
                count += 1;
                queue.push_back(y);
            }
        }
        count
    }

    /// An edge is a bridge when deleting it separates its endpoints.
    pub fn is_bridge(&self, e: &Edge) -> bool {
        if self.edge_index(e).is_none() {
            return false;
        }
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([e.u]);
        seen[e.u] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if seen[y] || (x.min(y), x.max(y)) == (e.u, e.v) {
                    continue;
                }
                if y == e.v {
                    return false;
                }
                seen[y] = true;
                queue.push_back(y);
            }
        }
        true
    }

    /// Two-colouring of every component, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.order];
        for s in 0..self.order {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let cx = colour[x].unwrap();
                for &y in &self.adj[x] {
                    match colour[y] {
                        None => {
                            colour[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Image of the graph under the vertex map `images` (vertex `i` becomes
    /// `images[i]`). `images` must be a permutation of `0..order`.
    pub fn relabel(&self, images: &[usize]) -> Graph {
        assert_eq!(images.len(), self.order, "relabelling has wrong length");
        let mapped = self.edges.iter().map(|e| (images[e.u], images[e.v]));
        Graph::from_edges(self.order, mapped).expect("relabelling must be a permutation")
    }

    /// True when `images` maps the edge set onto itself.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        images.len() == self.order
            && self.edges.iter().all(|e| self.has_edge(images[e.u], images[e.v]))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v))
            .chain(other.edges.iter().map(|e| (e.u + shift, e.v + shift)));
        Graph::from_edges(self.order + other.order, edges).expect("disjoint union is simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_and_repeats() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::IndexOutOfRange { vertex: 3, order: 3 })
        ));
    }

    #[test]
    fn adjacency_views_agree() {
        let g = Graph::from_edges(70, [(0, 69), (3, 64), (5, 6)]).unwrap();
        assert!(g.has_edge(69, 0) && g.has_edge(64, 3));
        assert!(!g.has_edge(0, 64));
        assert_eq!(g.neighbours(3), &[64]);
        assert_eq!(g.row(0)[1], 1u64 << 5);
        assert_eq!(g.edges()[0], Edge::new(69, 0).unwrap());
    }

    #[test]
    fn connectivity_and_bridges() {
        let p = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p.is_connected());
        assert!(p.is_bridge(&Edge::new(1, 2).unwrap()));
        let c = cycle(5);
        assert!(!c.is_bridge(&Edge::new(0, 1).unwrap()));
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn bipartite_detection() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(7).is_bipartite());
        assert!(Graph::empty(4).is_bipartite());
    }

    #[test]
    fn degree_summaries() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.min_degree(), 1);
        assert_eq!(star.max_degree(), 3);
        assert_eq!(star.regular_degree(), None);
        assert_eq!(cycle(5).regular_degree(), Some(2));
        assert!((star.average_degree() - 1.5).abs() < 1e-12);
    }

    #[test]
    fn relabel_preserves_structure() {
        let c = cycle(5);
        let r = c.relabel(&[4, 3, 2, 1, 0]);
        assert_eq!(r, c);
        assert!(c.is_automorphism(&[1, 2, 3, 4, 0]));
        assert!(!c.is_automorphism(&[1, 0, 2, 3, 4]));
    }
}
