use super::{Edge, Graph, GraphError};

/// Cartesian product. Vertex `(a, x)` receives label `a * h.order() + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (gn, hn) = (g.order(), h.order());
    let order = gn.checked_mul(hn).ok_or(GraphError::OrderOverflow)?;
    let mut edges = Vec::with_capacity(g.size() * hn + h.size() * gn);
    for e in g.edges() {
        for x in 0..hn {
            edges.push((e.u() * hn + x, e.v() * hn + x));
        }
    }
    for a in 0..gn {
        for e in h.edges() {
            edges.push((a * hn + e.u(), a * hn + e.v()));
        }
    }
    Graph::from_edges(order, edges)
}

/// One-point coalescence identifying `v` in `g` with `w` in `h`.
///
/// Vertices of `g` keep their labels and the fused vertex is `v`. The other
/// vertices of `h` follow in ascending order from `g.order()`.
pub fn fuse_at(g: &Graph, v: usize, h: &Graph, w: usize) -> Result<Graph, GraphError> {
    if v >= g.order() {
        return Err(GraphError::IndexOutOfRange { vertex: v, order: g.order() });
    }
    if w >= h.order() {
        return Err(GraphError::IndexOutOfRange { vertex: w, order: h.order() });
    }
    let shift = g.order();
    let map = |y: usize| match y.cmp(&w) {
        std::cmp::Ordering::Equal => v,
        std::cmp::Ordering::Less => shift + y,
        std::cmp::Ordering::Greater => shift + y - 1,
    };
    let edges = g
        .edges()
        .iter()
        .map(|e| e.endpoints())
        .chain(h.edges().iter().map(|e| (map(e.u()), map(e.v()))));
    Graph::from_edges(g.order() + h.order() - 1, edges)
}

/// Replaces edge `e` by a path through `k` new vertices, labelled from
/// `g.order()` upwards starting at the `e.u()` end.
pub fn subdivide_edge(g: &Graph, e: Edge, k: usize) -> Result<Graph, GraphError> {
    if g.edge_index(&e).is_none() {
        return Err(GraphError::EdgeNotPresent(e));
    }
    if k == 0 {
        return Err(GraphError::ZeroSubdivision);
    }
    let n = g.order();
    let mut edges: Vec<(usize, usize)> =
        g.edges().iter().filter(|&&f| f != e).map(|f| f.endpoints()).collect();
    let path: Vec<usize> = std::iter::once(e.u()).chain(n..n + k).chain(std::iter::once(e.v())).collect();
    edges.extend(path.windows(2).map(|w| (w[0], w[1])));
    Graph::from_edges(n + k, edges)
}
