//! Named graph families and sporadic fixtures, each with a fixed vertex
//! numbering so that graph6 output is reproducible.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{cartesian_product, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid connection set for a circulant of order {n}: {reason}")]
    InvalidConnectionSet { n: usize, reason: String },
    #[error("{family} needs parameter at least {min}, got {got}")]
    ParameterTooSmall { family: &'static str, min: usize, got: usize },
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("unknown family or fixture name {0:?}")]
    UnknownName(String),
    #[error("{family} takes {expected} parameter(s), got {got}")]
    WrongArity { family: &'static str, expected: &'static str, got: usize },
}

fn at_least(family: &'static str, min: usize, got: usize) -> Result<(), FamilyError> {
    if got < min {
        return Err(FamilyError::ParameterTooSmall { family, min, got });
    }
    Ok(())
}

/// `Circ(n, S)`: `i ~ j` iff the cyclic distance of `i` and `j` lies in `S`.
pub fn circulant(n: usize, s: &[usize]) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidConnectionSet { n, reason: "order below 3".into() });
    }
    if let Some(&bad) = s.iter().find(|&&x| x == 0 || 2 * x > n) {
        return Err(FamilyError::InvalidConnectionSet { n, reason: format!("{bad} not in 1..={}", n / 2) });
    }
    let edges = (0..n).flat_map(|i| s.iter().map(move |&x| (i, (i + x) % n)));
    Ok(Graph::from_edges_dedup(n, edges).expect("circulant edges are in range"))
}

/// Antiprism `A_l` on `2l` vertices, labelled as `Circ(2l, {1, 2})`: the
/// even and odd vertices form the two `l`-cycles.
pub fn antiprism(l: usize) -> Result<Graph, FamilyError> {
    at_least("antiprism", 3, l)?;
    circulant(2 * l, &[1, 2])
}

/// `C3 □ Cl`; vertex `(i, j)` is `i * l + j`.
pub fn c3_cart_cycle(l: usize) -> Result<Graph, FamilyError> {
    at_least("c3-cart-cycle", 3, l)?;
    Ok(cartesian_product(&cycle(3)?, &cycle(l)?).expect("nonempty factors"))
}

/// `C3 ⋊ Cl`: `C3 □ Cl` with the rungs between layers 0 and 1 shifted by
/// one, `(i, 0) ~ (i + 1, 1)`. Same numbering as [`c3_cart_cycle`].
pub fn c3_twist_cycle(l: usize) -> Result<Graph, FamilyError> {
    at_least("c3-twist-cycle", 3, l)?;
    let id = |i: usize, j: usize| i * l + j;
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in 0..l {
            edges.push((id(i, j), id((i + 1) % 3, j)));
            if j == 0 {
                edges.push((id(i, 0), id((i + 1) % 3, 1)));
            } else {
                edges.push((id(i, j), id(i, (j + 1) % l)));
            }
        }
    }
    Ok(Graph::from_edges(3 * l, edges).expect("simple by construction"))
}

/// `T_n`: an `n`-cycle on `0..n` with a triangle hung on every cycle
/// vertex; the triangle on vertex `i` adds `n + 2i` and `n + 2i + 1`.
pub fn triangle_cycle(n: usize) -> Result<Graph, FamilyError> {
    at_least("triangle-cycle", 3, n)?;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let (a, b) = (n + 2 * i, n + 2 * i + 1);
        edges.extend([(i, a), (a, b), (b, i)]);
    }
    Ok(Graph::from_edges(3 * n, edges).expect("simple by construction"))
}

/// Rose Window graph `R_n(a, r)`: rim `v_i = i`, hub `u_i = n + i`, edges
/// `v_i v_{i+1}`, `u_i u_{i+r}`, `u_i v_i`, `u_i v_{i+a}`.
pub fn rose_window(n: usize, a: usize, r: usize) -> Result<Graph, FamilyError> {
    at_least("rose-window", 3, n)?;
    if a == 0 || a >= n || r == 0 || r >= n {
        return Err(FamilyError::DegenerateParameters(format!("need 1 <= a, r < n, got n={n} a={a} r={r}")));
    }
    if 2 * r == n {
        return Err(FamilyError::DegenerateParameters(format!("r = n/2 = {r} doubles the hub edges")));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + r) % n));
        edges.push((n + i, i));
        edges.push((n + i, (i + a) % n));
    }
    Graph::from_edges(2 * n, edges).map_err(|e| FamilyError::DegenerateParameters(e.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sporadic {
    /// Quartic non-Cayley vertex-transitive nut graph of order 16.
    Tetracirculant16,
    /// Order-30 non-Cayley vertex-transitive nut graph with two edge orbits.
    Ncvt30,
    /// Order-12, degree-6 graphical regular representation.
    Grr12,
    /// Order-8 graph whose Fowler expansion at vertex 2 adds five edge orbits.
    Phi5D3,
}

impl Sporadic {
    pub const ALL: [Sporadic; 4] =
        [Sporadic::Tetracirculant16, Sporadic::Ncvt30, Sporadic::Grr12, Sporadic::Phi5D3];

    pub fn name(self) -> &'static str {
        match self {
            Sporadic::Tetracirculant16 => "tetracirculant16",
            Sporadic::Ncvt30 => "ncvt30",
            Sporadic::Grr12 => "grr12",
            Sporadic::Phi5D3 => "phi5_d3",
        }
    }
}

impl FromStr for Sporadic {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Sporadic::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| FamilyError::UnknownName(s.to_string()))
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The fixed sporadic graphs.
///
/// * `tetracirculant16`: `u_i = i`, `v_i = 4 + i`, `w_i = 8 + i`,
///   `z_i = 12 + i` for `i` in `Z4`.
/// * `ncvt30`: `u_i = i`, `v_i = 15 + i` for `i` in `Z15`.
/// * `grr12`: `u_i = i`, `v_i = 4 + i`, `w_i = 8 + i` for `i` in `Z4`.
/// * `phi5_d3`: labels as drawn.
pub fn sporadic(which: Sporadic) -> Graph {
    let mut edges = Vec::new();
    let n = match which {
        Sporadic::Tetracirculant16 => {
            let (u, v, w, z) = (|i: usize| i % 4, |i: usize| 4 + i % 4, |i: usize| 8 + i % 4, |i: usize| 12 + i % 4);
            for i in 0..4 {
                edges.extend([(u(i), v(i)), (v(i), w(i)), (u(i), z(i)), (u(i), u(i + 1)), (v(i), v(i + 1))]);
                edges.extend((1..4).map(|k| (z(i), w(i + k))));
            }
            16
        }
        Sporadic::Ncvt30 => {
            let (u, v) = (|i: usize| i % 15, |i: usize| 15 + i % 15);
            for i in 0..15 {
                edges.extend([(u(i), v(i)), (u(i), v(i + 5)), (v(i), v(i + 3)), (u(i), u(i + 6))]);
            }
            30
        }
        Sporadic::Grr12 => {
            for block in 0..3 {
                for i in 0..4 {
                    for j in i + 1..4 {
                        edges.push((4 * block + i, 4 * block + j));
                    }
                }
            }
            let (u, v, w) = (|i: usize| i, |i: usize| 4 + i, |i: usize| 8 + i);
            edges.extend([
                (v(0), u(2)),
                (v(1), u(3)),
                (v(2), u(0)),
                (v(2), u(2)),
                (v(3), u(1)),
                (v(3), u(3)),
                (u(3), w(2)),
                (u(2), w(3)),
                (u(1), w(0)),
                (u(1), w(2)),
                (u(0), w(1)),
                (u(0), w(3)),
                (v(3), w(1)),
                (v(2), w(0)),
                (v(1), w(3)),
                (v(1), w(1)),
                (v(0), w(2)),
                (v(0), w(0)),
            ]);
            12
        }
        Sporadic::Phi5D3 => {
            edges.extend([
                (0, 3),
                (0, 5),
                (0, 6),
                (1, 4),
                (1, 5),
                (1, 7),
                (2, 4),
                (2, 6),
                (2, 7),
                (3, 6),
                (3, 7),
                (4, 5),
                (4, 6),
                (4, 7),
                (6, 7),
            ]);
            8
        }
    };
    Graph::from_edges(n, edges).expect("fixture edge lists are simple")
}

/// Distinguished vertex of the `phi5_d3` fixture.
pub const PHI5_D3_VERTEX: usize = 2;

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    at_least("complete", 1, n)?;
    Ok(Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap())
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    at_least("cycle", 3, n)?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap())
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    at_least("path", 1, n)?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap())
}

/// Hypercube `Q_d`: vertices are bit strings, adjacent when they differ in
/// one bit.
pub fn hypercube(d: usize) -> Result<Graph, FamilyError> {
    at_least("hypercube", 1, d)?;
    if d > 20 {
        return Err(FamilyError::DegenerateParameters(format!("hypercube dimension {d} too large")));
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(|x| (0..d).map(move |b| (x, x ^ (1 << b)))).filter(|&(x, y)| x < y);
    Ok(Graph::from_edges(n, edges).unwrap())
}

/// `K_{m,m}` with sides `0..m` and `m..2m`.
pub fn complete_bipartite(m: usize) -> Result<Graph, FamilyError> {
    at_least("complete-bipartite", 1, m)?;
    Ok(Graph::from_edges(2 * m, (0..m).flat_map(|i| (m..2 * m).map(move |j| (i, j)))).unwrap())
}

/// A family name with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Circulant { n: usize, s: Vec<usize> },
    Antiprism { l: usize },
    C3CartCycle { l: usize },
    C3TwistCycle { l: usize },
    TriangleCycle { n: usize },
    RoseWindow { n: usize, a: usize, r: usize },
    Sporadic(Sporadic),
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Hypercube { d: usize },
    CompleteBipartite { m: usize },
}

impl FamilySpec {
    pub const NAMES: [&'static str; 11] = [
        "circulant",
        "antiprism",
        "c3-cart-cycle",
        "c3-twist-cycle",
        "triangle-cycle",
        "rose-window",
        "complete",
        "cycle",
        "path",
        "hypercube",
        "complete-bipartite",
    ];

    /// Parses a family name and its numeric parameters. Circulants take the
    /// order followed by the connection set; sporadic fixtures take none.
    pub fn parse(name: &str, params: &[usize]) -> Result<Self, FamilyError> {
        let arity = |family: &'static str, expected: &'static str, ok: bool| {
            if ok {
                Ok(())
            } else {
                Err(FamilyError::WrongArity { family, expected, got: params.len() })
            }
        };
        let one = |family: &'static str| arity(family, "1", params.len() == 1).map(|_| params[0]);
        Ok(match name {
            "circulant" => {
                arity("circulant", "at least 1", !params.is_empty())?;
                FamilySpec::Circulant { n: params[0], s: params[1..].to_vec() }
            }
            "antiprism" => FamilySpec::Antiprism { l: one("antiprism")? },
            "c3-cart-cycle" => FamilySpec::C3CartCycle { l: one("c3-cart-cycle")? },
            "c3-twist-cycle" => FamilySpec::C3TwistCycle { l: one("c3-twist-cycle")? },
            "triangle-cycle" => FamilySpec::TriangleCycle { n: one("triangle-cycle")? },
            "rose-window" => {
                arity("rose-window", "3", params.len() == 3)?;
                FamilySpec::RoseWindow { n: params[0], a: params[1], r: params[2] }
            }
            "complete" => FamilySpec::Complete { n: one("complete")? },
            "cycle" => FamilySpec::Cycle { n: one("cycle")? },
            "path" => FamilySpec::Path { n: one("path")? },
            "hypercube" => FamilySpec::Hypercube { d: one("hypercube")? },
            "complete-bipartite" => FamilySpec::CompleteBipartite { m: one("complete-bipartite")? },
            other => {
                let s: Sporadic = other.parse()?;
                arity("sporadic fixture", "0", params.is_empty())?;
                FamilySpec::Sporadic(s)
            }
        })
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Circulant { n, s } => circulant(*n, s),
            FamilySpec::Antiprism { l } => antiprism(*l),
            FamilySpec::C3CartCycle { l } => c3_cart_cycle(*l),
            FamilySpec::C3TwistCycle { l } => c3_twist_cycle(*l),
            FamilySpec::TriangleCycle { n } => triangle_cycle(*n),
            FamilySpec::RoseWindow { n, a, r } => rose_window(*n, *a, *r),
            FamilySpec::Sporadic(s) => Ok(sporadic(*s)),
            FamilySpec::Complete { n } => complete(*n),
            FamilySpec::Cycle { n } => cycle(*n),
            FamilySpec::Path { n } => path(*n),
            FamilySpec::Hypercube { d } => hypercube(*d),
            FamilySpec::CompleteBipartite { m } => complete_bipartite(*m),
        }
    }
}
