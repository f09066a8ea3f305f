//! Tools for nut graphs: graphs whose adjacency matrix has a
//! one-dimensional kernel spanned by a vector with no zero entry.
//!
//! The crate covers exact nullity and kernel computation, full
//! automorphism groups with vertex and edge orbits, the named graph
//! families and constructions that produce nut graphs with few orbits, and
//! executable checks of the structural results relating orbit counts.

pub mod graph;
pub mod linalg;
pub mod nut;
pub mod symmetry;
pub mod families;
pub mod constructions;
pub mod enumerate;
pub mod verify;
