//! Nullity, nut and core classification, and kernel edge signatures.
//!
//! `K1` is deliberately classified as neither nut nor core, even though its
//! 1x1 zero matrix has a full kernel vector. Other software sometimes
//! counts it as the trivial nut graph.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::linalg::{adjacency_matrix, kernel_basis, primitive, IntegerVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NutError {
    #[error("kernel vector has {got} entries for a graph of order {order}")]
    LengthMismatch { order: usize, got: usize },
    #[error("vector violates the local condition at vertex {0}")]
    NotInKernel(usize),
    #[error("vector entry at vertex {0} is zero")]
    NotFullVector(usize),
    #[error("zero vector")]
    ZeroVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullityReport {
    pub eta: usize,
    pub basis: Vec<IntegerVector>,
}

/// A nonzero kernel vector in canonical form: primitive, with its first
/// nonzero entry positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KernelVector(IntegerVector);

impl KernelVector {
    /// Normalises `entries` and checks that it lies in the kernel of `g`.
    pub fn new(g: &Graph, entries: IntegerVector) -> Result<Self, NutError> {
        if entries.len() != g.order() {
            return Err(NutError::LengthMismatch { order: g.order(), got: entries.len() });
        }
        if entries.iter().all(Zero::is_zero) {
            return Err(NutError::ZeroVector);
        }
        if let Some(v) = first_local_violation(g, &entries) {
            return Err(NutError::NotInKernel(v));
        }
        Ok(KernelVector(primitive(entries)))
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.0.iter().all(|x| !x.is_zero())
    }

    pub fn sign(&self, v: usize) -> Option<Sign> {
        Sign::of(&self.0[v])
    }

    pub fn into_inner(self) -> IntegerVector {
        self.0
    }
}

/// First vertex whose neighbours' entries do not sum to zero.
pub fn first_local_violation(g: &Graph, x: &[BigInt]) -> Option<usize> {
    (0..g.order()).find(|&v| !g.neighbours(v).iter().map(|&u| &x[u]).sum::<BigInt>().is_zero())
}

pub fn nullity(g: &Graph) -> NullityReport {
    let basis = kernel_basis(&adjacency_matrix(g));
    NullityReport { eta: basis.len(), basis }
}

/// Nut test. Returns the canonical kernel vector when `g` is a nut graph.
pub fn is_nut(g: &Graph) -> Option<KernelVector> {
    nut_witness(g, &nullity(g))
}

/// Nut test on a precomputed nullity report.
pub fn nut_witness(g: &Graph, report: &NullityReport) -> Option<KernelVector> {
    if g.order() <= 1 || report.eta != 1 {
        return None;
    }
    let x = &report.basis[0];
    x.iter().all(|e| !e.is_zero()).then(|| KernelVector(x.clone()))
}

/// Core test. Returns a full kernel vector when one exists.
pub fn is_core(g: &Graph) -> Option<KernelVector> {
    core_witness(g, &nullity(g))
}

/// Builds a full combination of the basis: `w <- lambda * w + b` with the
/// least positive integer `lambda` that cancels no coordinate.
pub fn core_witness(g: &Graph, report: &NullityReport) -> Option<KernelVector> {
    if g.order() <= 1 || report.eta == 0 {
        return None;
    }
    let mut w = report.basis[0].clone();
    for b in &report.basis[1..] {
        let mut forbidden: Vec<BigInt> = w
            .iter()
            .zip(b)
            .filter(|(wi, bi)| !wi.is_zero() && (*bi % *wi).is_zero())
            .map(|(wi, bi)| -(bi / wi))
            .filter(|l| l.is_positive())
            .collect();
        forbidden.sort();
        forbidden.dedup();
        let mut lambda = BigInt::from(1);
        for f in &forbidden {
            if *f == lambda {
                lambda += 1;
            } else if *f > lambda {
                break;
            }
        }
        w = w.iter().zip(b).map(|(wi, bi)| &lambda * wi + bi).collect();
    }
    w.iter().all(|e| !e.is_zero()).then(|| KernelVector(primitive(w)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn of(x: &BigInt) -> Option<Sign> {
        if x.is_positive() {
            Some(Sign::Positive)
        } else if x.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    Like,
    Unlike,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeSignature {
    pub edge: Edge,
    pub signs: (Sign, Sign),
    pub class: EdgeClass,
}

/// Per-edge sign pairs, in the order of [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSignatureTable {
    pub signatures: Vec<EdgeSignature>,
}

impl EdgeSignatureTable {
    pub fn count(&self, class: EdgeClass) -> usize {
        self.signatures.iter().filter(|s| s.class == class).count()
    }
}

pub fn edge_signatures(g: &Graph, x: &KernelVector) -> Result<EdgeSignatureTable, NutError> {
    if x.len() != g.order() {
        return Err(NutError::LengthMismatch { order: g.order(), got: x.len() });
    }
    if let Some(v) = x.entries().iter().position(Zero::is_zero) {
        return Err(NutError::NotFullVector(v));
    }
    let signatures = g
        .edges()
        .iter()
        .map(|&edge| {
            let (a, b) = edge.endpoints();
            let signs = (x.sign(a).unwrap(), x.sign(b).unwrap());
            let class = if signs.0 == signs.1 { EdgeClass::Like } else { EdgeClass::Unlike };
            EdgeSignature { edge, signs, class }
        })
        .collect();
    Ok(EdgeSignatureTable { signatures })
}
