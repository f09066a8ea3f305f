//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers with
//! fraction-free (Bareiss) elimination. There is no floating point: the
//! whole point of the crate is telling nullity 1 from nullity 2.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix data has {got} entries, expected {rows}x{cols}")]
    BadShape { rows: usize, cols: usize, got: usize },
    #[error("cyclic corner determinant needs a square matrix of odd order >= 3, got {rows}x{cols}")]
    ShapeViolation { rows: usize, cols: usize },
    #[error("entry ({row}, {col}) is nonzero but lies off the cyclic band")]
    OffPattern { row: usize, col: usize },
    #[error("determinant of a non-square {rows}x{cols} matrix")]
    NotSquare { rows: usize, cols: usize },
}

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

/// Integer vector, used for kernel basis elements.
pub type IntegerVector = Vec<BigInt>;

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let entries: Vec<BigInt> = rows.iter().flat_map(|row| row.iter().cloned().map(Into::into)).collect();
        Self::new(r, c, entries)
    }

    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::BadShape { rows, cols, got: entries.len() });
        }
        Ok(IntegerMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Exact product `self * v`.
    pub fn mul_vector(&self, v: &[BigInt]) -> IntegerVector {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}

/// The 0/1 adjacency matrix.
pub fn adjacency_matrix(g: &Graph) -> IntegerMatrix {
    let n = g.order();
    let mut m = IntegerMatrix::zeros(n, n);
    for e in g.edges() {
        let (a, b) = e.endpoints();
        m.set(a, b, BigInt::one());
        m.set(b, a, BigInt::one());
    }
    m
}

/// Result of fraction-free Gauss-Jordan elimination: the rows
/// `0..pivots.len()` hold `d * RREF` where `d` is the final pivot value.
struct Reduced {
    data: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    swaps: usize,
}

/// Fraction-free Gauss-Jordan elimination. The pivot in each column is
/// the nonzero candidate of least absolute value, lowest row on ties.
fn reduce(m: &IntegerMatrix) -> Reduced {
    let (rows, cols) = (m.rows, m.cols);
    let mut data: Vec<Vec<BigInt>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let mut best: Option<usize> = None;
        for r in rank..rows {
            let x = &data[r][c];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|b| x.abs() < data[b][c].abs()) {
                best = Some(r);
            }
        }
        let Some(p) = best else { continue };
        if p != rank {
            data.swap(p, rank);
            swaps += 1;
        }
        let pivot_row = std::mem::take(&mut data[rank]);
        let pivot = pivot_row[c].clone();
        for (r, row) in data.iter_mut().enumerate() {
            if r == rank {
                continue;
            }
            let factor = row[c].clone();
            // Rows above the pivot carry nonzero entries left of `c` too.
            let start = if r < rank { 0 } else { c };
            if factor.is_zero() {
                if pivot != prev {
                    for x in row.iter_mut().skip(start) {
                        if !x.is_zero() {
                            *x = &*x * &pivot / &prev;
                        }
                    }
                }
                continue;
            }
            for j in start..cols {
                let updated = &row[j] * &pivot - &factor * &pivot_row[j];
                row[j] = updated / &prev;
            }
        }
        // Every earlier pivot entry now equals the current pivot value.
        data[rank] = pivot_row;
        prev = pivot;
        pivots.push(c);
        rank += 1;
    }
    Reduced { data, pivots, swaps }
}

/// Exact rank over the rationals.
pub fn rank(m: &IntegerMatrix) -> usize {
    reduce(m).pivots.len()
}

/// Exact determinant via fraction-free elimination.
pub fn determinant(m: &IntegerMatrix) -> Result<BigInt, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    if m.rows == 0 {
        return Ok(BigInt::one());
    }
    let red = reduce(m);
    if red.pivots.len() < m.rows {
        return Ok(BigInt::zero());
    }
    let d = red.data[m.rows - 1][m.cols - 1].clone();
    Ok(if red.swaps % 2 == 1 { -d } else { d })
}

/// Divides by the gcd of the entries and makes the first nonzero entry
/// positive. The zero vector is returned unchanged.
pub fn primitive(mut v: IntegerVector) -> IntegerVector {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let negate = v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative);
    for x in v.iter_mut() {
        *x = &*x / &g;
        if negate {
            *x = -&*x;
        }
    }
    v
}

/// Basis of the rational nullspace in canonical form.
///
/// Each vector is primitive with its first nonzero entry positive, and the
/// list is sorted by the position of that leading entry (then
/// lexicographically, for determinism).
pub fn kernel_basis(m: &IntegerMatrix) -> Vec<IntegerVector> {
    let red = reduce(m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &c in &red.pivots {
        is_pivot[c] = true;
    }
    let scale = red
        .pivots
        .last()
        .map_or_else(BigInt::one, |&c| red.data[red.pivots.len() - 1][c].clone());
    let mut basis: Vec<IntegerVector> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigInt::zero(); cols];
            v[f] = scale.clone();
            for (r, &c) in red.pivots.iter().enumerate() {
                v[c] = -red.data[r][f].clone();
            }
            primitive(v)
        })
        .collect();
    basis.sort_by(|a, b| {
        let lead = |v: &IntegerVector| v.iter().position(|x| !x.is_zero());
        lead(a).cmp(&lead(b)).then_with(|| a.cmp(b))
    });
    basis
}

/// Determinant of an odd-order matrix supported on the cyclic band
/// (`|i - j| = 1` plus the two corners): the sum of the two cyclic
/// permutation products.
pub fn cyclic_corner_determinant(m: &IntegerMatrix) -> Result<BigInt, LinalgError> {
    let n = m.rows;
    if n != m.cols || n < 3 || n.is_multiple_of(2) {
        return Err(LinalgError::ShapeViolation { rows: m.rows, cols: m.cols });
    }
    for i in 0..n {
        for j in 0..n {
            let allowed = i.abs_diff(j) == 1 || (i, j) == (0, n - 1) || (i, j) == (n - 1, 0);
            if !allowed && !m.get(i, j).is_zero() {
                return Err(LinalgError::OffPattern { row: i, col: j });
            }
        }
    }
    let lower: BigInt = (1..n).map(|i| m.get(i, i - 1)).product::<BigInt>() * m.get(0, n - 1);
    let upper: BigInt = (0..n - 1).map(|i| m.get(i, i + 1)).product::<BigInt>() * m.get(n - 1, 0);
    Ok(lower + upper)
}
