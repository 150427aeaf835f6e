//! Skew-adjacency matrices of a bouquet and the determinant kernels used on
//! their principal submatrices.
//!
//! Rows and columns are 0-based here: row `i` belongs to loop `i + 1`.
//! Subsets passed to the determinant kernels are [`EdgeSubset`]s, whose bit
//! `i` is loop `i + 1`, so bit positions and row indices coincide.

mod gf2;
mod integer;
mod symbolic;

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::rotation::{Bouquet, Interlacement, LoopKind};
use crate::subset::EdgeSubset;

pub use gf2::{det_gf2, pivot_gf2};
pub use integer::{det_int, det_int_dense, det_identity_plus, DetBackend};
pub use symbolic::{det_symbolic, Monomial, SymbolicPolynomial, Var, DEFAULT_SYMBOLIC_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("pivot block is singular over GF(2)")]
    SingularPivotBlock,
    #[error("integer determinant overflowed the 128-bit backend")]
    Overflow,
    #[error("symbolic determinant of size {size} exceeds the cap of {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("subset {subset} is not contained in [{n}]")]
    SubsetOutOfRange { subset: EdgeSubset, n: usize },
    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),
}

pub(crate) fn check_subset(x: EdgeSubset, n: usize) -> Result<(), MatrixError> {
    if x.fits(n) {
        Ok(())
    } else {
        Err(MatrixError::SubsetOutOfRange { subset: x, n })
    }
}

/// An entry of the symbolic matrix: zero or `±x_{ij}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymEntry {
    Zero,
    Var { negated: bool, var: Var },
}

/// `A^s`: off-diagonal `±x_{ij}` for interlaced loops, `x_{ii}` on the
/// diagonal for twisted loops. Only signs are stored; the variable of entry
/// `(i, j)` is always `x_{min, max}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicSkewMatrix {
    n: usize,
    signs: Vec<i8>,
}

impl SymbolicSkewMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> SymEntry {
        match self.signs[i * self.n + j] {
            0 => SymEntry::Zero,
            s => SymEntry::Var {
                negated: s < 0,
                var: Var::new(i.min(j) + 1, i.max(j) + 1),
            },
        }
    }

    /// Substitutes 1 for every variable.
    pub fn unsymbolic(&self) -> IntegerSkewMatrix {
        IntegerSkewMatrix { n: self.n, entries: self.signs.clone() }
    }
}

/// `A^u`: entries in `{-1, 0, 1}`, skew off the diagonal, `{0, 1}` on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSkewMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl IntegerSkewMatrix {
    pub fn zero(n: usize) -> Self {
        IntegerSkewMatrix { n, entries: vec![0; n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    /// Overwrites one entry without restoring skew-symmetry.
    pub fn set_unchecked(&mut self, i: usize, j: usize, v: i8) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.iter().map(|&v| v as i64).collect()).collect()
    }

    /// Entrywise absolute value, as a GF(2) matrix.
    pub fn to_binary(&self) -> BinaryMatrix {
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n).fold(0u64, |acc, j| acc | ((self.get(i, j) != 0) as u64) << j)
            })
            .collect();
        BinaryMatrix { n: self.n, rows }
    }

    pub fn is_skew_off_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == -self.get(j, i)))
    }
}

/// A square matrix over GF(2); row `i` is a 64-bit word with column `j` at
/// bit `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    n: usize,
    rows: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n <= 64, "binary matrices are limited to 64 columns");
        BinaryMatrix { n, rows: vec![0; n] }
    }

    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let mut m = BinaryMatrix::zero(rows.len());
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), rows.len(), "matrix must be square");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v & 1 == 1);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        if v {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn row_bits(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// The principal submatrix on `x`, rows and columns renumbered in
    /// increasing order.
    pub fn principal(&self, x: EdgeSubset) -> BinaryMatrix {
        let idx: Vec<usize> = x.indices().map(|i| i - 1).collect();
        let mut out = BinaryMatrix::zero(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) as u8).collect::<Vec<_>>()))
            .finish()
    }
}

pub fn symbolic_skew_adjacency(b: &Bouquet) -> SymbolicSkewMatrix {
    let n = b.n();
    let mut signs = vec![0i8; n * n];
    for i in 0..n {
        if b.loop_kind(i + 1) == LoopKind::NonOrientable {
            signs[i * n + i] = 1;
        }
        for j in i + 1..n {
            let s = match b.interlace(i + 1, j + 1) {
                Interlacement::Aligned => 1,
                Interlacement::Reversed => -1,
                Interlacement::NonInterlaced => 0,
            };
            signs[i * n + j] = s;
            signs[j * n + i] = -s;
        }
    }
    SymbolicSkewMatrix { n, signs }
}

pub fn unsymbolic(s: &SymbolicSkewMatrix) -> IntegerSkewMatrix {
    s.unsymbolic()
}

pub fn unsymbolic_skew_adjacency(b: &Bouquet) -> IntegerSkewMatrix {
    symbolic_skew_adjacency(b).unsymbolic()
}

/// `M`, the adjacency matrix of the signed intersection graph.
pub fn adjacency(b: &Bouquet) -> BinaryMatrix {
    unsymbolic_skew_adjacency(b).to_binary()
}

fn render_grid(cells: Vec<Vec<String>>) -> String {
    let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for row in &cells {
        out.push('[');
        for (k, c) in row.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            out.push_str(&format!("{c:>width$}"));
        }
        out.push_str("]\n");
    }
    if cells.is_empty() {
        out.push_str("[]\n");
    }
    out
}

impl fmt::Display for SymEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymEntry::Zero => f.write_str("0"),
            SymEntry::Var { negated, var } => {
                if *negated {
                    f.write_str("-")?;
                }
                write!(f, "{var}")
            }
        }
    }
}

impl fmt::Display for SymbolicSkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        f.write_str(&render_grid(cells))
    }
}

impl fmt::Display for IntegerSkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        f.write_str(&render_grid(cells))
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = (0..self.n)
            .map(|i| (0..self.n).map(|j| (self.get(i, j) as u8).to_string()).collect())
            .collect();
        f.write_str(&render_grid(cells))
    }
}

impl SymbolicSkewMatrix {
    /// Row-major array of entry strings.
    pub fn to_json(&self) -> Value {
        json!((0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

impl IntegerSkewMatrix {
    pub fn to_json(&self) -> Value {
        json!(self.rows())
    }
}

impl BinaryMatrix {
    pub fn to_json(&self) -> Value {
        json!((0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) as u8).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}
