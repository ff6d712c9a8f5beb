use std::fmt;
use std::str::FromStr;

use crate::{BitVec, LinalgError};

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    cols: usize,
    data: Vec<BitVec>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: F2Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    #[must_use]
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows, i.e. the canonical row-space basis.
    #[must_use]
    pub fn into_basis(self) -> Vec<BitVec> {
        let r = self.pivots.len();
        let mut rows = self.matrix.data;
        rows.truncate(r);
        rows
    }
}

/// Outcome of `solve`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// Some `x` with `M x = b`.
    Solved(BitVec),
    /// No solution; `certificate` satisfies `c^T M = 0` and `c^T b = 1`.
    Inconsistent { certificate: BitVec },
}

impl Solution {
    #[must_use]
    pub fn ok(self) -> Option<BitVec> {
        match self {
            Solution::Solved(x) => Some(x),
            Solution::Inconsistent { .. } => None,
        }
    }
}

/// Full Gauss-Jordan elimination on `rows`, choosing pivots only among the
/// first `limit` columns. Returns pivot columns; pivot rows end up on top.
fn eliminate(rows: &mut [BitVec], limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("pivot row exists");
        for row in head.iter_mut().chain(rest.iter_mut()) {
            if row.get(c) {
                row.xor_assign(pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl F2Matrix {
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix {
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        F2Matrix {
            cols: n,
            data: (0..n).map(|i| BitVec::unit(n, i)).collect(),
        }
    }

    /// Builds a matrix from rows, checking that all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self, LinalgError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::LengthMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(F2Matrix { cols, data: rows })
    }

    pub(crate) fn from_rows_unchecked(cols: usize, rows: Vec<BitVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        F2Matrix { cols, data: rows }
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[BitVec]) -> Result<Self, LinalgError> {
        F2Matrix::from_rows(rows, columns.to_vec()).map(|m| m.transpose())
    }

    #[inline]
    #[must_use]
    pub fn rows(&self) -> usize {
        self.data.len()
    }

    #[inline]
    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn row(&self, i: usize) -> &BitVec {
        &self.data[i]
    }

    #[must_use]
    pub fn row_vecs(&self) -> &[BitVec] {
        &self.data
    }

    #[must_use]
    pub fn into_rows(self) -> Vec<BitVec> {
        self.data
    }

    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    #[must_use]
    pub fn column(&self, j: usize) -> BitVec {
        BitVec::from_indices(
            self.rows(),
            (0..self.rows()).filter(|&i| self.data[i].get(j)),
        )
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    #[must_use]
    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows());
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter_ones() {
                t.data[j].set(i, true);
            }
        }
        t
    }

    /// `M x` for a column vector `x` of length `cols`.
    #[must_use]
    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols, "vector length must equal column count");
        BitVec::from_indices(
            self.rows(),
            self.data
                .iter()
                .enumerate()
                .filter(|(_, r)| r.dot(x))
                .map(|(i, _)| i),
        )
    }

    /// `x^T M` for a vector `x` of length `rows`.
    #[must_use]
    pub fn left_mul(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.rows(), "vector length must equal row count");
        let mut acc = BitVec::zeros(self.cols);
        for i in x.iter_ones() {
            acc.xor_assign(&self.data[i]);
        }
        acc
    }

    /// Matrix product `self * other`.
    #[must_use]
    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows(), "inner dimensions differ");
        F2Matrix {
            cols: other.cols,
            data: self.data.iter().map(|r| other.left_mul(r)).collect(),
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &F2Matrix) -> Result<F2Matrix, LinalgError> {
        if self.cols != below.cols {
            return Err(LinalgError::LengthMismatch {
                expected: self.cols,
                found: below.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(F2Matrix {
            cols: self.cols,
            data,
        })
    }

    /// Keeps only the listed columns, in the given order.
    #[must_use]
    pub fn select_columns(&self, cols: &[usize]) -> F2Matrix {
        F2Matrix {
            cols: cols.len(),
            data: self
                .data
                .iter()
                .map(|r| BitVec::from_indices(cols.len(), (0..cols.len()).filter(|&k| r.get(cols[k]))))
                .collect(),
        }
    }

    #[must_use]
    pub fn rref(&self) -> Rref {
        let mut rows = self.data.clone();
        let pivots = eliminate(&mut rows, self.cols);
        Rref {
            matrix: F2Matrix {
                cols: self.cols,
                data: rows,
            },
            pivots,
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Canonical basis of `{x : M x = 0}`, one vector per free column in
    /// increasing order.
    #[must_use]
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVec::unit(self.cols, f);
                for (i, &p) in rref.pivots.iter().enumerate() {
                    if rref.matrix.data[i].get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Solves `M x = b`. Free variables are set to zero.
    pub fn solve(&self, b: &BitVec) -> Result<Solution, LinalgError> {
        let m = self.rows();
        if b.len() != m {
            return Err(LinalgError::LengthMismatch {
                expected: m,
                found: b.len(),
            });
        }
        // Each augmented row is [M_i | b_i | e_i]; the e-part records the row
        // combination so that a contradictory row doubles as the certificate.
        let width = self.cols + 1 + m;
        let mut rows: Vec<BitVec> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = BitVec::zeros(width);
                for j in r.iter_ones() {
                    v.set(j, true);
                }
                v.set(self.cols, b.get(i));
                v.set(self.cols + 1 + i, true);
                v
            })
            .collect();
        let pivots = eliminate(&mut rows, self.cols);
        if let Some(bad) = rows[pivots.len()..].iter().find(|r| r.get(self.cols)) {
            return Ok(Solution::Inconsistent {
                certificate: bad.slice(self.cols + 1, width),
            });
        }
        let mut x = BitVec::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x.set(p, rows[i].get(self.cols));
        }
        Ok(Solution::Solved(x))
    }
}

impl fmt::Display for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{} [", self.rows(), self.cols)?;
        for r in &self.data {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for F2Matrix {
    type Err = LinalgError;

    /// Rows separated by whitespace or `;`, e.g. `"110 011 101"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = s
            .split(|c: char| c.is_whitespace() || c == ';')
            .filter(|t| !t.is_empty())
            .map(str::parse::<BitVec>)
            .collect::<Result<Vec<_>, _>>()?;
        let cols = rows.first().map_or(0, BitVec::len);
        F2Matrix::from_rows(cols, rows)
    }
}
