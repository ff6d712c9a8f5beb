use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::{Coefficient, ContinuumError, DiffPoly};

/// A dense matrix of differential operators over one set of symbols.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiffOpMatrix<T> {
    d: usize,
    rows: usize,
    cols: usize,
    entries: Vec<DiffPoly<T>>,
}

impl<T: Coefficient> DiffOpMatrix<T> {
    #[must_use]
    pub fn zeros(d: usize, rows: usize, cols: usize) -> Self {
        DiffOpMatrix {
            d,
            rows,
            cols,
            entries: vec![DiffPoly::zero(d); rows * cols],
        }
    }

    #[must_use]
    pub fn identity(d: usize, n: usize) -> Self {
        let mut m = Self::zeros(d, n, n);
        for i in 0..n {
            m.set(i, i, DiffPoly::constant(d, T::one()));
        }
        m
    }

    pub fn from_rows(d: usize, rows: Vec<Vec<DiffPoly<T>>>) -> Result<Self, ContinuumError> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(ContinuumError::Shape(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            for p in row {
                if p.num_vars() != d {
                    return Err(ContinuumError::Shape(format!(
                        "entry in {} symbols, expected {d}",
                        p.num_vars()
                    )));
                }
                entries.push(p);
            }
        }
        Ok(DiffOpMatrix {
            d,
            rows: nrows,
            cols,
            entries,
        })
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.d
    }

    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> &DiffPoly<T> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: DiffPoly<T>) {
        assert_eq!(p.num_vars(), self.d, "entry in the wrong symbol count");
        self.entries[i * self.cols + j] = p;
    }

    #[must_use]
    pub fn row(&self, i: usize) -> Vec<DiffPoly<T>> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    /// Rows `range` as a new matrix.
    #[must_use]
    pub fn row_block(&self, start: usize, end: usize) -> Self {
        DiffOpMatrix {
            d: self.d,
            rows: end - start,
            cols: self.cols,
            entries: self.entries[start * self.cols..end * self.cols].to_vec(),
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(DiffPoly::is_zero)
    }

    /// First nonzero entry in row-major order.
    #[must_use]
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        let k = self.entries.iter().position(|p| !p.is_zero())?;
        Some((k / self.cols, k % self.cols))
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.d, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Transpose with every entry replaced by its adjoint.
    #[must_use]
    pub fn formal_adjoint(&self) -> Self {
        let mut t = self.transpose();
        for p in &mut t.entries {
            *p = p.adjoint();
        }
        t
    }

    fn same_shape(&self, other: &Self) -> Result<(), ContinuumError> {
        if (self.rows, self.cols, self.d) == (other.rows, other.cols, other.d) {
            Ok(())
        } else {
            Err(ContinuumError::Shape(format!(
                "{}x{} versus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ContinuumError> {
        self.same_shape(other)?;
        Ok(DiffOpMatrix {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ContinuumError> {
        self.same_shape(other)?;
        Ok(DiffOpMatrix {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
            ..self.clone()
        })
    }

    #[must_use]
    pub fn scale(&self, c: &T) -> Self {
        DiffOpMatrix {
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ContinuumError> {
        if self.cols != other.rows || self.d != other.d {
            return Err(ContinuumError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.d, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = DiffPoly::zero(self.d);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn map_coeffs<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> DiffOpMatrix<U> {
        DiffOpMatrix {
            d: self.d,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.map_coeffs(&f)).collect(),
        }
    }

    /// Machine form: each entry is a map from the comma-joined multi-index
    /// to its coefficient.
    #[must_use]
    pub fn to_json(&self) -> Value
    where
        T: Serialize,
    {
        let entries: Vec<Vec<Value>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let map: serde_json::Map<String, Value> = self
                            .get(i, j)
                            .terms()
                            .map(|(k, v)| {
                                let key = k.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                                (key, serde_json::to_value(v).expect("coefficient serializes"))
                            })
                            .collect();
                        Value::Object(map)
                    })
                    .collect()
            })
            .collect();
        json!({
            "symbols": self.d,
            "rows": self.rows,
            "cols": self.cols,
            "entries": entries,
        })
    }
}

impl<T: Coefficient> fmt::Display for DiffOpMatrix<T> {
    /// One bracketed row per line with columns padded to a common width.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| cells[i * self.cols + j].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            f.write_str("[ ")?;
            for j in 0..self.cols {
                let c = &cells[i * self.cols + j];
                if j > 0 {
                    f.write_str(" | ")?;
                }
                let pad = widths[j] - c.chars().count();
                write!(f, "{c}{}", " ".repeat(pad))?;
            }
            f.write_str(" ]")?;
        }
        Ok(())
    }
}

impl<T: Coefficient> fmt::Debug for DiffOpMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOpMatrix[\n{self}\n]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = DiffPoly<i64>;

    #[test]
    fn adjoint_of_one_by_one() {
        let m = DiffOpMatrix::from_rows(3, vec![vec![Z::partial(3, 0)]]).unwrap();
        assert_eq!(m.formal_adjoint().get(0, 0), &-&Z::partial(3, 0));
        let mm = DiffOpMatrix::from_rows(3, vec![vec![&Z::partial(3, 0) * &Z::partial(3, 1)]]).unwrap();
        assert_eq!(mm.formal_adjoint(), mm);
    }

    #[test]
    fn json_keys_are_multi_indices() {
        let m = DiffOpMatrix::from_rows(3, vec![vec![Z::partial(3, 2).scale(&-1), Z::zero(3)]]).unwrap();
        assert_eq!(
            m.to_json().to_string(),
            r#"{"cols":2,"entries":[[{"0,0,1":-1},{}]],"rows":1,"symbols":3}"#
        );
    }

    #[test]
    fn padded_display() {
        let m = DiffOpMatrix::from_rows(
            3,
            vec![vec![Z::partial(3, 0), Z::zero(3)], vec![Z::zero(3), Z::partial_111()]],
        )
        .unwrap();
        assert_eq!(m.to_string(), "[ ∂₁ | 0            ]\n[ 0  | ∂₁ + ∂₂ + ∂₃ ]");
    }
}
