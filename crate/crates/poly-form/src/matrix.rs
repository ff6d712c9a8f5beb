use std::fmt;

use crate::{LaurentPoly, PolyError};

/// A dense matrix of Laurent polynomials sharing one variable count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    d: usize,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    #[must_use]
    pub fn zeros(d: usize, rows: usize, cols: usize) -> Self {
        LaurentMatrix {
            d,
            rows,
            cols,
            entries: vec![LaurentPoly::zero(d); rows * cols],
        }
    }

    /// Builds from row-major rows. Fails on ragged input or mixed variable
    /// counts.
    pub fn from_rows(d: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self, PolyError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(PolyError::Shape(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            for p in row {
                if p.num_vars() != d {
                    return Err(PolyError::Shape(format!(
                        "entry in {} variables, expected {d}",
                        p.num_vars()
                    )));
                }
                entries.push(p);
            }
        }
        Ok(LaurentMatrix {
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
    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        assert_eq!(p.num_vars(), self.d);
        self.entries[i * self.cols + j] = p;
    }

    #[must_use]
    pub fn column(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    /// First nonzero entry in row-major order.
    #[must_use]
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        let k = self.entries.iter().position(|p| !p.is_zero())?;
        Some((k / self.cols, k % self.cols))
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut t = LaurentMatrix::zeros(self.d, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Entrywise antipode.
    #[must_use]
    pub fn antipode(&self) -> Self {
        LaurentMatrix {
            entries: self.entries.iter().map(LaurentPoly::antipode).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &LaurentMatrix) -> Result<LaurentMatrix, PolyError> {
        if self.cols != other.rows || self.d != other.d {
            return Err(PolyError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = LaurentMatrix::zeros(self.d, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentPoly::zero(self.d);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Parses rows separated by newlines or `;`, entries separated by `,`.
    pub fn parse(text: &str, d: usize) -> Result<Self, PolyError> {
        let rows = text
            .split(['\n', ';'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| r.split(',').map(|e| LaurentPoly::parse(e, d)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        LaurentMatrix::from_rows(d, rows)
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentMatrix[\n{self}\n]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let m = LaurentMatrix::parse("1+x~, 0; 1+y~, 0\n0, 1+y\n0, 1+x", 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 2));
        assert_eq!(LaurentMatrix::parse(&m.to_string(), 2).unwrap(), m);
        assert!(LaurentMatrix::parse("1, 0; 1", 2).is_err());
    }

    #[test]
    fn product_and_transpose() {
        let a = LaurentMatrix::parse("1+x, y", 2).unwrap();
        let b = a.transpose();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.get(0, 0).to_string(), "1+y^2+x^2");
        assert!(b.mul(&b).is_err());
    }
}
