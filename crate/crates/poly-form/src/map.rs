use code_factory::{Boundary, Family, Stabilizer, StabilizerCode};
use f2_linalg::BitVec;
use pauli_space::{Layout, PauliOperator};

use crate::{LaurentMatrix, LaurentPoly, PolyError};

/// A translation-invariant stabilizer code as a `2n x m` matrix. Column `j`
/// is stabilizer type `j`; row `r < n` is `X` on slot `r`, row `n + r` is `Z`
/// on slot `r`. A term `e^a` in an entry places the factor at `anchor + a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerMap {
    name: String,
    n: usize,
    labels: Vec<String>,
    matrix: LaurentMatrix,
}

impl StabilizerMap {
    pub fn new(
        name: impl Into<String>,
        n: usize,
        labels: Vec<String>,
        matrix: LaurentMatrix,
    ) -> Result<Self, PolyError> {
        if matrix.rows() != 2 * n {
            return Err(PolyError::Shape(format!(
                "{} rows for {n} qubits per site",
                matrix.rows()
            )));
        }
        if labels.len() != matrix.cols() {
            return Err(PolyError::Shape(format!(
                "{} labels for {} columns",
                labels.len(),
                matrix.cols()
            )));
        }
        if let Some(j) = (0..matrix.cols()).find(|&j| matrix.column(j).iter().all(LaurentPoly::is_zero)) {
            return Err(PolyError::ZeroColumn(j));
        }
        Ok(StabilizerMap {
            name: name.into(),
            n,
            labels,
            matrix,
        })
    }

    /// Parses the matrix text form with labels `t0, t1, ...`.
    pub fn parse(name: &str, d: usize, n: usize, text: &str) -> Result<Self, PolyError> {
        let matrix = LaurentMatrix::parse(text, d)?;
        let labels = (0..matrix.cols()).map(|j| format!("t{j}")).collect();
        StabilizerMap::new(name, n, labels, matrix)
    }

    #[must_use]
    pub fn name(&self) -> &str {
        &self.name
    }

    #[must_use]
    pub fn qubits_per_site(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn num_types(&self) -> usize {
        self.matrix.cols()
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.matrix.num_vars()
    }

    #[must_use]
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[must_use]
    pub fn matrix(&self) -> &LaurentMatrix {
        &self.matrix
    }

    /// `m x 2n` matrix whose product with the stabilizer map lists, for each
    /// pair of types, the relative translations at which they anticommute:
    /// the antipode-transpose of the map with its x and z blocks swapped.
    #[must_use]
    pub fn excitation_map(&self) -> LaurentMatrix {
        let m = &self.matrix;
        let mut e = LaurentMatrix::zeros(m.num_vars(), m.cols(), m.rows());
        for i in 0..m.cols() {
            for r in 0..m.rows() {
                let swapped = (r + self.n) % (2 * self.n);
                e.set(i, r, m.get(swapped, i).antipode());
            }
        }
        e
    }

    /// Checks `excitation_map * M = 0`; on failure returns the first
    /// nonzero entry `(i, j, p)`.
    pub fn check_commutation(&self) -> Result<(), (usize, usize, LaurentPoly)> {
        let prod = self
            .excitation_map()
            .mul(&self.matrix)
            .expect("shapes agree by construction");
        match prod.first_nonzero() {
            None => Ok(()),
            Some((i, j)) => Err((i, j, prod.get(i, j).clone())),
        }
    }

    /// Expands every type over all `L^d` translations, reducing exponents
    /// mod `L`. Stabilizers come type-major, then by anchor in row-major
    /// order.
    pub fn instantiate(&self, l: usize) -> Result<StabilizerCode, PolyError> {
        if l < 2 {
            return Err(code_factory::CodeError::SizeTooSmall(l).into());
        }
        let d = self.num_vars();
        let layout = Layout::new(d, l, self.n);
        let nq = layout.num_qubits();
        let mut stabilizers = Vec::with_capacity(self.num_types() * layout.num_sites());
        for j in 0..self.num_types() {
            for anchor in layout.sites() {
                let a: Vec<i64> = anchor.iter().map(|&c| c as i64).collect();
                let mut x = BitVec::zeros(nq);
                let mut z = BitVec::zeros(nq);
                for r in 0..2 * self.n {
                    let part = if r < self.n { &mut x } else { &mut z };
                    for t in self.matrix.get(r, j).terms() {
                        let site: Vec<i64> = a.iter().zip(t).map(|(p, q)| p + q).collect();
                        part.flip(layout.qubit(&site, r % self.n));
                    }
                }
                stabilizers.push(Stabilizer {
                    kind: j,
                    label: self.labels[j].clone(),
                    anchor,
                    op: PauliOperator::new(x, z),
                });
            }
        }
        let code = StabilizerCode {
            name: self.name.clone(),
            layout,
            boundary: Boundary::Periodic,
            stabilizers,
        };
        code.validate()?;
        Ok(code)
    }
}

/// The four stabilizer maps, written out in the text form.
#[must_use]
pub fn builtin_map(family: Family) -> StabilizerMap {
    let (d, n) = family.shape();
    let (labels, text): (&[&str], &str) = match family {
        Family::Toric2 => (
            &["vertex", "plaquette12"],
            "1+x~, 0
             1+y~, 0
             0, 1+y
             0, 1+x",
        ),
        Family::Toric3 => (
            &["vertex", "plaquette23", "plaquette13", "plaquette12"],
            "1+x~, 0, 0, 0
             1+y~, 0, 0, 0
             1+z~, 0, 0, 0
             0, 0, 1+z, 1+y
             0, 1+z, 0, 1+x
             0, 1+y, 1+x, 0",
        ),
        Family::Xcube => (
            &["cube", "cross1", "cross2", "cross3"],
            "1+y+z+yz, 0, 0, 0
             1+x+z+xz, 0, 0, 0
             1+x+y+xy, 0, 0, 0
             0, 0, 1+x~, 1+x~
             0, 1+y~, 0, 1+y~
             0, 1+z~, 1+z~, 0",
        ),
        Family::Haah => (
            &["gx", "gz"],
            "1+x+y+z, 0
             1+xy+yz+xz, 0
             0, 1+x~y~+y~z~+x~z~
             0, 1+x~+y~+z~",
        ),
    };
    let matrix = LaurentMatrix::parse(text, d).expect("built-in maps parse");
    StabilizerMap::new(
        family.name(),
        n,
        labels.iter().map(|s| (*s).to_owned()).collect(),
        matrix,
    )
    .expect("built-in maps are well formed")
}
