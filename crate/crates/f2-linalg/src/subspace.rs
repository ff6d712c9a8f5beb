use crate::{BitVec, F2Matrix, LinalgError};

/// A subspace of GF(2)^n held as a fully reduced echelon basis.
///
/// `reduce` maps a vector to its canonical representative modulo the
/// subspace: the result has a zero at every pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    len: usize,
    basis: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    #[must_use]
    pub fn zero(len: usize) -> Self {
        Subspace {
            len,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by(len: usize, vectors: &[BitVec]) -> Result<Self, LinalgError> {
        let rref = F2Matrix::from_rows(len, vectors.to_vec())?.rref();
        let pivots = rref.pivots.clone();
        Ok(Subspace {
            len,
            basis: rref.into_basis(),
            pivots,
        })
    }

    #[must_use]
    pub fn ambient_len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical echelon basis, sorted by pivot column.
    #[must_use]
    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    #[must_use]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    #[must_use]
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        self.reduce_with_combination(v).0
    }

    /// Reduces `v` and reports which basis vectors were added along the way,
    /// so that `v = remainder + sum(basis[i] for i in combination)`.
    #[must_use]
    pub fn reduce_with_combination(&self, v: &BitVec) -> (BitVec, BitVec) {
        assert_eq!(v.len(), self.len, "vector length must match subspace");
        let mut r = v.clone();
        let mut used = BitVec::zeros(self.basis.len());
        for (i, (b, &p)) in self.basis.iter().zip(&self.pivots).enumerate() {
            if r.get(p) {
                r.xor_assign(b);
                used.set(i, true);
            }
        }
        (r, used)
    }

    #[must_use]
    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns `false` if it was already contained.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.first_one() else {
            return false;
        };
        for b in &mut self.basis {
            if b.get(p) {
                b.xor_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    #[must_use]
    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_matches_spanned_by() {
        let vs: Vec<BitVec> = ["0110", "1100", "1010", "0001"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let mut s = Subspace::zero(4);
        let added: Vec<bool> = vs.iter().map(|v| s.insert(v)).collect();
        assert_eq!(added, vec![true, true, false, true]);
        assert_eq!(s, Subspace::spanned_by(4, &vs).unwrap());
    }

    #[test]
    fn reduce_combination_reconstructs() {
        let s = Subspace::spanned_by(4, &["1100".parse().unwrap(), "0011".parse().unwrap()]).unwrap();
        let v: BitVec = "1110".parse().unwrap();
        let (r, used) = s.reduce_with_combination(&v);
        let mut back = r.clone();
        for i in used.iter_ones() {
            back.xor_assign(&s.basis()[i]);
        }
        assert_eq!(back, v);
        assert!(!r.get(0) && !r.get(2));
    }
}
