//! Pauli operators with phases discarded.
//!
//! An operator on `N` qubits is a pair `(F_x, F_z)` of subsets of the qubits,
//! stored as two bit vectors. `Y` on a qubit is the presence of both parts.
//! The bit form used by the linear-algebra layers is `x-part ++ z-part`.

mod layout;
mod text;

use f2_linalg::{BitVec, F2Matrix};

pub use layout::{Layout, QubitIndex};
pub use text::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PauliError {
    #[error("operators act on {left} and {right} qubits")]
    UniverseMismatch { left: usize, right: usize },
    #[error("bit form has length {found}, expected {expected}")]
    BadBitForm { expected: usize, found: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    x: BitVec,
    z: BitVec,
}

impl PauliOperator {
    #[must_use]
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
        }
    }

    /// Builds an operator from its parts. Panics if the lengths differ.
    #[must_use]
    pub fn new(x: BitVec, z: BitVec) -> Self {
        assert_eq!(x.len(), z.len(), "x and z parts must have equal length");
        PauliOperator { x, z }
    }

    #[must_use]
    pub fn single_x(n: usize, q: usize) -> Self {
        PauliOperator::new(BitVec::unit(n, q), BitVec::zeros(n))
    }

    #[must_use]
    pub fn single_z(n: usize, q: usize) -> Self {
        PauliOperator::new(BitVec::zeros(n), BitVec::unit(n, q))
    }

    #[must_use]
    pub fn single_y(n: usize, q: usize) -> Self {
        PauliOperator::new(BitVec::unit(n, q), BitVec::unit(n, q))
    }

    /// Inverse of [`PauliOperator::to_bits`].
    pub fn from_bits(n: usize, bits: &BitVec) -> Result<Self, PauliError> {
        if bits.len() != 2 * n {
            return Err(PauliError::BadBitForm {
                expected: 2 * n,
                found: bits.len(),
            });
        }
        Ok(PauliOperator::new(bits.slice(0, n), bits.slice(n, 2 * n)))
    }

    #[must_use]
    pub fn to_bits(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    #[must_use]
    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    #[must_use]
    pub fn x_part(&self) -> &BitVec {
        &self.x
    }

    #[must_use]
    pub fn z_part(&self) -> &BitVec {
        &self.z
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Pure X-type or pure Z-type (the identity counts as both).
    #[must_use]
    pub fn is_css(&self) -> bool {
        self.x.is_zero() || self.z.is_zero()
    }

    fn same_universe(&self, other: &PauliOperator) -> Result<(), PauliError> {
        if self.num_qubits() == other.num_qubits() {
            Ok(())
        } else {
            Err(PauliError::UniverseMismatch {
                left: self.num_qubits(),
                right: other.num_qubits(),
            })
        }
    }

    /// Product of two operators, phase discarded.
    pub fn add(&self, other: &PauliOperator) -> Result<PauliOperator, PauliError> {
        self.same_universe(other)?;
        Ok(PauliOperator {
            x: &self.x ^ &other.x,
            z: &self.z ^ &other.z,
        })
    }

    /// In-place product. Panics on universe mismatch.
    pub fn add_assign(&mut self, other: &PauliOperator) {
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// The commutation form: `|F_x ∩ G_z| + |G_x ∩ F_z| mod 2`.
    pub fn lambda(&self, other: &PauliOperator) -> Result<bool, PauliError> {
        self.same_universe(other)?;
        Ok(self.x.dot(&other.z) ^ other.x.dot(&self.z))
    }

    /// `true` iff the operators commute.
    pub fn commutes_with(&self, other: &PauliOperator) -> Result<bool, PauliError> {
        self.lambda(other).map(|l| !l)
    }

    /// `F_x ∪ F_z` as a bit vector over the qubits.
    #[must_use]
    pub fn support(&self) -> BitVec {
        self.x.or(&self.z)
    }

    #[must_use]
    pub fn support_indices(&self) -> Vec<usize> {
        self.support().iter_ones().collect()
    }

    #[must_use]
    pub fn weight(&self) -> usize {
        self.support().count_ones()
    }
}

impl std::fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Pauli(x={}, z={})", self.x, self.z)
    }
}

/// Gram matrix of the commutation form in the basis `x_1..x_N, z_1..z_N`.
#[must_use]
pub fn symplectic_gram(n: usize) -> F2Matrix {
    let rows = (0..2 * n)
        .map(|i| BitVec::unit(2 * n, if i < n { i + n } else { i - n }))
        .collect();
    F2Matrix::from_rows(2 * n, rows).expect("rows have length 2n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_of_singletons_is_kronecker() {
        let n = 4;
        for i in 0..n {
            for j in 0..n {
                let l = PauliOperator::single_x(n, i)
                    .lambda(&PauliOperator::single_z(n, j))
                    .unwrap();
                assert_eq!(l, i == j);
            }
        }
    }

    #[test]
    fn overlap_at_one_qubit_anticommutes() {
        let n = 4;
        let f = PauliOperator::new(BitVec::from_indices(n, [1, 2]), BitVec::zeros(n));
        let g = PauliOperator::new(BitVec::zeros(n), BitVec::from_indices(n, [2, 3]));
        assert!(f.lambda(&g).unwrap());
    }

    #[test]
    fn x_plus_z_is_y() {
        let s = PauliOperator::single_x(3, 1)
            .add(&PauliOperator::single_z(3, 1))
            .unwrap();
        assert_eq!(s, PauliOperator::single_y(3, 1));
        assert_eq!(s.support_indices(), vec![1]);
    }

    #[test]
    fn mismatched_universe_rejected() {
        let a = PauliOperator::identity(2);
        let b = PauliOperator::identity(3);
        assert!(a.add(&b).is_err());
        assert!(a.lambda(&b).is_err());
    }

    #[test]
    fn support_examples() {
        assert!(PauliOperator::identity(5).support().is_zero());
        assert_eq!(PauliOperator::single_y(6, 5).support_indices(), vec![5]);
        let xz = PauliOperator::single_x(3, 1)
            .add(&PauliOperator::single_z(3, 2))
            .unwrap();
        assert_eq!(xz.support_indices(), vec![1, 2]);
    }

    #[test]
    fn gram_block_form() {
        let g = symplectic_gram(3);
        assert_eq!(g.rank(), 6);
        assert_eq!(g.to_string(), "000100\n000010\n000001\n100000\n010000\n001000");
    }

    #[test]
    fn bits_round_trip() {
        let p = PauliOperator::single_y(3, 2);
        assert_eq!(p.to_bits().to_string(), "001001");
        assert_eq!(PauliOperator::from_bits(3, &p.to_bits()).unwrap(), p);
    }
}
