//! The GF(2) gauge structure of a stabilizer code.
//!
//! Subsets of the stabilizer list are bit vectors over the list. `phi` maps a
//! subset to the product of its members, `psi` maps a Pauli operator to the
//! set of stabilizers it anticommutes with. As matrices, `Phi` is `2N x |S|`
//! with column `s` the bit form of stabilizer `s`, and `Psi` is `|S| x 2N`.

mod distance;

use code_factory::{ChangeOfBoundary, CobError, StabilizerCode};
use f2_linalg::{quotient_basis, BitVec, F2Matrix, Solution, Subspace};
use pauli_space::{symplectic_gram, PauliOperator};

pub use distance::Distance;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaugeError {
    #[error("subset has length {found}, the code has {expected} stabilizers")]
    SubsetLength { expected: usize, found: usize },
    #[error("operator acts on {found} qubits, the code has {expected}")]
    Universe { expected: usize, found: usize },
    #[error("the change of boundary does not start from this code")]
    ForeignBoundary,
    #[error("invalid change of boundary: {0}")]
    InvalidBoundary(#[from] CobError),
    #[error("subset is not a constraint: its product is not the identity")]
    NotConstraint,
    #[error("no counter-term supported on fixed stabilizers exists")]
    NoCounterTerm,
    #[error("logical quotient has odd dimension {0}")]
    OddLogicalDimension(usize),
}

/// `(A, f)` with `lambda(phi(A), f) != omega(A, psi(f))`. `A` is the single
/// stabilizer `stabilizer`, `f` the single bit `bit` of the bit form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualityWitness {
    pub stabilizer: usize,
    pub bit: usize,
}

/// Verifies `Phi^T Lambda = Psi` entrywise.
pub fn check_duality(phi: &F2Matrix, psi: &F2Matrix) -> Result<(), DualityWitness> {
    let n = phi.rows() / 2;
    let lhs = phi.transpose().mul(&symplectic_gram(n));
    for s in 0..lhs.rows() {
        if lhs.row(s) != psi.row(s) {
            let diff = lhs.row(s) ^ psi.row(s);
            let bit = diff.first_one().expect("rows differ");
            return Err(DualityWitness { stabilizer: s, bit });
        }
    }
    Ok(())
}

/// Outcome of the syndrome test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyndromeCheck {
    /// An operator whose syndrome is exactly the requested set.
    Realizable(PauliOperator),
    /// A constraint meeting the requested set an odd number of times.
    Violation(BitVec),
}

/// A constraint basis, optionally split into trivial and topological parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSpace {
    pub basis: Vec<BitVec>,
    pub trivial_basis: Option<Vec<BitVec>>,
    pub topological_basis: Option<Vec<BitVec>>,
}

impl ConstraintSpace {
    #[must_use]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalSpace {
    pub representatives: Vec<PauliOperator>,
    pub k: usize,
}

#[derive(Debug, Clone)]
pub struct F2GaugeStructure {
    code: StabilizerCode,
    phi: F2Matrix,
    psi: F2Matrix,
}

fn swap_halves(bits: &BitVec, n: usize) -> BitVec {
    bits.slice(n, 2 * n).concat(&bits.slice(0, n))
}

impl F2GaugeStructure {
    /// `Psi` is built directly from the commutation form, not from `Phi`, so
    /// that [`F2GaugeStructure::duality_check`] compares two independent
    /// computations.
    #[must_use]
    pub fn new(code: StabilizerCode) -> Self {
        let n = code.num_qubits();
        let rows = code.bit_rows();
        let phi = rows.transpose();
        let psi = F2Matrix::from_rows(
            2 * n,
            rows.row_vecs().iter().map(|r| swap_halves(r, n)).collect(),
        )
        .expect("rows of length 2n");
        F2GaugeStructure { code, phi, psi }
    }

    #[must_use]
    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    #[must_use]
    pub fn phi_matrix(&self) -> &F2Matrix {
        &self.phi
    }

    #[must_use]
    pub fn psi_matrix(&self) -> &F2Matrix {
        &self.psi
    }

    #[must_use]
    pub fn lambda_gram(&self) -> F2Matrix {
        symplectic_gram(self.num_qubits())
    }

    #[must_use]
    pub fn omega_gram(&self) -> F2Matrix {
        F2Matrix::identity(self.num_stabilizers())
    }

    #[must_use]
    pub fn num_qubits(&self) -> usize {
        self.code.num_qubits()
    }

    #[must_use]
    pub fn num_stabilizers(&self) -> usize {
        self.code.len()
    }

    /// Bit vector over the stabilizer list with the given members.
    #[must_use]
    pub fn subset<I: IntoIterator<Item = usize>>(&self, members: I) -> BitVec {
        BitVec::from_indices(self.num_stabilizers(), members)
    }

    fn check_subset(&self, a: &BitVec) -> Result<(), GaugeError> {
        if a.len() == self.num_stabilizers() {
            Ok(())
        } else {
            Err(GaugeError::SubsetLength {
                expected: self.num_stabilizers(),
                found: a.len(),
            })
        }
    }

    fn to_op(&self, bits: &BitVec) -> PauliOperator {
        PauliOperator::from_bits(self.num_qubits(), bits).expect("length 2N")
    }

    /// Product of the stabilizers in `a`.
    pub fn phi(&self, a: &BitVec) -> Result<PauliOperator, GaugeError> {
        self.check_subset(a)?;
        Ok(self.to_op(&self.phi.mul_vec(a)))
    }

    /// Stabilizers anticommuting with `f`.
    pub fn psi(&self, f: &PauliOperator) -> Result<BitVec, GaugeError> {
        if f.num_qubits() != self.num_qubits() {
            return Err(GaugeError::Universe {
                expected: self.num_qubits(),
                found: f.num_qubits(),
            });
        }
        Ok(self.psi.mul_vec(&f.to_bits()))
    }

    pub fn duality_check(&self) -> Result<(), DualityWitness> {
        check_duality(&self.phi, &self.psi)
    }

    /// `Psi Phi = 0`; on failure the first anticommuting stabilizer pair.
    pub fn symplectic_check(&self) -> Result<(), (usize, usize)> {
        let m = self.psi.mul(&self.phi);
        for i in 0..m.rows() {
            if let Some(j) = m.row(i).first_one() {
                return Err((i, j));
            }
        }
        Ok(())
    }

    /// Kernel of `Phi`, without the trivial/topological split.
    #[must_use]
    pub fn constraint_space(&self) -> ConstraintSpace {
        ConstraintSpace {
            basis: self.phi.kernel_basis(),
            trivial_basis: None,
            topological_basis: None,
        }
    }

    #[must_use]
    pub fn is_constraint(&self, c: &BitVec) -> bool {
        c.len() == self.num_stabilizers() && self.phi.mul_vec(c).is_zero()
    }

    /// Either an operator with syndrome exactly `j`, or a constraint that
    /// meets `j` an odd number of times.
    pub fn is_syndrome(&self, j: &BitVec) -> Result<SyndromeCheck, GaugeError> {
        self.check_subset(j)?;
        match self.psi.solve(j).expect("length checked") {
            Solution::Solved(x) => Ok(SyndromeCheck::Realizable(self.to_op(&x))),
            // c^T Psi = 0 is equivalent to Phi c = 0 since Lambda is invertible.
            Solution::Inconsistent { certificate } => Ok(SyndromeCheck::Violation(certificate)),
        }
    }

    /// Representatives of `ker psi / im phi`.
    pub fn logical_space(&self) -> Result<LogicalSpace, GaugeError> {
        let ker = self.psi.kernel_basis();
        let im = self.code.bit_rows().into_rows();
        let reps = quotient_basis(&ker, &im).expect("im phi lies in ker psi for commuting codes");
        if reps.len() % 2 == 1 {
            return Err(GaugeError::OddLogicalDimension(reps.len()));
        }
        Ok(LogicalSpace {
            k: reps.len() / 2,
            representatives: reps.iter().map(|r| self.to_op(r)).collect(),
        })
    }

    /// `true` iff `f` is a product of stabilizers.
    #[must_use]
    pub fn in_stabilizer_group(&self, f: &PauliOperator) -> bool {
        f.num_qubits() == self.num_qubits() && self.phi.solve(&f.to_bits()).expect("length 2N").ok().is_some()
    }

    fn check_beta(&self, beta: &ChangeOfBoundary) -> Result<(), GaugeError> {
        if beta.source != self.code {
            return Err(GaugeError::ForeignBoundary);
        }
        beta.validate()?;
        Ok(())
    }

    /// Splits the constraint space using `beta`. A constraint `C` is trivial
    /// iff `phi'(beta[C])` lies in `im phi`, i.e. iff some `A` solves
    /// `Phi C = 0, Phi' C + Phi A = 0`; the trivial space is the projection
    /// of that kernel onto the `C` coordinates.
    pub fn trivial_and_topological(
        &self,
        beta: &ChangeOfBoundary,
    ) -> Result<ConstraintSpace, GaugeError> {
        self.check_beta(beta)?;
        let m = self.num_stabilizers();
        let two_n = 2 * self.num_qubits();
        let phi_t = beta.target.bit_rows().transpose();
        let zero = BitVec::zeros(m);
        let mut rows = Vec::with_capacity(2 * two_n);
        for r in 0..two_n {
            rows.push(self.phi.row(r).concat(&zero));
        }
        for r in 0..two_n {
            rows.push(phi_t.row(r).concat(self.phi.row(r)));
        }
        let system = F2Matrix::from_rows(2 * m, rows).expect("rows of length 2|S|");
        let projected: Vec<BitVec> = system
            .kernel_basis()
            .iter()
            .map(|v| v.slice(0, m))
            .collect();
        let trivial = Subspace::spanned_by(m, &projected)
            .expect("length |S|")
            .basis()
            .to_vec();
        let basis = self.phi.kernel_basis();
        let topological = quotient_basis(&basis, &trivial).expect("trivial constraints are constraints");
        Ok(ConstraintSpace {
            basis,
            trivial_basis: Some(trivial),
            topological_basis: Some(topological),
        })
    }

    /// `p_C = phi'(beta[C])` for a constraint `C` of this code.
    pub fn logical_from_constraint(
        &self,
        beta: &ChangeOfBoundary,
        c: &BitVec,
    ) -> Result<PauliOperator, GaugeError> {
        self.check_subset(c)?;
        if beta.source != self.code {
            return Err(GaugeError::ForeignBoundary);
        }
        if !self.is_constraint(c) {
            return Err(GaugeError::NotConstraint);
        }
        let bits = beta.target.bit_rows().left_mul(c);
        Ok(self.to_op(&bits))
    }

    /// Maps a constraint `C'` of the target to `beta^-1[C'] + F`, where `F`
    /// uses only fixed points of `beta` and makes the sum a constraint here.
    pub fn gamma(&self, beta: &ChangeOfBoundary, c_target: &BitVec) -> Result<BitVec, GaugeError> {
        self.check_subset(c_target)?;
        if beta.source != self.code {
            return Err(GaugeError::ForeignBoundary);
        }
        if !beta.target.bit_rows().left_mul(c_target).is_zero() {
            return Err(GaugeError::NotConstraint);
        }
        let fixed = beta.fixed_points();
        let target = self.phi.mul_vec(c_target);
        let restricted = self.phi.select_columns(&fixed);
        let y = restricted
            .solve(&target)
            .expect("length 2N")
            .ok()
            .ok_or(GaugeError::NoCounterTerm)?;
        let mut out = c_target.clone();
        for (i, &s) in fixed.iter().enumerate() {
            if y.get(i) {
                out.flip(s);
            }
        }
        debug_assert!(self.is_constraint(&out));
        Ok(out)
    }

    /// Smallest weight of an operator in `ker psi` outside `im phi`, searched
    /// up to `max_weight`.
    #[must_use]
    pub fn code_distance(&self, max_weight: usize) -> Distance {
        distance::search(self, max_weight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use code_factory::{Boundary, Family};

    fn gs(f: Family, l: usize) -> F2GaugeStructure {
        F2GaugeStructure::new(f.build(l, &Boundary::Periodic).unwrap())
    }

    #[test]
    fn phi_of_empty_and_singletons() {
        let g = gs(Family::Toric2, 3);
        assert!(g.phi(&g.subset([])).unwrap().is_identity());
        for s in 0..g.num_stabilizers() {
            assert_eq!(&g.phi(&g.subset([s])).unwrap(), g.code().op(s));
        }
        assert!(g.phi(&BitVec::zeros(3)).is_err());
    }

    #[test]
    fn all_vertices_multiply_to_identity() {
        let g = gs(Family::Toric2, 3);
        let vertices = g.subset(0..9);
        assert!(g.phi(&vertices).unwrap().is_identity());
    }

    #[test]
    fn single_z_excites_two_vertices() {
        let g = gs(Family::Toric2, 3);
        let lay = g.code().layout;
        let q = lay.qubit(&[1, 1], 0);
        let syn = g.psi(&PauliOperator::single_z(g.num_qubits(), q)).unwrap();
        // Edge (1,1) -> (2,1) touches the vertices at (1,1) and (2,1).
        let expect = g.subset([lay.site_index(&[1, 1]), lay.site_index(&[2, 1])]);
        assert_eq!(syn, expect);
    }

    #[test]
    fn stabilizers_have_empty_syndrome() {
        let g = gs(Family::Xcube, 2);
        for s in g.code().ops() {
            assert!(g.psi(s).unwrap().is_zero());
        }
        assert!(g.psi(&PauliOperator::identity(3)).is_err());
    }

    #[test]
    fn flipped_phi_bit_breaks_duality() {
        let g = gs(Family::Toric2, 2);
        assert!(g.duality_check().is_ok());
        let mut phi = g.phi_matrix().clone();
        phi.set(5, 3, !phi.get(5, 3));
        let w = check_duality(&phi, g.psi_matrix()).unwrap_err();
        assert_eq!(w.stabilizer, 3);
    }

    #[test]
    fn anticommuting_pair_breaks_symplectic_check() {
        let mut code = Family::Toric2.build(2, &Boundary::Periodic).unwrap();
        let n = code.num_qubits();
        code.stabilizers[0].op = PauliOperator::single_z(n, 0);
        code.stabilizers[1].op = PauliOperator::single_x(n, 0);
        let g = F2GaugeStructure::new(code);
        assert_eq!(g.symplectic_check(), Err((0, 1)));
    }

    #[test]
    fn single_vertex_is_not_a_syndrome() {
        let g = gs(Family::Toric2, 3);
        match g.is_syndrome(&g.subset([4])).unwrap() {
            SyndromeCheck::Violation(c) => {
                assert!(g.is_constraint(&c));
                assert_eq!(c, g.subset(0..9));
            }
            SyndromeCheck::Realizable(_) => panic!("odd vertex syndrome realized"),
        }
    }

    #[test]
    fn vertex_pair_is_realized_by_a_z_string() {
        let g = gs(Family::Toric2, 3);
        let j = g.subset([0, 4]);
        match g.is_syndrome(&j).unwrap() {
            SyndromeCheck::Realizable(f) => {
                assert_eq!(g.psi(&f).unwrap(), j);
                assert!(f.x_part().is_zero());
            }
            SyndromeCheck::Violation(_) => panic!("pair should be realizable"),
        }
        assert_eq!(
            g.is_syndrome(&g.subset([])).unwrap(),
            SyndromeCheck::Realizable(PauliOperator::identity(18))
        );
    }

    #[test]
    fn toric_logical_counts() {
        assert_eq!(gs(Family::Toric2, 3).logical_space().unwrap().k, 2);
        assert_eq!(gs(Family::Toric3, 3).logical_space().unwrap().k, 3);
        let open = Family::Toric2.build(3, &Boundary::cut(&[0])).unwrap();
        assert_eq!(F2GaugeStructure::new(open).logical_space().unwrap().k, 0);
    }
}
