use std::fmt;

use f2_linalg::{BitVec, F2Matrix, Subspace};
use pauli_space::PauliOperator;

use crate::{Boundary, CodeError, Family, StabilizerCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// The target has no logical qubits.
    TrivialLogical,
    /// The intersection of the two stabilizer groups is generated by the
    /// common generators.
    CommonGenerators,
    /// The edits `beta(s) + s` pairwise commute.
    CommutingEdits,
}

impl Condition {
    #[must_use]
    pub fn number(self) -> u8 {
        match self {
            Condition::TrivialLogical => 1,
            Condition::CommonGenerators => 2,
            Condition::CommutingEdits => 3,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {}", self.number())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CobError {
    #[error("source and target differ in shape: {0}")]
    Shape(String),
    #[error("source is not a stabilizer set: {0}")]
    Source(CodeError),
    #[error("target is not a stabilizer set: {0}")]
    Target(CodeError),
    #[error("condition 1 fails: target still encodes {k} logical qubits")]
    LogicalRemains { k: usize, witness: PauliOperator },
    #[error("condition 2 fails: shared group has dimension {shared}, common generators span {common}")]
    ExtraShared {
        shared: usize,
        common: usize,
        witness: PauliOperator,
    },
    #[error("condition 3 fails: edits of stabilizers {0} and {1} anticommute")]
    EditsAnticommute(usize, usize),
    #[error(transparent)]
    Build(#[from] CodeError),
}

impl CobError {
    /// The Definition-style condition that failed, if the failure is one.
    #[must_use]
    pub fn condition(&self) -> Option<Condition> {
        match self {
            CobError::LogicalRemains { .. } => Some(Condition::TrivialLogical),
            CobError::ExtraShared { .. } => Some(Condition::CommonGenerators),
            CobError::EditsAnticommute(..) => Some(Condition::CommutingEdits),
            _ => None,
        }
    }
}

/// A bijection `beta` between a periodic stabilizer list and an open one on
/// the same qubits. Stabilizer `i` of `source` is paired with stabilizer `i`
/// of `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChangeOfBoundary {
    pub source: StabilizerCode,
    pub target: StabilizerCode,
}

fn swap_halves(bits: &BitVec, n: usize) -> BitVec {
    bits.slice(n, 2 * n).concat(&bits.slice(0, n))
}

impl ChangeOfBoundary {
    /// Pairs two codes and verifies all conditions.
    pub fn new(source: StabilizerCode, target: StabilizerCode) -> Result<Self, CobError> {
        let cob = ChangeOfBoundary { source, target };
        cob.validate()?;
        Ok(cob)
    }

    /// Pairs two codes without checking anything.
    #[must_use]
    pub fn new_unchecked(source: StabilizerCode, target: StabilizerCode) -> Self {
        ChangeOfBoundary { source, target }
    }

    /// The built-in change of boundary for a family: a single cut normal to
    /// the first axis, completed with attached logicals for the X-cube model.
    pub fn builtin(family: Family, l: usize) -> Result<Self, CobError> {
        let source = family.build(l, &Boundary::Periodic)?;
        let target = family.build(l, &Boundary::cut(&[0]))?;
        ChangeOfBoundary::new(source, target)
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.source.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.source.is_empty()
    }

    /// Indices `i` with `beta(s_i) = s_i`.
    #[must_use]
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.source.op(i) == self.target.op(i))
            .collect()
    }

    /// `beta(s_i) + s_i`.
    #[must_use]
    pub fn edit(&self, i: usize) -> PauliOperator {
        self.source
            .op(i)
            .add(self.target.op(i))
            .expect("same universe")
    }

    pub fn validate(&self) -> Result<(), CobError> {
        self.check_shape()?;
        self.source.validate().map_err(CobError::Source)?;
        self.target.validate().map_err(CobError::Target)?;
        self.check_condition1()?;
        self.check_condition2()?;
        self.check_condition3()
    }

    pub fn check_shape(&self) -> Result<(), CobError> {
        if self.source.layout != self.target.layout {
            return Err(CobError::Shape("different qubit layouts".into()));
        }
        if self.source.len() != self.target.len() {
            return Err(CobError::Shape(format!(
                "{} source stabilizers but {} target stabilizers",
                self.source.len(),
                self.target.len()
            )));
        }
        Ok(())
    }

    /// Target logical subspace is trivial; the witness is a logical operator.
    pub fn check_condition1(&self) -> Result<(), CobError> {
        let n = self.target.num_qubits();
        let rows = self.target.bit_rows();
        let k = n - rows.rank();
        if k == 0 {
            return Ok(());
        }
        let psi = F2Matrix::from_rows(
            2 * n,
            rows.row_vecs().iter().map(|r| swap_halves(r, n)).collect(),
        )
        .expect("rows of length 2n");
        let group = Subspace::spanned_by(2 * n, rows.row_vecs()).expect("rows of length 2n");
        let witness = psi
            .kernel_basis()
            .into_iter()
            .map(|v| group.reduce(&v))
            .find(|v| !v.is_zero())
            .expect("a logical operator exists when k > 0");
        Err(CobError::LogicalRemains {
            k,
            witness: PauliOperator::from_bits(n, &witness).expect("length 2n"),
        })
    }

    /// The intersection of both groups is spanned by generators present in
    /// both lists; the witness is a shared element outside that span.
    pub fn check_condition2(&self) -> Result<(), CobError> {
        let n = self.source.num_qubits();
        let s = self.source.bit_rows();
        let t = self.target.bit_rows();
        let in_target: std::collections::HashSet<&BitVec> = t.row_vecs().iter().collect();
        let common: Vec<BitVec> = s
            .row_vecs()
            .iter()
            .filter(|r| in_target.contains(r))
            .cloned()
            .collect();
        let common_span = Subspace::spanned_by(2 * n, &common).expect("rows of length 2n");
        let both = s.stack(&t).expect("same width");
        let rank_s = s.rank();
        let shared = rank_s + t.rank() - both.rank();
        if shared == common_span.dim() {
            return Ok(());
        }
        // Combinations (a, b) with a S = b T give the shared elements a S.
        let relations = both.transpose().kernel_basis();
        let witness = relations
            .iter()
            .map(|rel| common_span.reduce(&s.left_mul(&rel.slice(0, s.rows()))))
            .find(|v| !v.is_zero())
            .expect("a shared element outside the common span exists");
        Err(CobError::ExtraShared {
            shared,
            common: common_span.dim(),
            witness: PauliOperator::from_bits(n, &witness).expect("length 2n"),
        })
    }

    /// The edits pairwise commute; the witness is the first bad pair.
    pub fn check_condition3(&self) -> Result<(), CobError> {
        let n = self.source.num_qubits();
        let edits: Vec<(usize, BitVec)> = (0..self.len())
            .map(|i| (i, self.edit(i).to_bits()))
            .filter(|(_, e)| !e.is_zero())
            .collect();
        for (a, (i, ei)) in edits.iter().enumerate() {
            let swapped = swap_halves(ei, n);
            for (j, ej) in &edits[a + 1..] {
                if swapped.dot(ej) {
                    return Err(CobError::EditsAnticommute(*i, *j));
                }
            }
        }
        Ok(())
    }
}

/// Completes a truncated code so that it encodes nothing, by multiplying
/// chosen stabilizers with `Z`-type logical operators.
///
/// The logicals are taken from the canonical kernel of the `X` parts of both
/// `source` and `partial`, so they commute with every generator on either
/// side; each is attached to a generator left unchanged by the truncation
/// whose removal does not shrink the span of the unchanged generators. With
/// that choice the edits commute pairwise and the group generated by the
/// unchanged generators is the full intersection of the two groups.
pub fn attach_logicals(
    source: &StabilizerCode,
    mut partial: StabilizerCode,
) -> Result<StabilizerCode, CodeError> {
    let n = source.num_qubits();
    let rows = partial.bit_rows();
    let missing = n - rows.rank();
    let mut attached = Vec::new();
    if missing > 0 {
        let x_parts: Vec<BitVec> = source
            .ops()
            .chain(partial.ops())
            .map(|p| p.x_part().clone())
            .collect();
        let x_matrix = F2Matrix::from_rows(n, x_parts).expect("length n");
        let mut group = Subspace::spanned_by(2 * n, rows.row_vecs()).expect("length 2n");
        let mut logicals = Vec::new();
        for z in x_matrix.kernel_basis() {
            let bits = BitVec::zeros(n).concat(&z);
            if group.insert(&bits) {
                logicals.push(bits);
                if logicals.len() == missing {
                    break;
                }
            }
        }
        if logicals.len() < missing {
            return Err(CodeError::Completion(format!(
                "found {} of {missing} commuting Z-type logicals",
                logicals.len()
            )));
        }
        let src_rows = source.bit_rows();
        let mut free: Vec<usize> = (0..source.len())
            .filter(|&i| source.op(i) == partial.op(i))
            .collect();
        let target_rank = F2Matrix::from_rows(
            2 * n,
            free.iter().map(|&i| src_rows.row(i).clone()).collect(),
        )
        .expect("length 2n")
        .rank();
        for logical in logicals {
            let pick = free.iter().position(|&i| {
                let rest: Vec<BitVec> = free
                    .iter()
                    .filter(|&&j| j != i)
                    .map(|&j| src_rows.row(j).clone())
                    .collect();
                F2Matrix::from_rows(2 * n, rest).expect("length 2n").rank() == target_rank
            });
            let Some(pos) = pick else {
                return Err(CodeError::Completion(
                    "no redundant unchanged generator left to carry a logical".into(),
                ));
            };
            let i = free.remove(pos);
            let op = PauliOperator::from_bits(n, &logical).expect("length 2n");
            partial.stabilizers[i].op.add_assign(&op);
            attached.push(i);
        }
    }
    if let Boundary::Open { attached: a, .. } = &mut partial.boundary {
        *a = attached;
    }
    Ok(partial)
}
