//! Stabilizer codes on the `L`-torus: the 2D and 3D toric codes, the X-cube
//! model and Haah's cubic code, together with open-boundary variants and
//! change-of-boundary maps between them.
//!
//! Edge qubits are stored on the vertex at the negative end of the edge, so a
//! code on a `d`-dimensional lattice with edge qubits has `n = d` qubits per
//! site and slot `j` is the edge `v -> v + e_j`.

mod boundary;
mod build;
mod describe;

use std::fmt;
use std::str::FromStr;

use f2_linalg::{BitVec, F2Matrix};
use pauli_space::{Layout, PauliOperator};
use serde::{Deserialize, Serialize};

pub use boundary::{attach_logicals, ChangeOfBoundary, CobError, Condition};
pub use build::{build_haah, build_toric, build_xcube, translate, truncated};
pub use describe::{CodeDescription, DescribeError, StabilizerText};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Toric2,
    Toric3,
    Xcube,
    Haah,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Toric2, Family::Toric3, Family::Xcube, Family::Haah];

    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            Family::Toric2 => "toric2",
            Family::Toric3 => "toric3",
            Family::Xcube => "xcube",
            Family::Haah => "haah",
        }
    }

    /// Lattice rank and qubits per site.
    #[must_use]
    pub fn shape(self) -> (usize, usize) {
        match self {
            Family::Toric2 => (2, 2),
            Family::Toric3 | Family::Xcube => (3, 3),
            Family::Haah => (3, 2),
        }
    }

    /// Builds the family on the `L`-torus or its built-in open variant.
    pub fn build(self, l: usize, boundary: &Boundary) -> Result<StabilizerCode, CodeError> {
        match self {
            Family::Toric2 => build_toric(l, 2, boundary),
            Family::Toric3 => build_toric(l, 3, boundary),
            Family::Xcube => build_xcube(l, boundary),
            Family::Haah => match boundary {
                Boundary::Periodic => build_haah(l),
                Boundary::Open { .. } => Err(CodeError::NoOpenVariant(self)),
            },
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| CodeError::UnknownFamily(s.to_owned()))
    }
}

/// Boundary condition of a code.
///
/// `Open` records the axes cut by the box truncation and the stabilizers
/// that additionally carry an attached logical operator (see
/// [`attach_logicals`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum Boundary {
    #[default]
    Periodic,
    Open {
        cuts: Vec<usize>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        attached: Vec<usize>,
    },
}

impl Boundary {
    /// Open boundary with the given cut axes and nothing attached.
    #[must_use]
    pub fn cut(axes: &[usize]) -> Self {
        Boundary::Open {
            cuts: axes.to_vec(),
            attached: Vec::new(),
        }
    }

    #[must_use]
    pub fn is_periodic(&self) -> bool {
        matches!(self, Boundary::Periodic)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CodeError {
    #[error("lattice size L = {0} is below the minimum of 2")]
    SizeTooSmall(usize),
    #[error("unsupported dimension {0}")]
    BadDimension(usize),
    #[error("cut axis {axis} out of range for dimension {d}")]
    BadCut { axis: usize, d: usize },
    #[error("unknown code family `{0}`")]
    UnknownFamily(String),
    #[error("{0} has no built-in open-boundary variant")]
    NoOpenVariant(Family),
    #[error("stabilizers {0} and {1} anticommute")]
    Anticommuting(usize, usize),
    #[error("stabilizer {0} is the identity")]
    IdentityStabilizer(usize),
    #[error("qubit {0} is not acted upon by any stabilizer")]
    IdleQubit(usize),
    #[error("stabilizer {index} acts on {found} qubits, expected {expected}")]
    WrongUniverse {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("logical completion failed: {0}")]
    Completion(String),
}

/// One generator of the stabilizer set, tagged with its type and anchor site.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Stabilizer {
    pub kind: usize,
    pub label: String,
    pub anchor: Vec<usize>,
    pub op: PauliOperator,
}

/// An ordered stabilizer set on a lattice of qubits.
///
/// Built-in codes order their stabilizers type-major, then by anchor site in
/// row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerCode {
    pub name: String,
    pub layout: Layout,
    pub boundary: Boundary,
    pub stabilizers: Vec<Stabilizer>,
}

impl StabilizerCode {
    #[must_use]
    pub fn num_qubits(&self) -> usize {
        self.layout.num_qubits()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.stabilizers.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.stabilizers.is_empty()
    }

    #[must_use]
    pub fn op(&self, i: usize) -> &PauliOperator {
        &self.stabilizers[i].op
    }

    pub fn ops(&self) -> impl Iterator<Item = &PauliOperator> {
        self.stabilizers.iter().map(|s| &s.op)
    }

    /// `|S| x 2N` matrix whose row `i` is the bit form of stabilizer `i`.
    #[must_use]
    pub fn bit_rows(&self) -> F2Matrix {
        let rows: Vec<BitVec> = self.ops().map(PauliOperator::to_bits).collect();
        F2Matrix::from_rows(2 * self.num_qubits(), rows).expect("all stabilizers share the layout")
    }

    /// Checks the stabilizer-set conditions: every generator acts on the
    /// code's qubits, generators pairwise commute, none is the identity, and
    /// every qubit is acted upon. Reports the first violation found.
    pub fn validate(&self) -> Result<(), CodeError> {
        let n = self.num_qubits();
        for (i, s) in self.stabilizers.iter().enumerate() {
            if s.op.num_qubits() != n {
                return Err(CodeError::WrongUniverse {
                    index: i,
                    expected: n,
                    found: s.op.num_qubits(),
                });
            }
            if s.op.is_identity() {
                return Err(CodeError::IdentityStabilizer(i));
            }
        }
        if let Some((i, j)) = self.first_anticommuting_pair() {
            return Err(CodeError::Anticommuting(i, j));
        }
        let mut covered = BitVec::zeros(n);
        for s in self.ops() {
            covered = covered.or(&s.support());
        }
        if let Some(q) = (0..n).find(|&q| !covered.get(q)) {
            return Err(CodeError::IdleQubit(q));
        }
        Ok(())
    }

    #[must_use]
    pub fn first_anticommuting_pair(&self) -> Option<(usize, usize)> {
        let ops: Vec<&PauliOperator> = self.ops().collect();
        for i in 0..ops.len() {
            for j in (i + 1)..ops.len() {
                if ops[i].lambda(ops[j]).expect("validated universe") {
                    return Some((i, j));
                }
            }
        }
        None
    }

    #[must_use]
    pub fn is_css(&self) -> bool {
        self.ops().all(PauliOperator::is_css)
    }

    /// The permutation induced on the stabilizer list by translating every
    /// stabilizer by `shift`, or `None` if the translated set differs.
    #[must_use]
    pub fn translation_permutation(&self, shift: &[i64]) -> Option<Vec<usize>> {
        let mut index: std::collections::HashMap<&PauliOperator, usize> =
            std::collections::HashMap::new();
        for (i, s) in self.ops().enumerate() {
            index.entry(s).or_insert(i);
        }
        let mut seen = vec![false; self.len()];
        let mut perm = Vec::with_capacity(self.len());
        for s in self.ops() {
            let t = translate(&self.layout, s, shift);
            let j = *index.get(&t)?;
            if seen[j] {
                return None;
            }
            seen[j] = true;
            perm.push(j);
        }
        Some(perm)
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.bit_rows().rank()
    }

    /// Encoded qubit count `N - rank`, valid for commuting sets.
    #[must_use]
    pub fn logical_qubits(&self) -> usize {
        self.num_qubits() - self.rank()
    }
}
