//! Continuum gauge structures: matrices of constant-coefficient differential
//! operators, the lattice-to-continuum substitution, formal adjoints,
//! symplectic and Maxwell operators and operator-level conservation laws.
//!
//! Operators are generic over the coefficient ring. The integer and rational
//! instances are the ones used in practice, see [`DiffPolyZ`] and
//! [`DiffPolyQ`].

mod diffpoly;
mod equation;
mod opmatrix;
mod position;
mod structure;
mod substitute;

use num_rational::Rational64;

pub use diffpoly::{symbol_base, Coefficient, DiffPoly};
pub use equation::{parse_equations, render_maxwell};
pub use opmatrix::DiffOpMatrix;
pub use position::PositionPoly;
pub use structure::{
    builtin_continuum, bulmash_perturbed, ContinuumFamily, ContinuumGaugeStructure, IdentityCheck,
    Pairing,
};
pub use substitute::{f2_to_continuum, SignConfig};

pub type DiffPolyZ = DiffPoly<i64>;
pub type DiffPolyQ = DiffPoly<Rational64>;
pub type DiffOpMatrixZ = DiffOpMatrix<i64>;
pub type DiffOpMatrixQ = DiffOpMatrix<Rational64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContinuumError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cannot parse `{text}`: {reason}")]
    Parse { text: String, reason: String },
    #[error("unknown continuum family `{0}`")]
    UnknownFamily(String),
    #[error("invalid symplectic pairing: {0}")]
    Pairing(String),
    #[error("sign configuration is {got:?} but the map is {want:?}")]
    SignShape { got: (usize, usize), want: (usize, usize) },
}
