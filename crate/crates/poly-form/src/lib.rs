//! Translation-invariant stabilizer codes as matrices of Laurent polynomials
//! over GF(2).
//!
//! A monomial `e^a` stands for the translation by `a`. Exponents are kept in
//! `Z^d` and only reduced mod `L` when a map is expanded on the `L`-torus.

mod laurent;
mod map;
mod matrix;

pub use laurent::{LaurentPoly, VARIABLES};
pub use map::{builtin_map, StabilizerMap};
pub use matrix::LaurentMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("cannot parse `{text}`: {reason}")]
    Parse { text: String, reason: &'static str },
    #[error("the text form supports at most 4 variables, got {0}")]
    TooManyVariables(usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("column {0} is identically zero")]
    ZeroColumn(usize),
    #[error("expanded code is not a stabilizer set: {0}")]
    Instantiate(#[from] code_factory::CodeError),
}
