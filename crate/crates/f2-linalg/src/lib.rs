//! Exact linear algebra over GF(2).
//!
//! Vectors are packed 64 entries per `u64` word. Row reduction always picks
//! the leftmost pivot column and the topmost available row, so every basis
//! returned here is a deterministic function of the input.

mod bitvec;
mod error;
mod matrix;
mod subspace;

pub use bitvec::BitVec;
pub use error::LinalgError;
pub use matrix::{F2Matrix, Rref, Solution};
pub use subspace::Subspace;

/// Basis of `{v : b^T G v = 0 for all b in basis}`.
pub fn orthogonal_complement(
    basis: &[BitVec],
    gram: &F2Matrix,
) -> Result<Vec<BitVec>, LinalgError> {
    if gram.rows() != gram.cols() {
        return Err(LinalgError::NotSquare {
            rows: gram.rows(),
            cols: gram.cols(),
        });
    }
    let n = gram.cols();
    let mut rows = Vec::with_capacity(basis.len());
    for b in basis {
        if b.len() != n {
            return Err(LinalgError::LengthMismatch {
                expected: n,
                found: b.len(),
            });
        }
        rows.push(gram.left_mul(b));
    }
    Ok(F2Matrix::from_rows_unchecked(n, rows).kernel_basis())
}

/// Representatives of `span U / span W`.
///
/// The result is canonical: rows of the reduced echelon form of `U` taken
/// modulo the echelon basis of `W`. Fails with the first vector of `W` that
/// lies outside `span U`.
pub fn quotient_basis(u: &[BitVec], w: &[BitVec]) -> Result<Vec<BitVec>, LinalgError> {
    let len = u.first().or(w.first()).map_or(0, BitVec::len);
    let su = Subspace::spanned_by(len, u)?;
    let sw = Subspace::spanned_by(len, w)?;
    for v in w {
        if !su.contains(v) {
            return Err(LinalgError::NotSubspace {
                offending: v.clone(),
            });
        }
    }
    let rem: Vec<BitVec> = su.basis().iter().map(|b| sw.reduce(b)).collect();
    let reps = F2Matrix::from_rows_unchecked(len, rem).rref().into_basis();
    debug_assert_eq!(reps.len(), su.dim() - sw.dim());
    Ok(reps)
}
