use f2_linalg::{BitVec, Subspace};
use itertools::Itertools;

use crate::F2GaugeStructure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Exact(usize),
    /// No nontrivial logical of weight up to `bound` exists.
    Unknown { bound: usize },
    /// The code encodes nothing.
    NoLogicals,
}

/// Walks qubit subsets by increasing size. For a subset `Q` the operators
/// supported inside `Q` that commute with every stabilizer form the kernel
/// of `Psi` restricted to the `2|Q|` bit columns of `Q`; if any kernel basis
/// vector lies outside `im phi`, some logical has weight at most `|Q|`.
pub(crate) fn search(gs: &F2GaugeStructure, max_weight: usize) -> Distance {
    let n = gs.num_qubits();
    let group = Subspace::spanned_by(2 * n, gs.code().bit_rows().row_vecs()).expect("length 2N");
    if group.dim() == n {
        return Distance::NoLogicals;
    }
    for w in 1..=max_weight.min(n) {
        for q in (0..n).combinations(w) {
            let cols: Vec<usize> = q.iter().copied().chain(q.iter().map(|&i| i + n)).collect();
            let restricted = gs.psi_matrix().select_columns(&cols);
            for v in restricted.kernel_basis() {
                let full = BitVec::from_indices(2 * n, v.iter_ones().map(|i| cols[i]));
                if !group.contains(&full) {
                    return Distance::Exact(w);
                }
            }
        }
    }
    Distance::Unknown { bound: max_weight }
}
