use f2_linalg::BitVec;
use pauli_space::Layout;
use poly_form::LaurentPoly;

use crate::{NmError, Recurrence, Sector};

/// A set of stabilizers that every constraint of one sector meets an even
/// number of times: the support of `p^(2^k)` placed at `anchor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractalCondition {
    pub anchor: Vec<i64>,
    /// Sites of the set, reduced onto the torus.
    pub sites: Vec<Vec<usize>>,
    /// The same set over the stabilizer list of Haah's code.
    pub stabilizers: BitVec,
}

/// One condition per anchor site of the `L`-torus, for generation `k`.
pub fn fractal_conditions(
    rec: Recurrence,
    k: u32,
    l: usize,
    sector: Sector,
) -> Result<Vec<FractalCondition>, NmError> {
    if l < 2 {
        return Err(NmError::SizeTooSmall(l));
    }
    if k >= usize::BITS - 1 || (1usize << k) >= l {
        return Err(NmError::ScaleTooLarge { k, l });
    }
    let poly = LaurentPoly::parse(rec.polynomial(), 3)
        .expect("built-in polynomial parses")
        .frobenius_power(k);
    let sign = match sector {
        Sector::X => -1,
        Sector::Z => 1,
    };
    let layout = Layout::new(3, l, 2);
    let sites = layout.num_sites();
    let offset = sector.kind() * sites;
    let out = layout
        .sites()
        .map(|v| {
            let anchor: Vec<i64> = v.iter().map(|&x| x as i64).collect();
            let mut stabilizers = BitVec::zeros(2 * sites);
            let mut members = Vec::new();
            for m in poly.terms() {
                let w: Vec<i64> = anchor.iter().zip(m).map(|(a, b)| a + sign * b).collect();
                let idx = layout.site_index(&w);
                stabilizers.flip(offset + idx);
                members.push(layout.site_coords(idx));
            }
            FractalCondition {
                anchor,
                sites: members,
                stabilizers,
            }
        })
        .collect();
    Ok(out)
}
