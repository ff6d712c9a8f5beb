use code_factory::Family;
use poly_form::{LaurentPoly, StabilizerMap};

use crate::{ContinuumError, DiffOpMatrix, DiffPoly};

/// Signs applied during the substitution.
///
/// `sigma` is the sign in `e_i -> 1 + sigma ∂_i`; `entries[r][c]` multiplies
/// the result in entry `(r, c)` after the even terms are gone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignConfig {
    pub sigma: i64,
    pub entries: Vec<Vec<i64>>,
}

impl SignConfig {
    /// All signs `+1`.
    #[must_use]
    pub fn uniform(rows: usize, cols: usize) -> Self {
        SignConfig {
            sigma: 1,
            entries: vec![vec![1; cols]; rows],
        }
    }

    /// Signs under which the built-in maps give the standard continuum
    /// matrices.
    #[must_use]
    pub fn default_for(family: Family) -> Self {
        let entries: Vec<Vec<i64>> = match family {
            Family::Toric2 => vec![vec![1, 0], vec![1, 0], vec![0, -1], vec![0, 1]],
            Family::Toric3 => vec![
                vec![1, 0, 0, 0],
                vec![1, 0, 0, 0],
                vec![1, 0, 0, 0],
                vec![0, 0, -1, 1],
                vec![0, 1, 0, -1],
                vec![0, -1, 1, 0],
            ],
            Family::Xcube => vec![
                vec![-1, 0, 0, 0],
                vec![-1, 0, 0, 0],
                vec![-1, 0, 0, 0],
                vec![0, 0, -1, 1],
                vec![0, 1, 0, -1],
                vec![0, -1, 1, 0],
            ],
            Family::Haah => vec![vec![1, 0], vec![1, 0], vec![0, 1], vec![0, -1]],
        };
        // zero entries of the map take sign +1, it never matters
        SignConfig {
            sigma: 1,
            entries: entries
                .into_iter()
                .map(|r| r.into_iter().map(|s| if s == 0 { 1 } else { s }).collect())
                .collect(),
        }
    }

    /// Looks up the family by map name, falling back to all `+1`.
    #[must_use]
    pub fn default_for_map(map: &StabilizerMap) -> Self {
        match map.name().parse::<Family>() {
            Ok(f) if builtin_shape(f) == (map.matrix().rows(), map.num_types()) => Self::default_for(f),
            _ => Self::uniform(map.matrix().rows(), map.num_types()),
        }
    }
}

fn builtin_shape(f: Family) -> (usize, usize) {
    let (_, n) = f.shape();
    let types = match f {
        Family::Toric2 | Family::Haah => 2,
        Family::Toric3 | Family::Xcube => 4,
    };
    (2 * n, types)
}

/// Replaces `e_i^a` by `(1 + sigma ∂_i)^a` for `a >= 0` and by
/// `(1 - sigma ∂_i)^|a|` otherwise, expanded over the integers.
#[must_use]
pub fn substitute(p: &LaurentPoly, sigma: i64) -> DiffPoly<i64> {
    let d = p.num_vars();
    let one = DiffPoly::constant(d, 1);
    let mut out = DiffPoly::zero(d);
    for t in p.terms() {
        let mut mono = one.clone();
        for (i, &a) in t.iter().enumerate() {
            let s = if a >= 0 { sigma } else { -sigma };
            let factor = &one + &DiffPoly::partial(d, i).scale(&s);
            mono = &mono * &factor.pow(a.unsigned_abs() as u32);
        }
        out = &out + &mono;
    }
    out
}

/// The continuum operator matrix of a stabilizer map: substitute, delete
/// every even coefficient, then apply the entry signs.
pub fn f2_to_continuum(map: &StabilizerMap, signs: &SignConfig) -> Result<DiffOpMatrix<i64>, ContinuumError> {
    let m = map.matrix();
    let got = (signs.entries.len(), signs.entries.first().map_or(0, Vec::len));
    if got != (m.rows(), m.cols()) || signs.entries.iter().any(|r| r.len() != m.cols()) {
        return Err(ContinuumError::SignShape {
            got,
            want: (m.rows(), m.cols()),
        });
    }
    let d = m.num_vars();
    let mut out = DiffOpMatrix::zeros(d, m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let p = substitute(m.get(r, c), signs.sigma).drop_even();
            out.set(r, c, p.scale(&signs.entries[r][c]));
        }
    }
    Ok(out)
}
