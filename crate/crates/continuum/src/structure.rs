use std::fmt;
use std::str::FromStr;

use code_factory::Family;
use poly_form::builtin_map;

use crate::{f2_to_continuum, ContinuumError, DiffOpMatrix, DiffPoly, PositionPoly, SignConfig};

type Z = DiffPoly<i64>;
type M = DiffOpMatrix<i64>;
type X = PositionPoly<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ContinuumFamily {
    /// Static U(1): potentials `(A0, A1, A2, A3)`, fields `(E, B)`.
    U1Static,
    /// U(1) in four dimensions with the antisymmetric tensor `F_{μν}`.
    U1Spacetime,
    /// Its adjoint: antisymmetric tensor potentials, `ε∂` as the field map.
    U1Adjoint,
    Xcube,
    Haah,
}

impl ContinuumFamily {
    pub const ALL: [ContinuumFamily; 5] = [
        ContinuumFamily::U1Static,
        ContinuumFamily::U1Spacetime,
        ContinuumFamily::U1Adjoint,
        ContinuumFamily::Xcube,
        ContinuumFamily::Haah,
    ];

    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            ContinuumFamily::U1Static => "u1_static",
            ContinuumFamily::U1Spacetime => "u1_4d",
            ContinuumFamily::U1Adjoint => "u1_adjoint",
            ContinuumFamily::Xcube => "xcube",
            ContinuumFamily::Haah => "haah",
        }
    }
}

impl fmt::Display for ContinuumFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ContinuumFamily {
    type Err = ContinuumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ContinuumFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| ContinuumError::UnknownFamily(s.to_owned()))
    }
}

/// Pairs of field rows `(p, q, s)` over which the form reads
/// `s (F_p G_q - F_q G_p)`, or `s (F_p G_q + F_q G_p)` when symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pairs: Vec<(usize, usize, i64)>,
    symmetric: bool,
}

impl Pairing {
    /// Row `i` of the first sector against row `k + i` of the second.
    #[must_use]
    pub fn split(k: usize) -> Self {
        Pairing {
            pairs: (0..k).map(|i| (i, k + i, 1)).collect(),
            symmetric: false,
        }
    }

    #[must_use]
    pub fn new(pairs: Vec<(usize, usize, i64)>, symmetric: bool) -> Self {
        Pairing { pairs, symmetric }
    }

    /// `ε_{αβμν} F^{αβ} G^{μν}` on the six components `01, 02, 03, 12, 13, 23`.
    #[must_use]
    pub fn theta() -> Self {
        Pairing::new(vec![(0, 5, 1), (1, 4, -1), (2, 3, 1)], true)
    }

    #[must_use]
    pub fn pairs(&self) -> &[(usize, usize, i64)] {
        &self.pairs
    }

    #[must_use]
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// The constant matrix `J` of the form on `rows` field components.
    pub fn matrix(&self, d: usize, rows: usize) -> Result<M, ContinuumError> {
        let mut used = vec![false; rows];
        let mut j = M::zeros(d, rows, rows);
        for &(p, q, s) in &self.pairs {
            if p >= rows || q >= rows || p == q {
                return Err(ContinuumError::Pairing(format!("pair ({p}, {q}) on {rows} rows")));
            }
            if std::mem::replace(&mut used[p], true) || std::mem::replace(&mut used[q], true) {
                return Err(ContinuumError::Pairing(format!("row reused in pair ({p}, {q})")));
            }
            j.set(p, q, Z::constant(d, s));
            j.set(q, p, Z::constant(d, if self.symmetric { s } else { -s }));
        }
        if used.iter().any(|u| !u) {
            return Err(ContinuumError::Pairing(format!(
                "{} of {rows} rows are paired",
                used.iter().filter(|u| **u).count()
            )));
        }
        Ok(j)
    }
}

/// One checked identity; `residual` is `None` when it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub residual: Option<String>,
}

impl IdentityCheck {
    #[must_use]
    pub fn passed(&self) -> bool {
        self.residual.is_none()
    }

    fn of_matrix(name: impl Into<String>, m: &M) -> Self {
        IdentityCheck {
            name: name.into(),
            residual: (!m.is_zero()).then(|| m.to_string()),
        }
    }

    fn of_functions(name: impl Into<String>, v: &[X]) -> Self {
        let residual = v
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| format!("row {i}: {p}"))
            .collect::<Vec<_>>();
        IdentityCheck {
            name: name.into(),
            residual: (!residual.is_empty()).then(|| residual.join("; ")),
        }
    }
}

/// A field map `phi` between spaces carrying the plain `L²` pairing, with an
/// optional symplectic pairing of field rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuumGaugeStructure {
    pub name: String,
    pub phi: M,
    pub pairing: Option<Pairing>,
    /// Global sign `s` in `maxwell = s · adj(phi) · phi`.
    pub maxwell_sign: i64,
}

impl ContinuumGaugeStructure {
    /// The charge map dual to `phi` under the `L²` pairings.
    #[must_use]
    pub fn psi(&self) -> M {
        self.phi.formal_adjoint()
    }

    #[must_use]
    pub fn maxwell(&self) -> M {
        self.psi()
            .mul(&self.phi)
            .expect("adjoint shape matches")
            .scale(&self.maxwell_sign)
    }

    /// `adj(phi) · J · phi`, zero exactly when the structure is symplectic.
    pub fn symplectic_residual(&self) -> Result<M, ContinuumError> {
        let pairing = self
            .pairing
            .as_ref()
            .ok_or_else(|| ContinuumError::Pairing(format!("{} has no sector pairing", self.name)))?;
        let j = pairing.matrix(self.phi.num_vars(), self.phi.rows())?;
        let jp = j.mul(&self.phi)?;
        self.psi().mul(&jp)
    }

    pub fn is_symplectic(&self) -> Result<bool, ContinuumError> {
        Ok(self.symplectic_residual()?.is_zero())
    }

    /// `phi` applied to a column of test functions.
    #[must_use]
    pub fn apply(&self, a: &[X]) -> Vec<X> {
        apply(&self.phi, a)
    }

    /// Every operator identity known for this structure.
    #[must_use]
    pub fn conservation_identities(&self) -> Vec<IdentityCheck> {
        let Ok(family) = self.name.parse::<ContinuumFamily>() else {
            return Vec::new();
        };
        let d = self.phi.num_vars();
        let mx = self.maxwell();
        let mut out = Vec::new();
        match family {
            ContinuumFamily::U1Static | ContinuumFamily::U1Spacetime => {
                let base = usize::from(family == ContinuumFamily::U1Static);
                let mut div = M::zeros(d, 1, mx.rows());
                for mu in base..mx.rows() {
                    div.set(0, mu, Z::partial(d, mu - base));
                }
                out.push(IdentityCheck::of_matrix(
                    "continuity: divergence of the current vanishes",
                    &div.mul(&mx).expect("row times square"),
                ));
                let f = sample_function(d);
                let mut a = vec![X::zero(d); self.phi.cols()];
                for mu in base..a.len() {
                    a[mu] = f.apply(&Z::partial(d, mu - base));
                }
                out.push(IdentityCheck::of_functions("pure gauge: phi(grad f) = 0", &self.apply(&a)));
            }
            ContinuumFamily::U1Adjoint => {
                let div = tensor_divergence(d);
                out.push(IdentityCheck::of_matrix(
                    "tensor continuity: ∂_ν J^{μν} = 0",
                    &div.mul(&mx).expect("divergence shape"),
                ));
                let f: Vec<X> = (0..d).map(|i| sample_function(d).mul(&X::var(d, i))).collect();
                let a: Vec<X> = PAIRS4
                    .iter()
                    .map(|&(m, n)| &f[n].apply(&Z::partial(d, m)) - &f[m].apply(&Z::partial(d, n)))
                    .collect();
                out.push(IdentityCheck::of_functions("pure gauge: phi(d a) = 0", &self.apply(&a)));
            }
            ContinuumFamily::Xcube => {
                let sum = mx
                    .row_block(1, 2)
                    .add(&mx.row_block(2, 3))
                    .and_then(|s| s.add(&mx.row_block(3, 4)))
                    .expect("rows share a shape");
                out.push(IdentityCheck::of_matrix("j1 + j2 + j3 = 0", &sum));
                for (row, (i, j)) in [(0, (0, 1)), (0, (0, 2)), (0, (1, 2)), (1, (1, 2)), (2, (2, 0)), (3, (0, 1))] {
                    out.push(transverse(&mx, row, i, j));
                }
                let f = sample_function(d);
                let a = [X::zero(d), f.clone(), f.clone(), f];
                out.push(IdentityCheck::of_functions("kernel: phi(0, f, f, f) = 0", &self.apply(&a)));
                let lin = &(&X::var(d, 0) + &X::var(d, 1)) + &X::var(d, 2);
                let a0 = [lin, X::zero(d), X::zero(d), X::zero(d)];
                out.push(IdentityCheck::of_functions("kernel: phi(x1 + x2 + x3, 0, 0, 0) = 0", &self.apply(&a0)));
            }
            ContinuumFamily::Haah => {
                for (label, c) in haah_witnesses() {
                    let a = [c.clone(), c];
                    out.push(IdentityCheck::of_functions(format!("kernel: phi({label}, {label}) = 0"), &self.apply(&a)));
                    out.push(IdentityCheck::of_functions(
                        format!("moment: maxwell({label}, {label}) = 0"),
                        &apply(&mx, &a),
                    ));
                }
            }
        }
        out
    }
}

fn apply(m: &M, a: &[X]) -> Vec<X> {
    assert_eq!(a.len(), m.cols(), "test function has the wrong number of components");
    (0..m.rows())
        .map(|r| {
            (0..m.cols()).fold(X::zero(m.num_vars()), |acc, c| &acc + &a[c].apply(m.get(r, c)))
        })
        .collect()
}

/// `x1^2 x2 x3 + x3^3`, enough degree to survive second-order operators.
fn sample_function(d: usize) -> X {
    let mut e = vec![0; d];
    e[0] = 2;
    e[1] = 1;
    e[2] = 1;
    let mut cube = vec![0; d];
    cube[d - 1] = 3;
    &X::monomial(e, 1) + &X::monomial(cube, 1)
}

fn haah_witnesses() -> Vec<(&'static str, X)> {
    let x = |i| X::var(3, i);
    vec![
        ("1", X::constant(3, 1)),
        ("x1 - x2", &x(0) - &x(1)),
        ("x2 - x3", &x(1) - &x(2)),
    ]
}

/// Monomials of row `row` with no derivative in symbol `i` or `j`.
fn transverse(mx: &M, row: usize, i: usize, j: usize) -> IdentityCheck {
    let d = mx.num_vars();
    let mut residual = M::zeros(d, 1, mx.cols());
    for c in 0..mx.cols() {
        let mut keep = Z::zero(d);
        for (k, v) in mx.get(row, c).terms() {
            if k[i] == 0 && k[j] == 0 {
                keep = &keep + &Z::monomial(k.clone(), *v);
            }
        }
        residual.set(0, c, keep);
    }
    IdentityCheck::of_matrix(
        format!("transverse integral of j{row} over x{} x{} vanishes", i + 1, j + 1),
        &residual,
    )
}

const PAIRS4: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn levi_civita(idx: [usize; 4]) -> i64 {
    let mut sign = 1;
    for a in 0..4 {
        for b in a + 1..4 {
            match idx[a].cmp(&idx[b]) {
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    sign
}

/// `4 x 6` divergence of an antisymmetric tensor stored by its pairs.
fn tensor_divergence(d: usize) -> M {
    let mut m = M::zeros(d, 4, 6);
    for (p, &(a, b)) in PAIRS4.iter().enumerate() {
        m.set(a, p, Z::partial(d, b));
        m.set(b, p, -&Z::partial(d, a));
    }
    m
}

fn u1_static() -> M {
    let d = |i| Z::partial(3, i);
    let z = Z::zero(3);
    let n = |i| -&d(i);
    M::from_rows(
        3,
        vec![
            vec![n(0), z.clone(), z.clone(), z.clone()],
            vec![n(1), z.clone(), z.clone(), z.clone()],
            vec![n(2), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), n(2), d(1)],
            vec![z.clone(), d(2), z.clone(), n(0)],
            vec![z.clone(), n(1), d(0), z],
        ],
    )
    .expect("static U(1) matrix is rectangular")
}

/// `phi_{μν} = ∂_μ A_ν - ∂_ν A_μ` on the six pairs `μ < ν`.
fn u1_spacetime() -> M {
    let mut m = M::zeros(4, 6, 4);
    for (p, &(mu, nu)) in PAIRS4.iter().enumerate() {
        m.set(p, nu, Z::partial(4, mu));
        m.set(p, mu, -&Z::partial(4, nu));
    }
    m
}

/// `(phi A)_α = ε_{αβμν} ∂_β A^{μν}` summed over pairs `μ < ν`.
fn u1_adjoint() -> M {
    let mut m = M::zeros(4, 4, 6);
    for alpha in 0..4 {
        for (p, &(mu, nu)) in PAIRS4.iter().enumerate() {
            let mut e = Z::zero(4);
            for beta in 0..4 {
                let s = levi_civita([alpha, beta, mu, nu]);
                if s != 0 {
                    e = &e + &Z::partial(4, beta).scale(&s);
                }
            }
            m.set(alpha, p, e);
        }
    }
    m
}

#[must_use]
pub fn builtin_continuum(family: ContinuumFamily) -> ContinuumGaugeStructure {
    let from_lattice = |f: Family| {
        f2_to_continuum(&builtin_map(f), &SignConfig::default_for(f)).expect("default signs fit the built-in map")
    };
    let (phi, pairing, maxwell_sign) = match family {
        ContinuumFamily::U1Static => (u1_static(), Some(Pairing::split(3)), -1),
        ContinuumFamily::U1Spacetime => (
            u1_spacetime(),
            Some(Pairing::theta()),
            -1,
        ),
        ContinuumFamily::U1Adjoint => (u1_adjoint(), None, -1),
        ContinuumFamily::Xcube => (from_lattice(Family::Xcube), Some(Pairing::split(3)), 1),
        ContinuumFamily::Haah => (from_lattice(Family::Haah), Some(Pairing::split(2)), 1),
    };
    ContinuumGaugeStructure {
        name: family.name().to_owned(),
        phi,
        pairing,
        maxwell_sign,
    }
}

/// Continuum Haah map with every `∂²_mix` entry replaced by
/// `∂²_mix - 2∂_[111]`.
#[must_use]
pub fn bulmash_perturbed() -> ContinuumGaugeStructure {
    let mut gs = builtin_continuum(ContinuumFamily::Haah);
    let mix = Z::partial_mix();
    let shifted = &mix - &Z::partial_111().scale(&2);
    for r in 0..gs.phi.rows() {
        for c in 0..gs.phi.cols() {
            if gs.phi.get(r, c) == &mix {
                gs.phi.set(r, c, shifted.clone());
            }
        }
    }
    gs.name = "haah_bulmash".to_owned();
    gs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levi_civita_signs() {
        assert_eq!(levi_civita([0, 1, 2, 3]), 1);
        assert_eq!(levi_civita([1, 0, 2, 3]), -1);
        assert_eq!(levi_civita([1, 2, 3, 0]), -1);
        assert_eq!(levi_civita([0, 0, 2, 3]), 0);
    }

    #[test]
    fn pairing_must_cover_every_row() {
        assert!(Pairing::split(2).matrix(3, 4).is_ok());
        assert!(Pairing::split(2).matrix(3, 6).is_err());
        assert!(Pairing::new(vec![(0, 1, 1), (1, 2, 1)], false).matrix(3, 4).is_err());
    }

    #[test]
    fn adjoint_u1_is_divergence_free() {
        let phi = u1_adjoint();
        let div = tensor_divergence(4);
        // ε∂ applied to an exact tensor vanishes, so phi after d is zero
        assert!(phi.mul(&u1_spacetime()).unwrap().is_zero());
        assert_eq!((div.rows(), div.cols()), (4, 6));
    }
}
