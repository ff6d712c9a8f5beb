use code_factory::build_haah;
use f2_linalg::{BitVec, Subspace};
use gauge_core::F2GaugeStructure;

use crate::{count_solutions, enumerate_solutions, NmError, Pattern};

/// Which stabilizer type a lifted pattern selects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sector {
    /// `g^x` at `v` whenever `A(v1 - v3, v2 - v3)` is set.
    X,
    /// `g^z` at `v` whenever `A(v3 - v1, v3 - v2)` is set.
    Z,
}

impl Sector {
    #[must_use]
    pub fn kind(self) -> usize {
        match self {
            Sector::X => 0,
            Sector::Z => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub sector: Sector,
    /// The stabilizer subset, indexed like the code's stabilizers.
    pub constraint: BitVec,
    /// Whether the product of the subset is the identity.
    pub verified: bool,
}

/// The pattern must be a function on the `L`-torus of Haah's code, i.e.
/// invariant under the images of `L e_i`.
fn check_periodic(p: &Pattern) -> Result<(), NmError> {
    let l = p.size() as i64;
    for du in [(l, 0), (0, l)] {
        if &p.translate(du) != p {
            return Err(NmError::NotPeriodic(p.size()));
        }
    }
    Ok(())
}

/// Extends the pattern along `(1,1,1)` into a stabilizer subset of Haah's
/// code on the same `L` and checks it multiplies to the identity.
pub fn lift_to_haah(p: &Pattern, sector: Sector, gs: &F2GaugeStructure) -> Result<Lift, NmError> {
    check_periodic(p)?;
    let code = gs.code();
    let layout = &code.layout;
    if layout.l != p.size() || layout.d != 3 || code.name != "haah" {
        return Err(NmError::WrongCode(p.size()));
    }
    let sites = layout.num_sites();
    let offset = sector.kind() * sites;
    let mut c = BitVec::zeros(code.len());
    for (i, v) in layout.sites().enumerate() {
        let v: Vec<i64> = v.iter().map(|&x| x as i64).collect();
        let u = match sector {
            Sector::X => (v[0] - v[2], v[1] - v[2]),
            Sector::Z => (v[2] - v[0], v[2] - v[1]),
        };
        if p.at(u) {
            c.set(offset + i, true);
        }
    }
    let verified = gs.is_constraint(&c);
    Ok(Lift {
        sector,
        constraint: c,
        verified,
    })
}

/// How many constraints of Haah's code the ansatz accounts for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnsatzGap {
    pub l: usize,
    /// Solutions of the layer system, per sector.
    pub layer_solutions: usize,
    /// Rank of all lifted patterns in both sectors.
    pub lifted: usize,
    pub dim_ker_phi: usize,
}

impl AnsatzGap {
    #[must_use]
    pub fn missing(&self) -> usize {
        self.dim_ker_phi - self.lifted
    }
}

/// Lifts every basis pattern in both sectors and compares with the full
/// constraint space. Fails if any lift is not a constraint.
pub fn ansatz_gap(l: usize) -> Result<AnsatzGap, NmError> {
    let gs = F2GaugeStructure::new(build_haah(l)?);
    let mut lifted = Vec::new();
    for p in enumerate_solutions(l)? {
        for sector in [Sector::X, Sector::Z] {
            let lift = lift_to_haah(&p, sector, &gs)?;
            assert!(lift.verified, "lifted pattern is not a constraint at L = {l}");
            lifted.push(lift.constraint);
        }
    }
    let span = Subspace::spanned_by(gs.num_stabilizers(), &lifted).expect("lifts have the stabilizer count");
    Ok(AnsatzGap {
        l,
        layer_solutions: count_solutions(l)?,
        lifted: span.dim(),
        dim_ker_phi: gs.constraint_space().dim(),
    })
}
