use f2_linalg::BitVec;
use pauli_space::{Layout, PauliOperator};

use crate::{attach_logicals, Boundary, CodeError, Family, Stabilizer, StabilizerCode};

#[derive(Clone, Copy, PartialEq, Eq)]
enum P {
    X,
    Z,
}

/// One single-qubit factor of a stabilizer, relative to its anchor.
struct Leg {
    offset: Vec<i64>,
    slot: usize,
    pauli: P,
}

fn leg(offset: &[i64], slot: usize, pauli: P) -> Leg {
    Leg {
        offset: offset.to_vec(),
        slot,
        pauli,
    }
}

fn unit(d: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; d];
    v[k] = 1;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

struct TypeSpec {
    label: String,
    legs: Vec<Leg>,
}

/// Expands each type over all anchors, dropping legs whose unreduced site
/// falls outside `[0, L)` along a cut axis.
fn assemble(
    name: String,
    layout: Layout,
    boundary: &Boundary,
    types: Vec<TypeSpec>,
) -> Result<StabilizerCode, CodeError> {
    let cuts: &[usize] = match boundary {
        Boundary::Periodic => &[],
        Boundary::Open { cuts, .. } => cuts,
    };
    if let Some(&axis) = cuts.iter().find(|&&a| a >= layout.d) {
        return Err(CodeError::BadCut { axis, d: layout.d });
    }
    let n = layout.num_qubits();
    let l = layout.l as i64;
    let mut stabilizers = Vec::with_capacity(types.len() * layout.num_sites());
    for (kind, t) in types.iter().enumerate() {
        for anchor in layout.sites() {
            let a: Vec<i64> = anchor.iter().map(|&c| c as i64).collect();
            let mut x = BitVec::zeros(n);
            let mut z = BitVec::zeros(n);
            for lg in &t.legs {
                let site = add(&a, &lg.offset);
                if cuts.iter().any(|&k| site[k] < 0 || site[k] >= l) {
                    continue;
                }
                let q = layout.qubit(&site, lg.slot);
                match lg.pauli {
                    P::X => x.flip(q),
                    P::Z => z.flip(q),
                }
            }
            stabilizers.push(Stabilizer {
                kind,
                label: t.label.clone(),
                anchor,
                op: PauliOperator::new(x, z),
            });
        }
    }
    Ok(StabilizerCode {
        name,
        layout,
        boundary: match boundary {
            Boundary::Periodic => Boundary::Periodic,
            Boundary::Open { cuts, .. } => Boundary::cut(cuts),
        },
        stabilizers,
    })
}

fn check_size(l: usize) -> Result<(), CodeError> {
    if l < 2 {
        Err(CodeError::SizeTooSmall(l))
    } else {
        Ok(())
    }
}

/// Toric code in `d = 2` or `3` dimensions.
///
/// Types: the vertex operator `X` on the `2d` incident edges, then one
/// plaquette type per coordinate plane (`Z` on the 4 boundary edges). In 3D
/// the planes are ordered by their normal axis, i.e. (y,z), (x,z), (x,y).
pub fn build_toric(l: usize, d: usize, boundary: &Boundary) -> Result<StabilizerCode, CodeError> {
    check_size(l)?;
    if d != 2 && d != 3 {
        return Err(CodeError::BadDimension(d));
    }
    let origin = vec![0; d];
    let mut types = vec![TypeSpec {
        label: "vertex".into(),
        legs: (0..d)
            .flat_map(|j| [leg(&origin, j, P::X), leg(&neg(&unit(d, j)), j, P::X)])
            .collect(),
    }];
    let mut planes: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| ((i + 1)..d).map(move |j| (i, j)))
        .collect();
    planes.reverse();
    for (i, j) in planes {
        types.push(TypeSpec {
            label: format!("plaquette{}{}", i + 1, j + 1),
            legs: vec![
                leg(&origin, i, P::Z),
                leg(&unit(d, j), i, P::Z),
                leg(&origin, j, P::Z),
                leg(&unit(d, i), j, P::Z),
            ],
        });
    }
    assemble(
        format!("toric{d}"),
        Layout::new(d, l, d),
        boundary,
        types,
    )
}

/// X-cube model on the 3-torus.
///
/// Types: the cube operator (`X` on the 12 edges of the cube whose lowest
/// corner is the anchor), then the three vertex crosses; cross `k` is `Z` on
/// the 4 edges at the anchor lying in the plane normal to axis `k`.
///
/// The open variant truncates along the requested cuts and then attaches
/// logical operators until no logical qubit remains, see [`attach_logicals`].
pub fn build_xcube(l: usize, boundary: &Boundary) -> Result<StabilizerCode, CodeError> {
    let code = xcube_truncated(l, boundary)?;
    match boundary {
        Boundary::Periodic => Ok(code),
        Boundary::Open { .. } => {
            let source = xcube_truncated(l, &Boundary::Periodic)?;
            attach_logicals(&source, code)
        }
    }
}

fn xcube_truncated(l: usize, boundary: &Boundary) -> Result<StabilizerCode, CodeError> {
    check_size(l)?;
    let o = [0i64; 3];
    let e = |k: usize| unit(3, k);
    let mut cube = Vec::new();
    for slot in 0..3 {
        let (a, b) = match slot {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        for off in [o.to_vec(), e(a), e(b), add(&e(a), &e(b))] {
            cube.push(leg(&off, slot, P::X));
        }
    }
    let mut types = vec![TypeSpec {
        label: "cube".into(),
        legs: cube,
    }];
    for k in 0..3 {
        let legs = (0..3)
            .filter(|&j| j != k)
            .flat_map(|j| [leg(&o, j, P::Z), leg(&neg(&e(j)), j, P::Z)])
            .collect();
        types.push(TypeSpec {
            label: format!("cross{}", k + 1),
            legs,
        });
    }
    assemble("xcube".into(), Layout::new(3, l, 3), boundary, types)
}

/// Haah's cubic code on the 3-torus, two qubits per site.
///
/// `g^x` at anchor `v` is `X` on slot 0 at `v + {0, e1, e2, e3}` and on slot 1
/// at `v + {0, e1+e2, e2+e3, e1+e3}`; `g^z` is `Z` on slot 0 at
/// `v - {0, e1+e2, e2+e3, e1+e3}` and on slot 1 at `v - {0, e1, e2, e3}`.
pub fn build_haah(l: usize) -> Result<StabilizerCode, CodeError> {
    haah_truncated(l, &Boundary::Periodic)
}

fn haah_truncated(l: usize, boundary: &Boundary) -> Result<StabilizerCode, CodeError> {
    check_size(l)?;
    let e = |k: usize| unit(3, k);
    let single = [vec![0i64; 3], e(0), e(1), e(2)];
    let pairs = [vec![0i64; 3], add(&e(0), &e(1)), add(&e(1), &e(2)), add(&e(0), &e(2))];
    let gx = single
        .iter()
        .map(|o| leg(o, 0, P::X))
        .chain(pairs.iter().map(|o| leg(o, 1, P::X)))
        .collect();
    let gz = pairs
        .iter()
        .map(|o| leg(&neg(o), 0, P::Z))
        .chain(single.iter().map(|o| leg(&neg(o), 1, P::Z)))
        .collect();
    assemble(
        "haah".into(),
        Layout::new(3, l, 2),
        boundary,
        vec![
            TypeSpec {
                label: "gx".into(),
                legs: gx,
            },
            TypeSpec {
                label: "gz".into(),
                legs: gz,
            },
        ],
    )
}

/// Plain box truncation of a family along `cuts`, with no further repair.
///
/// This is the raw material for open boundaries; for the X-cube model and
/// Haah's code the result generally still encodes logical qubits.
pub fn truncated(family: Family, l: usize, cuts: &[usize]) -> Result<StabilizerCode, CodeError> {
    let b = Boundary::cut(cuts);
    match family {
        Family::Toric2 => build_toric(l, 2, &b),
        Family::Toric3 => build_toric(l, 3, &b),
        Family::Xcube => xcube_truncated(l, &b),
        Family::Haah => haah_truncated(l, &b),
    }
}

/// Translates an operator by `shift`, wrapping around the torus.
#[must_use]
pub fn translate(layout: &Layout, op: &PauliOperator, shift: &[i64]) -> PauliOperator {
    let n = layout.num_qubits();
    let mv = |q: usize| {
        let qi = layout.qubit_index(q);
        let site: Vec<i64> = qi.site.iter().zip(shift).map(|(&c, s)| c as i64 + s).collect();
        layout.qubit(&site, qi.slot)
    };
    PauliOperator::new(
        BitVec::from_indices(n, op.x_part().iter_ones().map(mv)),
        BitVec::from_indices(n, op.z_part().iter_ones().map(mv)),
    )
}
