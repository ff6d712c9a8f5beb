use f2_linalg::{BitVec, F2Matrix, Subspace};

use crate::{NmError, Pattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Green,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    /// Offset of the layer from the red vertex at the origin.
    #[must_use]
    pub fn offset(self) -> (i64, i64) {
        match self {
            Color::Red => (0, 0),
            Color::Green => (1, 0),
            Color::Blue => (1, 1),
        }
    }

    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Green => "green",
            Color::Blue => "blue",
        }
    }
}

/// The two four-point conditions, as offsets in the flattened plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Recurrence {
    /// From `1 + e1 + e2 + e3`.
    A,
    /// From `1 + e1 e2 + e2 e3 + e1 e3`.
    B,
}

impl Recurrence {
    pub const ALL: [Recurrence; 2] = [Recurrence::A, Recurrence::B];

    #[must_use]
    pub fn stencil(self) -> [(i64, i64); 4] {
        match self {
            Recurrence::A => [(0, 0), (-1, 0), (0, -1), (1, 1)],
            Recurrence::B => [(0, 0), (-1, -1), (1, 0), (0, 1)],
        }
    }

    /// The same condition as a polynomial in the three lattice directions.
    #[must_use]
    pub fn polynomial(self) -> &'static str {
        match self {
            Recurrence::A => "1+x+y+z",
            Recurrence::B => "1+xy+yz+xz",
        }
    }
}

/// The `3 L^2` points of the flattened plane modulo `L` times the red
/// sublattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Torus {
    pub l: usize,
}

impl Torus {
    pub fn len(self) -> usize {
        3 * self.l * self.l
    }

    pub fn index(self, color: Color, s: usize, t: usize) -> usize {
        let c = Color::ALL.iter().position(|&c| c == color).expect("listed");
        (c * self.l + s) * self.l + t
    }

    pub fn site(self, idx: usize) -> (Color, usize, usize) {
        let l = self.l;
        (Color::ALL[idx / (l * l)], (idx / l) % l, idx % l)
    }

    pub fn point(self, idx: usize) -> (i64, i64) {
        let (c, s, t) = self.site(idx);
        let (s, t) = (s as i64, t as i64);
        let (o1, o2) = c.offset();
        (o1 + s + t, o2 - s + 2 * t)
    }

    pub fn reduce(self, u: (i64, i64)) -> usize {
        let color = Color::ALL[(u.0 + u.1).rem_euclid(3) as usize];
        let (o1, o2) = color.offset();
        let (r1, r2) = (u.0 - o1, u.1 - o2);
        let l = self.l as i64;
        let s = ((2 * r1 - r2) / 3).rem_euclid(l) as usize;
        let t = ((r1 + r2) / 3).rem_euclid(l) as usize;
        self.index(color, s, t)
    }
}

/// The linear system of both conditions at every point of the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerSystem {
    l: usize,
    system: F2Matrix,
}

impl LayerSystem {
    #[must_use]
    pub fn size(&self) -> usize {
        self.l
    }

    #[must_use]
    pub fn num_variables(&self) -> usize {
        self.system.cols()
    }

    /// One row per (recurrence, point), recurrence-major.
    #[must_use]
    pub fn matrix(&self) -> &F2Matrix {
        &self.system
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    #[must_use]
    pub fn solutions(&self) -> Subspace {
        Subspace::spanned_by(self.num_variables(), &self.system.kernel_basis())
            .expect("kernel vectors have the variable count")
    }

    #[must_use]
    pub fn is_solution(&self, p: &Pattern) -> bool {
        self.system.mul_vec(p.bits()).is_zero()
    }
}

pub fn build_system(l: usize) -> Result<LayerSystem, NmError> {
    if l < 2 {
        return Err(NmError::SizeTooSmall(l));
    }
    let torus = Torus { l };
    let mut rows = Vec::with_capacity(2 * torus.len());
    for rec in Recurrence::ALL {
        for idx in 0..torus.len() {
            let u = torus.point(idx);
            let mut row = BitVec::zeros(torus.len());
            for (d1, d2) in rec.stencil() {
                row.flip(torus.reduce((u.0 + d1, u.1 + d2)));
            }
            rows.push(row);
        }
    }
    let system = F2Matrix::from_rows(torus.len(), rows).expect("rows have the variable count");
    Ok(LayerSystem { l, system })
}

/// Dimension of the solution space.
pub fn count_solutions(l: usize) -> Result<usize, NmError> {
    let s = build_system(l)?;
    Ok(s.num_variables() - s.rank())
}

/// The canonical echelon basis of the solutions.
pub fn enumerate_solutions(l: usize) -> Result<Vec<Pattern>, NmError> {
    Ok(build_system(l)?
        .solutions()
        .basis()
        .iter()
        .map(|b| Pattern::from_bits(l, b.clone()))
        .collect())
}
