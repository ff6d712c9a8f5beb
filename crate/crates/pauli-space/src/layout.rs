use std::fmt;

/// Position of a qubit: a lattice site plus a slot within the site.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QubitIndex {
    pub site: Vec<usize>,
    pub slot: usize,
}

impl fmt::Display for QubitIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.site.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ";{})", self.slot)
    }
}

/// Linearization of the qubits of a `d`-dimensional `L`-torus with `n`
/// qubits per site.
///
/// Sites are numbered row-major (first coordinate most significant) and the
/// qubit index is `site * n + slot`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Layout {
    pub d: usize,
    pub l: usize,
    pub n: usize,
}

impl Layout {
    #[must_use]
    pub fn new(d: usize, l: usize, n: usize) -> Self {
        Layout { d, l, n }
    }

    #[must_use]
    pub fn num_sites(&self) -> usize {
        self.l.pow(self.d as u32)
    }

    #[must_use]
    pub fn num_qubits(&self) -> usize {
        self.num_sites() * self.n
    }

    /// Row-major site number of unreduced coordinates, wrapping mod `L`.
    #[must_use]
    pub fn site_index(&self, coords: &[i64]) -> usize {
        assert_eq!(coords.len(), self.d, "coordinate rank mismatch");
        let l = self.l as i64;
        coords
            .iter()
            .fold(0usize, |acc, &c| acc * self.l + c.rem_euclid(l) as usize)
    }

    #[must_use]
    pub fn site_coords(&self, mut site: usize) -> Vec<usize> {
        let mut out = vec![0; self.d];
        for c in out.iter_mut().rev() {
            *c = site % self.l;
            site /= self.l;
        }
        out
    }

    /// All sites in row-major order.
    pub fn sites(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.num_sites()).map(|s| self.site_coords(s))
    }

    #[must_use]
    pub fn qubit(&self, coords: &[i64], slot: usize) -> usize {
        assert!(slot < self.n, "slot {slot} out of range for n = {}", self.n);
        self.site_index(coords) * self.n + slot
    }

    #[must_use]
    pub fn index_of(&self, q: &QubitIndex) -> Option<usize> {
        if q.site.len() != self.d || q.slot >= self.n || q.site.iter().any(|&c| c >= self.l) {
            return None;
        }
        let coords: Vec<i64> = q.site.iter().map(|&c| c as i64).collect();
        Some(self.qubit(&coords, q.slot))
    }

    #[must_use]
    pub fn qubit_index(&self, q: usize) -> QubitIndex {
        QubitIndex {
            site: self.site_coords(q / self.n),
            slot: q % self.n,
        }
    }
}
