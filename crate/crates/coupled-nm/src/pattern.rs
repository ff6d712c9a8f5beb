use std::fmt;

use f2_linalg::BitVec;
use serde::{Deserialize, Serialize};

use crate::system::{Color, Torus};

/// A GF(2) assignment to the three layers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    l: usize,
    bits: BitVec,
}

#[derive(Serialize, Deserialize)]
struct PatternJson {
    #[serde(rename = "L")]
    l: usize,
    red: Vec<Vec<u8>>,
    green: Vec<Vec<u8>>,
    blue: Vec<Vec<u8>>,
}

impl Pattern {
    #[must_use]
    pub fn from_bits(l: usize, bits: BitVec) -> Self {
        assert_eq!(bits.len(), 3 * l * l, "pattern has the wrong length");
        Pattern { l, bits }
    }

    #[must_use]
    pub fn empty(l: usize) -> Self {
        Pattern::from_bits(l, BitVec::zeros(3 * l * l))
    }

    #[must_use]
    pub fn all_ones(l: usize) -> Self {
        Pattern::from_bits(l, BitVec::ones(3 * l * l))
    }

    #[must_use]
    pub fn size(&self) -> usize {
        self.l
    }

    #[must_use]
    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.bits.is_zero()
    }

    fn torus(&self) -> Torus {
        Torus { l: self.l }
    }

    #[must_use]
    pub fn get(&self, color: Color, s: usize, t: usize) -> bool {
        self.bits.get(self.torus().index(color, s, t))
    }

    /// Value at a point `u` of the flattened plane.
    #[must_use]
    pub fn at(&self, u: (i64, i64)) -> bool {
        self.bits.get(self.torus().reduce(u))
    }

    /// The pattern moved by `du` in the flattened plane.
    #[must_use]
    pub fn translate(&self, du: (i64, i64)) -> Pattern {
        let torus = self.torus();
        let mut out = BitVec::zeros(self.bits.len());
        for idx in self.bits.iter_ones() {
            let (a, b) = torus.point(idx);
            out.set(torus.reduce((a + du.0, b + du.1)), true);
        }
        Pattern::from_bits(self.l, out)
    }

    fn layer(&self, color: Color) -> Vec<Vec<u8>> {
        (0..self.l)
            .map(|s| (0..self.l).map(|t| u8::from(self.get(color, s, t))).collect())
            .collect()
    }

    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PatternJson {
            l: self.l,
            red: self.layer(Color::Red),
            green: self.layer(Color::Green),
            blue: self.layer(Color::Blue),
        })
        .expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, serde_json::Error> {
        let p: PatternJson = serde_json::from_value(value.clone())?;
        let mut bits = BitVec::zeros(3 * p.l * p.l);
        let torus = Torus { l: p.l };
        for (color, layer) in [(Color::Red, &p.red), (Color::Green, &p.green), (Color::Blue, &p.blue)] {
            if layer.len() != p.l || layer.iter().any(|r| r.len() != p.l) {
                return Err(serde::de::Error::custom(format!("{} layer is not {}x{}", color.name(), p.l, p.l)));
            }
            for (s, row) in layer.iter().enumerate() {
                for (t, &v) in row.iter().enumerate() {
                    bits.set(torus.index(color, s, t), v != 0);
                }
            }
        }
        Ok(Pattern::from_bits(p.l, bits))
    }
}

impl fmt::Display for Pattern {
    /// The three layers side by side, one row per `t`, sheared so the grid
    /// reads as a triangular lattice.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.l;
        let width = 2 * l + l;
        let header: Vec<String> = Color::ALL.iter().map(|c| format!("{:<width$}", c.name())).collect();
        writeln!(f, "{}", header.join("  ").trim_end())?;
        for t in (0..l).rev() {
            let mut line = String::new();
            for (i, &c) in Color::ALL.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                let mut cell = " ".repeat(t);
                for s in 0..l {
                    cell.push(if self.get(c, s, t) { '#' } else { '.' });
                    cell.push(' ');
                }
                line.push_str(&format!("{cell:<width$}"));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}
