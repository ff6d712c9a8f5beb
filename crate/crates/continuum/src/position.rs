use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use crate::{Coefficient, DiffPoly};

/// A polynomial in the position symbols `x_1 .. x_d`, used as a test
/// function for differential operators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PositionPoly<T> {
    d: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Coefficient> PositionPoly<T> {
    #[must_use]
    pub fn zero(d: usize) -> Self {
        PositionPoly {
            d,
            terms: BTreeMap::new(),
        }
    }

    #[must_use]
    pub fn constant(d: usize, c: T) -> Self {
        Self::monomial(vec![0; d], c)
    }

    #[must_use]
    pub fn monomial(powers: Vec<u32>, c: T) -> Self {
        let mut p = PositionPoly {
            d: powers.len(),
            terms: BTreeMap::new(),
        };
        p.add_term(powers, c);
        p
    }

    /// `x_i` for the 0-based symbol `i`.
    #[must_use]
    pub fn var(d: usize, i: usize) -> Self {
        let mut e = vec![0; d];
        e[i] = 1;
        Self::monomial(e, T::one())
    }

    fn add_term(&mut self, powers: Vec<u32>, c: T) {
        let sum = self.terms.get(&powers).cloned().unwrap_or_else(T::zero) + c;
        if sum.is_zero() {
            self.terms.remove(&powers);
        } else {
            self.terms.insert(powers, sum);
        }
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.d
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[must_use]
    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.d);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.d);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.iter().zip(b).map(|(p, q)| p + q).collect(), x.clone() * y.clone());
            }
        }
        out
    }

    /// Applies a differential operator term by term.
    #[must_use]
    pub fn apply(&self, op: &DiffPoly<T>) -> Self {
        assert_eq!(op.num_vars(), self.d, "operator and function in different dimensions");
        let mut out = Self::zero(self.d);
        for (orders, c) in op.terms() {
            for (powers, v) in &self.terms {
                if orders.iter().zip(powers).any(|(k, m)| k > m) {
                    continue;
                }
                let mut coeff = c.clone() * v.clone();
                for (&k, &m) in orders.iter().zip(powers) {
                    for f in (m - k + 1)..=m {
                        coeff = coeff * T::from(i64::from(f));
                    }
                }
                let lowered = orders.iter().zip(powers).map(|(k, m)| m - k).collect();
                out.add_term(lowered, coeff);
            }
        }
        out
    }
}

impl<T: Coefficient> Add for &PositionPoly<T> {
    type Output = PositionPoly<T>;

    fn add(self, rhs: &PositionPoly<T>) -> PositionPoly<T> {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl<T: Coefficient> Sub for &PositionPoly<T> {
    type Output = PositionPoly<T>;

    fn sub(self, rhs: &PositionPoly<T>) -> PositionPoly<T> {
        self + &rhs.scale(&-T::one())
    }
}

impl<T: Coefficient> fmt::Display for PositionPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(if v.is_negative() { " - " } else { " + " })?;
            } else if v.is_negative() {
                f.write_str("-")?;
            }
            let mono: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            let mag = v.abs();
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&mono.join(" "))?,
                (false, false) => write!(f, "{mag} {}", mono.join(" "))?,
            }
        }
        Ok(())
    }
}

impl<T: Coefficient> fmt::Debug for PositionPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PositionPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type X = PositionPoly<i64>;

    #[test]
    fn derivative_of_a_cube() {
        let x = X::var(3, 0);
        let cube = x.mul(&x).mul(&x);
        let d = DiffPoly::partial(3, 0);
        assert_eq!(cube.apply(&d), x.mul(&x).scale(&3));
        assert_eq!(cube.apply(&d.pow(3)), X::constant(3, 6));
        assert!(cube.apply(&d.pow(4)).is_zero());
        assert!(cube.apply(&DiffPoly::partial(3, 1)).is_zero());
    }

    #[test]
    fn diagonal_derivative_kills_differences() {
        let f = &X::var(3, 0) - &X::var(3, 1);
        assert!(f.apply(&DiffPoly::partial_111()).is_zero());
        assert_eq!(f.to_string(), "x1 - x2");
    }
}
