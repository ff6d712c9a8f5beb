use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, Signed};

/// Scalars usable as operator coefficients.
pub trait Coefficient: Num + Signed + Clone + fmt::Debug + fmt::Display + From<i64> {}

impl<T> Coefficient for T where T: Num + Signed + Clone + fmt::Debug + fmt::Display + From<i64> {}

/// A constant-coefficient differential operator in `d` commuting symbols.
///
/// Terms are keyed by the multi-index of derivative orders; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiffPoly<T> {
    d: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

pub(crate) fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| SUBSCRIPTS[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

fn superscript(n: u32) -> String {
    n.to_string()
        .chars()
        .map(|c| SUPERSCRIPTS[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

/// Index printed for symbol 0: four-symbol operators are read as spacetime
/// and start at `∂₀`, all others start at `∂₁`.
#[must_use]
pub fn symbol_base(d: usize) -> usize {
    if d == 4 {
        0
    } else {
        1
    }
}

impl<T: Coefficient> DiffPoly<T> {
    #[must_use]
    pub fn zero(d: usize) -> Self {
        DiffPoly {
            d,
            terms: BTreeMap::new(),
        }
    }

    #[must_use]
    pub fn constant(d: usize, c: T) -> Self {
        Self::monomial(vec![0; d], c)
    }

    #[must_use]
    pub fn monomial(orders: Vec<u32>, c: T) -> Self {
        let mut p = DiffPoly {
            d: orders.len(),
            terms: BTreeMap::new(),
        };
        p.add_term(orders, c);
        p
    }

    /// `∂_i` for the 0-based symbol `i`.
    #[must_use]
    pub fn partial(d: usize, i: usize) -> Self {
        let mut e = vec![0; d];
        e[i] = 1;
        Self::monomial(e, T::one())
    }

    /// `∂₁ + ∂₂ + ∂₃`.
    #[must_use]
    pub fn partial_111() -> Self {
        (0..3).fold(Self::zero(3), |acc, i| &acc + &Self::partial(3, i))
    }

    /// `∂₁∂₂ + ∂₂∂₃ + ∂₁∂₃`.
    #[must_use]
    pub fn partial_mix() -> Self {
        let d = |i| Self::partial(3, i);
        &(&(&d(0) * &d(1)) + &(&d(1) * &d(2))) + &(&d(0) * &d(2))
    }

    pub(crate) fn add_term(&mut self, orders: Vec<u32>, c: T) {
        assert_eq!(orders.len(), self.d, "multi-index has the wrong length");
        let sum = self.coeff(&orders) + c;
        if sum.is_zero() {
            self.terms.remove(&orders);
        } else {
            self.terms.insert(orders, sum);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    #[must_use]
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    #[must_use]
    pub fn coeff(&self, orders: &[u32]) -> T {
        self.terms.get(orders).cloned().unwrap_or_else(T::zero)
    }

    /// Highest total order, or `None` for the zero operator.
    #[must_use]
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.iter().sum()).max()
    }

    #[must_use]
    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.d);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Integration by parts: every term picks up `(-1)^order`.
    #[must_use]
    pub fn adjoint(&self) -> Self {
        DiffPoly {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let odd = k.iter().sum::<u32>() % 2 == 1;
                    (k.clone(), if odd { -v.clone() } else { v.clone() })
                })
                .collect(),
        }
    }

    #[must_use]
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.d, T::one()), |acc, _| &acc * self)
    }

    pub fn map_coeffs<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> DiffPoly<U> {
        let mut out = DiffPoly::zero(self.d);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    /// Terms in printing order: higher total order first, then by
    /// multi-index with earlier symbols first.
    #[must_use]
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &T)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by_key(|(k, _)| (Reverse(k.iter().sum::<u32>()), Reverse((*k).clone())));
        t
    }

    fn fmt_monomial(&self, k: &[u32]) -> String {
        let base = symbol_base(self.d);
        let mut s = String::new();
        for (i, &e) in k.iter().enumerate() {
            if e == 0 {
                continue;
            }
            s.push('∂');
            s.push_str(&subscript(i + base));
            if e > 1 {
                s.push_str(&superscript(e));
            }
        }
        s
    }
}

impl DiffPoly<i64> {
    /// Drops every term whose coefficient is even.
    #[must_use]
    pub fn drop_even(&self) -> Self {
        DiffPoly {
            d: self.d,
            terms: self
                .terms
                .iter()
                .filter(|(_, v)| **v % 2 != 0)
                .map(|(k, v)| (k.clone(), *v))
                .collect(),
        }
    }
}

impl<T: Coefficient> fmt::Display for DiffPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.sorted_terms().into_iter().enumerate() {
            let neg = v.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("−")?,
                (0, false) => {}
                (_, true) => f.write_str(" − ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = v.abs();
            let mono = self.fmt_monomial(k);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

impl<T: Coefficient> fmt::Debug for DiffPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffPoly({self})")
    }
}

impl<T: Coefficient> Add for &DiffPoly<T> {
    type Output = DiffPoly<T>;

    fn add(self, rhs: &DiffPoly<T>) -> DiffPoly<T> {
        assert_eq!(self.d, rhs.d, "operators in different symbol counts");
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl<T: Coefficient> Sub for &DiffPoly<T> {
    type Output = DiffPoly<T>;

    fn sub(self, rhs: &DiffPoly<T>) -> DiffPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Coefficient> Neg for &DiffPoly<T> {
    type Output = DiffPoly<T>;

    fn neg(self) -> DiffPoly<T> {
        DiffPoly {
            d: self.d,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }
}

impl<T: Coefficient> Mul for &DiffPoly<T> {
    type Output = DiffPoly<T>;

    fn mul(self, rhs: &DiffPoly<T>) -> DiffPoly<T> {
        assert_eq!(self.d, rhs.d, "operators in different symbol counts");
        let mut out = DiffPoly::zero(self.d);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let k = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(k, x.clone() * y.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type Z = DiffPoly<i64>;

    #[test]
    fn printing() {
        let d = |i| Z::partial(3, i);
        let p = &(&d(0) * &d(0)) - &d(2).scale(&2);
        assert_eq!(p.to_string(), "∂₁² − 2∂₃");
        assert_eq!((-&d(1)).to_string(), "−∂₂");
        assert_eq!(Z::zero(3).to_string(), "0");
        assert_eq!(Z::partial(4, 0).to_string(), "∂₀");
    }

    #[test]
    fn adjoint_signs() {
        let d = |i| Z::partial(3, i);
        assert_eq!(d(0).adjoint(), -&d(0));
        let dd = &d(0) * &d(1);
        assert_eq!(dd.adjoint(), dd);
    }

    #[test]
    fn mix_is_half_the_difference_of_squares() {
        type Q = DiffPoly<Rational64>;
        let d111 = Q::partial_111();
        let lap = (0..3).fold(Q::zero(3), |acc, i| &acc + &Q::partial(3, i).pow(2));
        let half = Rational64::new(1, 2);
        assert_eq!((&d111.pow(2) - &lap).scale(&half), Q::partial_mix());
    }

    #[test]
    fn zero_terms_disappear() {
        let d = Z::partial(3, 0);
        assert!((&d - &d).is_zero());
        assert_eq!(d.scale(&2).drop_even(), Z::zero(3));
    }
}
