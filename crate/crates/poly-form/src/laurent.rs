use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

use crate::PolyError;

/// Variable names used by the text form, in axis order.
pub const VARIABLES: [char; 4] = ['x', 'y', 'z', 'w'];

/// A Laurent polynomial over GF(2) in `d` variables, stored as its set of
/// exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    d: usize,
    terms: BTreeSet<Vec<i64>>,
}

impl LaurentPoly {
    #[must_use]
    pub fn zero(d: usize) -> Self {
        LaurentPoly {
            d,
            terms: BTreeSet::new(),
        }
    }

    #[must_use]
    pub fn one(d: usize) -> Self {
        Self::monomial(vec![0; d])
    }

    #[must_use]
    pub fn monomial(exponents: Vec<i64>) -> Self {
        LaurentPoly {
            d: exponents.len(),
            terms: BTreeSet::from([exponents]),
        }
    }

    /// `e_k`, the shift by one along axis `k`.
    #[must_use]
    pub fn var(d: usize, k: usize) -> Self {
        let mut e = vec![0; d];
        e[k] = 1;
        Self::monomial(e)
    }

    /// Sum of the given monomials; repeated exponents cancel in pairs.
    ///
    /// # Panics
    /// If an exponent vector does not have length `d`.
    pub fn from_terms<I: IntoIterator<Item = Vec<i64>>>(d: usize, terms: I) -> Self {
        let mut p = LaurentPoly::zero(d);
        for t in terms {
            p.toggle(t);
        }
        p
    }

    fn toggle(&mut self, t: Vec<i64>) {
        assert_eq!(t.len(), self.d, "exponent vector has the wrong length");
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    #[must_use]
    pub fn num_vars(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.terms.iter()
    }

    #[must_use]
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[must_use]
    pub fn contains(&self, exponents: &[i64]) -> bool {
        self.terms.contains(exponents)
    }

    /// Negates every exponent vector.
    #[must_use]
    pub fn antipode(&self) -> Self {
        LaurentPoly {
            d: self.d,
            terms: self.terms.iter().map(|t| t.iter().map(|e| -e).collect()).collect(),
        }
    }

    /// `p^(2^k)`. Over GF(2) squaring doubles every exponent, since the cross
    /// terms come in pairs.
    #[must_use]
    pub fn frobenius_power(&self, k: u32) -> Self {
        let scale = 1i64 << k;
        LaurentPoly {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|t| t.iter().map(|e| e * scale).collect())
                .collect(),
        }
    }

    /// Multiplies by the monomial with the given exponents.
    #[must_use]
    pub fn shift(&self, by: &[i64]) -> Self {
        LaurentPoly {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|t| t.iter().zip(by).map(|(a, b)| a + b).collect())
                .collect(),
        }
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.d, other.d, "polynomials in different variable counts");
    }

    /// Parses the text form, e.g. `1+x~y+z^2`. `~` after a variable inverts
    /// it, `^k` raises to a power, and `0` is the zero polynomial.
    pub fn parse(text: &str, d: usize) -> Result<Self, PolyError> {
        if d > VARIABLES.len() {
            return Err(PolyError::TooManyVariables(d));
        }
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "0" {
            return Ok(LaurentPoly::zero(d));
        }
        let mut p = LaurentPoly::zero(d);
        for term in text.split('+') {
            p.toggle(parse_monomial(term, d)?);
        }
        Ok(p)
    }
}

fn parse_monomial(term: &str, d: usize) -> Result<Vec<i64>, PolyError> {
    let bad = |why: &'static str| PolyError::Parse {
        text: term.to_owned(),
        reason: why,
    };
    if term.is_empty() {
        return Err(bad("empty term"));
    }
    let mut exps = vec![0i64; d];
    if term == "1" {
        return Ok(exps);
    }
    let chars: Vec<char> = term.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let axis = VARIABLES[..d]
            .iter()
            .position(|&v| v == chars[i])
            .ok_or_else(|| bad("unknown variable"))?;
        i += 1;
        let mut sign = 1;
        if chars.get(i) == Some(&'~') {
            sign = -1;
            i += 1;
        }
        let mut power = 1i64;
        if chars.get(i) == Some(&'^') {
            i += 1;
            let start = i;
            if chars.get(i) == Some(&'-') {
                i += 1;
            }
            while chars.get(i).is_some_and(char::is_ascii_digit) {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            power = digits.parse().map_err(|_| bad("bad exponent"))?;
        }
        exps[axis] += sign * power;
    }
    Ok(exps)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, t: &[i64]) -> fmt::Result {
    if t.iter().all(|&e| e == 0) {
        return f.write_str("1");
    }
    for (k, &e) in t.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = VARIABLES.get(k).copied().unwrap_or('?');
        write!(f, "{name}")?;
        if e < 0 {
            f.write_str("~")?;
        }
        if e.abs() != 1 {
            write!(f, "^{}", e.abs())?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write_monomial(f, t)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        LaurentPoly {
            d: self.d,
            terms: self.terms.symmetric_difference(&rhs.terms).cloned().collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        let mut out = LaurentPoly::zero(self.d);
        for a in &self.terms {
            for b in &rhs.terms {
                out.toggle(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, 3).unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("1+x~").to_string(), "x~+1");
        assert_eq!(p("x^2 y~^3").to_string(), "x^2y~^3");
        assert_eq!(p("x^-2").to_string(), "x~^2");
        assert_eq!(p("x+x").to_string(), "0");
        assert_eq!(p("0"), LaurentPoly::zero(3));
        assert!(LaurentPoly::parse("q", 3).is_err());
        assert!(LaurentPoly::parse("z", 2).is_err());
        assert!(LaurentPoly::parse("1++x", 3).is_err());
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(p("1").antipode(), p("1"));
        assert_eq!(p("x+y~").antipode(), p("x~+y"));
    }

    #[test]
    fn square_of_four_terms() {
        let q = p("1+x+y+z");
        assert_eq!(&q * &q, p("1+x^2+y^2+z^2"));
        assert_eq!(q.frobenius_power(0), q);
        assert_eq!(q.frobenius_power(2), p("1+x^4+y^4+z^4"));
    }

    #[test]
    fn factorization_used_for_the_cube() {
        assert_eq!(&p("1+y") * &p("1+z"), p("1+y+z+yz"));
    }
}
