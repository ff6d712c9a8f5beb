//! Plain-text field equations.
//!
//! The input syntax is ASCII: `d1 .. d9` are single derivatives (`d0` too
//! for four symbols), `d111` and `dmix` the diagonal and mixed operators,
//! `A0, A1, ..` the potentials and `jK = ...` names the row. Products are
//! written by juxtaposition and `^k` raises an operator to a power, so
//!
//! ```text
//! j1 = d2^2 (A3 - A1) - d3^2 (A1 - A2)
//! j0 = (dmix^2 - d111^2) A0
//! ```

use crate::diffpoly::subscript;
use crate::{symbol_base, ContinuumError, DiffOpMatrix, DiffPoly};

type Z = DiffPoly<i64>;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(i64),
    Partial(usize),
    D111,
    Mix,
    Potential(usize),
    Current(usize),
    Plus,
    Minus,
    Caret,
    Open,
    Close,
    Equals,
}

#[derive(Clone, Debug)]
enum Value {
    Op(Z),
    Row(Vec<Z>),
}

fn err(text: &str, reason: impl Into<String>) -> ContinuumError {
    ContinuumError::Parse {
        text: text.to_owned(),
        reason: reason.into(),
    }
}

fn digits(chars: &[char], mut i: usize) -> (usize, usize) {
    let start = i;
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    let n = chars[start..i].iter().collect::<String>().parse().unwrap_or(usize::MAX);
    (n, i)
}

fn tokenize(text: &str) -> Result<Vec<Token>, ContinuumError> {
    let chars: Vec<char> = text.chars().collect();
    let rest = |i: usize| chars[i..].iter().collect::<String>();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '*' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Token::Minus);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::Open);
                i += 1;
            }
            ')' => {
                out.push(Token::Close);
                i += 1;
            }
            '=' => {
                out.push(Token::Equals);
                i += 1;
            }
            '0'..='9' => {
                let (n, next) = digits(&chars, i);
                let n = i64::try_from(n).map_err(|_| err(text, "number too large"))?;
                out.push(Token::Num(n));
                i = next;
            }
            'd' => {
                let r = rest(i + 1);
                if r.starts_with("mix") {
                    out.push(Token::Mix);
                    i += 4;
                } else if r.starts_with("111") {
                    out.push(Token::D111);
                    i += 4;
                } else if let Some(k) = chars.get(i + 1).and_then(|c| c.to_digit(10)) {
                    out.push(Token::Partial(k as usize));
                    i += 2;
                } else {
                    return Err(err(text, format!("unknown derivative at `{}`", rest(i))));
                }
            }
            'A' | 'j' => {
                let skip = usize::from(chars.get(i + 1) == Some(&'_'));
                let (n, next) = digits(&chars, i + 1 + skip);
                if next == i + 1 + skip {
                    return Err(err(text, format!("`{c}` needs an index")));
                }
                out.push(if c == 'A' { Token::Potential(n) } else { Token::Current(n) });
                i = next;
            }
            _ => return Err(err(text, format!("unexpected `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    d: usize,
    cols: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn fail(&self, reason: impl Into<String>) -> ContinuumError {
        err(self.text, reason)
    }

    fn add(&self, a: Value, b: Value, negate: bool) -> Result<Value, ContinuumError> {
        let b = if negate { self.neg(b) } else { b };
        match (a, b) {
            (Value::Op(x), Value::Op(y)) => Ok(Value::Op(&x + &y)),
            (Value::Row(x), Value::Row(y)) => Ok(Value::Row(x.iter().zip(&y).map(|(p, q)| p + q).collect())),
            _ => Err(self.fail("adds an operator to a field term")),
        }
    }

    fn neg(&self, v: Value) -> Value {
        match v {
            Value::Op(x) => Value::Op(-&x),
            Value::Row(x) => Value::Row(x.iter().map(|p| -p).collect()),
        }
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value, ContinuumError> {
        match (a, b) {
            (Value::Op(x), Value::Op(y)) => Ok(Value::Op(&x * &y)),
            (Value::Op(x), Value::Row(r)) | (Value::Row(r), Value::Op(x)) => {
                Ok(Value::Row(r.iter().map(|p| &x * p).collect()))
            }
            (Value::Row(_), Value::Row(_)) => Err(self.fail("multiplies two potentials")),
        }
    }

    fn expr(&mut self) -> Result<Value, ContinuumError> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { self.neg(first) } else { first };
        while let Some(t) = self.peek() {
            let negate = match t {
                Token::Plus => false,
                Token::Minus => true,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            acc = self.add(acc, rhs, negate)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value, ContinuumError> {
        let mut acc = self.power()?;
        while matches!(
            self.peek(),
            Some(Token::Num(_) | Token::Partial(_) | Token::D111 | Token::Mix | Token::Potential(_) | Token::Open)
        ) {
            let rhs = self.power()?;
            acc = self.mul(acc, rhs)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Value, ContinuumError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let Some(Token::Num(k)) = self.bump() else {
            return Err(self.fail("`^` needs a number"));
        };
        match base {
            Value::Op(p) => Ok(Value::Op(p.pow(u32::try_from(k).map_err(|_| self.fail("exponent too large"))?))),
            Value::Row(r) if k == 1 => Ok(Value::Row(r)),
            Value::Row(_) => Err(self.fail("raises a potential to a power")),
        }
    }

    fn atom(&mut self) -> Result<Value, ContinuumError> {
        let d = self.d;
        match self.bump() {
            Some(Token::Num(n)) => Ok(Value::Op(Z::constant(d, n))),
            Some(Token::Partial(k)) => {
                let base = symbol_base(d);
                if k < base || k - base >= d {
                    return Err(self.fail(format!("d{k} is not a symbol here")));
                }
                Ok(Value::Op(Z::partial(d, k - base)))
            }
            Some(Token::D111) if d == 3 => Ok(Value::Op(Z::partial_111())),
            Some(Token::Mix) if d == 3 => Ok(Value::Op(Z::partial_mix())),
            Some(Token::D111 | Token::Mix) => Err(self.fail("d111 and dmix need three symbols")),
            Some(Token::Potential(k)) => {
                if k >= self.cols {
                    return Err(self.fail(format!("A{k} is out of range")));
                }
                let mut row = vec![Z::zero(d); self.cols];
                row[k] = Z::constant(d, 1);
                Ok(Value::Row(row))
            }
            Some(Token::Open) => {
                let v = self.expr()?;
                if self.bump() != Some(Token::Close) {
                    return Err(self.fail("unbalanced parentheses"));
                }
                Ok(v)
            }
            Some(t) => Err(self.fail(format!("unexpected {t:?}"))),
            None => Err(self.fail("unexpected end")),
        }
    }
}

fn parse_equation(text: &str, d: usize, cols: usize) -> Result<(usize, Vec<Z>), ContinuumError> {
    let tokens = tokenize(text)?;
    let (Some(Token::Current(k)), Some(Token::Equals)) = (tokens.first(), tokens.get(1)) else {
        return Err(err(text, "expected `jK = ...`"));
    };
    let k = *k;
    let mut p = Parser {
        text,
        tokens,
        pos: 2,
        d,
        cols,
    };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.fail("trailing input"));
    }
    match v {
        Value::Row(r) => Ok((k, r)),
        Value::Op(o) if o.is_zero() => Ok((k, vec![Z::zero(d); cols])),
        Value::Op(_) => Err(err(text, "right-hand side has no potential")),
    }
}

/// Parses one equation per line into the operator matrix they define. Each
/// row index must appear exactly once.
pub fn parse_equations(text: &str, d: usize, cols: usize) -> Result<DiffOpMatrix<i64>, ContinuumError> {
    let rows: Vec<(usize, Vec<Z>)> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| parse_equation(l, d, cols))
        .collect::<Result<_, _>>()?;
    let mut slots: Vec<Option<Vec<Z>>> = vec![None; rows.len()];
    for (k, r) in rows {
        match slots.get_mut(k) {
            Some(slot @ None) => *slot = Some(r),
            Some(Some(_)) => return Err(err(text, format!("j{k} appears twice"))),
            None => return Err(err(text, format!("j{k} is out of range"))),
        }
    }
    DiffOpMatrix::from_rows(d, slots.into_iter().map(|s| s.expect("every slot filled")).collect())
}

/// One line `jK = ...` per row of a Maxwell operator. A single-term
/// operator carries its sign; longer ones are bracketed, with a common minus
/// sign pulled out.
#[must_use]
pub fn render_maxwell(m: &DiffOpMatrix<i64>) -> String {
    let mut lines = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut line = format!("j{} = ", subscript(r));
        let mut first = true;
        for c in 0..m.cols() {
            let op = m.get(r, c);
            if op.is_zero() {
                continue;
            }
            let (neg, body) = if op.num_terms() == 1 {
                let (_, v) = op.sorted_terms()[0];
                (*v < 0, if *v < 0 { (-op).to_string() } else { op.to_string() })
            } else if op.terms().all(|(_, v)| *v < 0) {
                (true, format!("({})", -op))
            } else {
                (false, format!("({op})"))
            };
            match (first, neg) {
                (true, true) => line.push('−'),
                (true, false) => {}
                (false, true) => line.push_str(" − "),
                (false, false) => line.push_str(" + "),
            }
            line.push_str(&body);
            line.push_str(&format!(" A{}", subscript(c)));
            first = false;
        }
        if first {
            line.push('0');
        }
        lines.push(line);
    }
    lines.join("\n")
}
