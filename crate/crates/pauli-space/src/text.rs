//! Text form: whitespace-separated tokens `X@(c1,..,cd;slot)`, `Z@(..)` and
//! `Y@(..)`. The identity prints as `I`. Repeated tokens multiply.

use std::fmt::Write;

use crate::{Layout, PauliOperator, QubitIndex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad Pauli token `{token}`: {reason}")]
pub struct ParseError {
    pub token: String,
    pub reason: &'static str,
}

fn err(token: &str, reason: &'static str) -> ParseError {
    ParseError {
        token: token.to_owned(),
        reason,
    }
}

impl PauliOperator {
    /// Prints in qubit order, one token per qubit in the support.
    #[must_use]
    pub fn to_text(&self, layout: &Layout) -> String {
        let mut out = String::new();
        for q in self.support().iter_ones() {
            let letter = match (self.x_part().get(q), self.z_part().get(q)) {
                (true, true) => 'Y',
                (true, false) => 'X',
                _ => 'Z',
            };
            if !out.is_empty() {
                out.push(' ');
            }
            write!(out, "{letter}@{}", layout.qubit_index(q)).expect("writing to a String");
        }
        if out.is_empty() {
            out.push('I');
        }
        out
    }

    pub fn parse_text(text: &str, layout: &Layout) -> Result<PauliOperator, ParseError> {
        let n = layout.num_qubits();
        let mut p = PauliOperator::identity(n);
        for token in text.split_whitespace() {
            if token == "I" {
                continue;
            }
            let (letter, rest) = token
                .split_once('@')
                .ok_or_else(|| err(token, "expected LETTER@(coords;slot)"))?;
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| err(token, "missing parentheses"))?;
            let (coords, slot) = inner
                .split_once(';')
                .ok_or_else(|| err(token, "missing `;slot`"))?;
            let site = coords
                .split(',')
                .map(|c| c.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| err(token, "bad coordinate"))?;
            let slot = slot
                .trim()
                .parse::<usize>()
                .map_err(|_| err(token, "bad slot"))?;
            let q = layout
                .index_of(&QubitIndex { site, slot })
                .ok_or_else(|| err(token, "qubit outside the lattice"))?;
            let single = match letter {
                "X" => PauliOperator::single_x(n, q),
                "Z" => PauliOperator::single_z(n, q),
                "Y" => PauliOperator::single_y(n, q),
                _ => return Err(err(token, "letter must be X, Y or Z")),
            };
            p.add_assign(&single);
        }
        Ok(p)
    }
}
