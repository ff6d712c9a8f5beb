use pauli_space::{Layout, ParseError, PauliOperator};
use serde::{Deserialize, Serialize};

use crate::{Boundary, CodeError, Family, Stabilizer, StabilizerCode};

/// One stabilizer of an explicit list, in the text format of `pauli-space`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerText {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<Vec<usize>>,
    pub text: String,
}

/// On-disk description of a code.
///
/// Without `stabilizers` the family constructor is used. With an explicit
/// list the lattice shape comes from `d` and `n`, falling back to the
/// family's shape when those are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescription {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(default)]
    pub boundary: Boundary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilizers: Option<Vec<StabilizerText>>,
}

#[derive(Debug, thiserror::Error)]
pub enum DescribeError {
    #[error("malformed description: {0}")]
    Json(#[from] serde_json::Error),
    #[error("description needs a family or both `d` and `n`")]
    MissingShape,
    #[error("stabilizer {index}: {source}")]
    Parse { index: usize, source: ParseError },
    #[error(transparent)]
    Code(#[from] CodeError),
}

impl CodeDescription {
    /// Description that rebuilds `code` through its family constructor.
    #[must_use]
    pub fn of_family(family: Family, l: usize, boundary: Boundary) -> Self {
        CodeDescription {
            family: Some(family),
            l,
            boundary,
            d: None,
            n: None,
            stabilizers: None,
        }
    }

    /// Description listing every stabilizer of `code` explicitly.
    #[must_use]
    pub fn explicit(code: &StabilizerCode) -> Self {
        let lay = &code.layout;
        CodeDescription {
            family: code.name.parse().ok(),
            l: lay.l,
            boundary: code.boundary.clone(),
            d: Some(lay.d),
            n: Some(lay.n),
            stabilizers: Some(
                code.stabilizers
                    .iter()
                    .map(|s| StabilizerText {
                        label: Some(s.label.clone()),
                        anchor: Some(s.anchor.clone()),
                        text: s.op.to_text(lay),
                    })
                    .collect(),
            ),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, DescribeError> {
        Ok(serde_json::from_str(text)?)
    }

    #[must_use]
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("description serializes")
    }

    /// Builds the code and checks the stabilizer-set conditions.
    pub fn load(&self) -> Result<StabilizerCode, DescribeError> {
        let code = match (&self.stabilizers, self.family) {
            (None, Some(f)) => f.build(self.l, &self.boundary)?,
            (None, None) => return Err(DescribeError::MissingShape),
            (Some(list), family) => {
                let shape = family.map(Family::shape);
                let d = self.d.or(shape.map(|s| s.0)).ok_or(DescribeError::MissingShape)?;
                let n = self.n.or(shape.map(|s| s.1)).ok_or(DescribeError::MissingShape)?;
                if self.l < 2 {
                    return Err(CodeError::SizeTooSmall(self.l).into());
                }
                let layout = Layout::new(d, self.l, n);
                // Kinds are numbered by first appearance of each label.
                let mut labels: Vec<String> = Vec::new();
                let stabilizers = list
                    .iter()
                    .enumerate()
                    .map(|(index, st)| {
                        let op = PauliOperator::parse_text(&st.text, &layout)
                            .map_err(|source| DescribeError::Parse { index, source })?;
                        let label = st.label.clone().unwrap_or_default();
                        let kind = labels.iter().position(|l| *l == label).unwrap_or_else(|| {
                            labels.push(label.clone());
                            labels.len() - 1
                        });
                        Ok(Stabilizer {
                            kind,
                            label,
                            anchor: st.anchor.clone().unwrap_or_default(),
                            op,
                        })
                    })
                    .collect::<Result<Vec<_>, DescribeError>>()?;
                StabilizerCode {
                    name: family.map_or_else(|| "custom".to_owned(), |f| f.name().to_owned()),
                    layout,
                    boundary: self.boundary.clone(),
                    stabilizers,
                }
            }
        };
        code.validate()?;
        Ok(code)
    }
}
