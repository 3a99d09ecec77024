//! The question document: a JSON object listing the ground set and the open
//! sets.
//!
//! ```json
//! {"elements":["m","s"],"opens":[[],["m"],["s"],["m","s"]]}
//! ```
//!
//! `[]` is the empty set. In canonical form the opens are sorted by bit value
//! (first element = lowest bit) and the labels of each open follow element
//! order.

use qtopo_core::{GroundSet, Subset, SubsetFamily, MAX_GROUND_SIZE};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Wire form of a question.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuestionDocument {
    /// Ground-set labels in bit order.
    pub elements: Vec<String>,
    /// Open sets as label lists.
    pub opens: Vec<Vec<String>>,
}

/// Why a document was rejected.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocumentError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    Malformed {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: duplicate element `{label}`")]
    DuplicateElement { field: String, label: String },
    #[error("{field}: empty element label")]
    EmptyElement { field: String },
    #[error("elements: {count} elements, at most {MAX_GROUND_SIZE} supported")]
    TooManyElements { count: usize },
    #[error("{field}: unknown label `{label}`")]
    UnknownLabel { field: String, label: String },
    #[error("{field}: label `{label}` repeated within one subset")]
    RepeatedLabel { field: String, label: String },
}

impl QuestionDocument {
    /// Canonical document for `family` over `ground`.
    pub fn from_family(ground: &GroundSet, family: &SubsetFamily) -> Self {
        QuestionDocument {
            elements: ground.labels().to_vec(),
            opens: family.iter().map(|s| subset_labels(ground, s)).collect(),
        }
    }

    /// Checks the document's invariants and builds the ground set and family.
    pub fn resolve(&self) -> Result<(GroundSet, SubsetFamily), DocumentError> {
        if self.elements.len() > MAX_GROUND_SIZE {
            return Err(DocumentError::TooManyElements {
                count: self.elements.len(),
            });
        }
        for (i, label) in self.elements.iter().enumerate() {
            let field = format!("elements[{i}]");
            if label.is_empty() {
                return Err(DocumentError::EmptyElement { field });
            }
            if self.elements[..i].contains(label) {
                return Err(DocumentError::DuplicateElement {
                    field,
                    label: label.clone(),
                });
            }
        }
        let ground =
            GroundSet::new(self.elements.iter().cloned()).expect("element list already validated");
        let mut members = Vec::with_capacity(self.opens.len());
        for (i, open) in self.opens.iter().enumerate() {
            let mut s = Subset::EMPTY;
            for (j, label) in open.iter().enumerate() {
                let field = format!("opens[{i}][{j}]");
                let Some(k) = ground.index_of(label) else {
                    return Err(DocumentError::UnknownLabel {
                        field,
                        label: label.clone(),
                    });
                };
                if s.contains(k) {
                    return Err(DocumentError::RepeatedLabel {
                        field,
                        label: label.clone(),
                    });
                }
                s = s.with(k);
            }
            members.push(s);
        }
        Ok((ground, members.into_iter().collect()))
    }
}

/// Labels of `s` in element order.
pub fn subset_labels(ground: &GroundSet, s: Subset) -> Vec<String> {
    ground.labels_of(s).map(str::to_owned).collect()
}

/// Parses a question document. Topology axioms are not checked here.
pub fn parse_question(text: &str) -> Result<(GroundSet, SubsetFamily), DocumentError> {
    let doc: QuestionDocument =
        serde_json::from_str(text).map_err(|e| DocumentError::Malformed {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    doc.resolve()
}
