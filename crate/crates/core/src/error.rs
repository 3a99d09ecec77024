use alloc::string::String;
use core::fmt;

use crate::sets::AxiomViolation;

/// Errors produced by the question calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A label occurs twice in a ground set.
    DuplicateLabel(String),
    /// The label at this position is the empty string.
    EmptyLabel {
        /// Position of the offending label.
        index: usize,
    },
    /// More elements than a ground set can hold.
    TooManyElements {
        /// Number of labels supplied.
        requested: usize,
        /// Largest admitted size.
        max: usize,
    },
    /// A label that is not an element of the ground set.
    UnknownLabel(String),
    /// A family failed the topology axioms.
    Axiom(AxiomViolation),
    /// The ground set is too large to enumerate its topologies.
    EnumerationLimit {
        /// Size of the ground set asked for.
        size: usize,
        /// Largest enumerable size.
        max: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateLabel(label) => write!(f, "duplicate label `{label}`"),
            Error::EmptyLabel { index } => write!(f, "label at position {index} is empty"),
            Error::TooManyElements { requested, max } => {
                write!(f, "{requested} elements requested, at most {max} supported")
            }
            Error::UnknownLabel(label) => write!(f, "unknown label `{label}`"),
            Error::Axiom(v) => write!(f, "not a topology: {v}"),
            Error::EnumerationLimit { size, max } => {
                write!(
                    f,
                    "cannot enumerate topologies on {size} points (limit is {max})"
                )
            }
        }
    }
}

impl core::error::Error for Error {}

impl From<AxiomViolation> for Error {
    fn from(v: AxiomViolation) -> Self {
        Error::Axiom(v)
    }
}
