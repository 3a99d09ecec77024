//! Document format, parallel enumeration and command-line front end for
//! [`qtopo_core`].

pub mod cli;
pub mod document;
pub mod output;
pub mod parallel;

pub use document::{parse_question, DocumentError, QuestionDocument};
pub use output::serialize_result;
