//! Parsing of coefficient expressions and structure files.

mod parser;
mod structure;

use thiserror::Error;

pub use parser::{parse_expr, parse_expr_in};
pub use structure::{parse_structure, StructureDoc};

/// A syntax error at a byte offset of the source text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

/// Problems with a structure document as a whole.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("malformed structure document: {0}")]
    Malformed(String),
    #[error("{0}")]
    Variables(String),
    #[error("bad connection key `{0}` (expected c_ab with c, a, b in 1..2)")]
    BadKey(String),
    #[error("in connection entry `{key}`: {error}")]
    Expression { key: String, error: ParseError },
    #[error("entries `{first}` and `{second}` differ; the connection must be torsion-free")]
    Asymmetric { first: String, second: String },
}
