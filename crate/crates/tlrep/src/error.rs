use thiserror::Error;

/// Errors reported by the library.
///
/// `Domain` covers every "this object does not exist over that algebra"
/// situation (labels outside the weight set, malformed class parameters,
/// functors applied below their smallest algebra). `Parse` is reserved for
/// the textual module-expression grammar and carries the byte offset of the
/// offending token.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
