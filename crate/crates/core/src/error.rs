use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word could not be parsed. `position` is 1-based.
    #[error("parse error at position {position}: unknown symbol {symbol:?}")]
    Parse { position: usize, symbol: char },

    /// A group or list file is malformed. `line` is 1-based.
    #[error("line {line}: {message}")]
    File { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// The group definition is unusable (for example a rewriting system
    /// that does not terminate within the step budget).
    #[error("configuration error: {0}")]
    Config(String),

    /// An enumeration exceeded its node budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A practical cap was reached before a verdict could be certified.
    #[error("cap reached: {0}")]
    CapReached(String),

    /// A theoretical guarantee failed to hold; usually a wrong δ or a
    /// violated precondition.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
