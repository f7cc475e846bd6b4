use thiserror::Error;

/// Errors surfaced by the engine.  Checker failures are *not* errors (they
/// are report data); errors signal bad input, blown enumeration caps, or an
/// internal invariant violation.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("unknown or undeclared connective `{0}`")]
    UnknownConnective(String),

    #[error("connective `{symbol}` expects {expected} argument(s), got {got}")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        got: usize,
    },

    #[error("invalid language spec: {0}")]
    InvalidLanguage(String),

    #[error("sentence `{0}` is not part of the language")]
    UnknownSentence(String),

    #[error("enumeration cap exceeded: needs {needed}, cap is {cap}")]
    CapExceeded { needed: u64, cap: u64 },

    #[error("sets belong to languages of different sizes ({0} vs {1})")]
    WidthMismatch(usize, usize),

    #[error("index {index} is not a member of the index set 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("family lacks the finite intersection property: {0}")]
    FipViolation(String),

    #[error("operator rejected: {0}")]
    InvalidOperator(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
