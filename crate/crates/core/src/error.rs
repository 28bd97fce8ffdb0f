use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token `{token}`: {reason}")]
    MalformedToken { token: String, reason: String },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("strand count must be at least 1")]
    NoStrands,

    #[error("move not applicable at position {pos}: {reason}")]
    NotApplicable { pos: usize, reason: String },

    #[error("word is split: generator s{missing} never occurs")]
    SplitWord { missing: usize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}
