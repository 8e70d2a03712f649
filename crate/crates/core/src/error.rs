use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,

    #[error("focus index {index} is out of range for a sequence of length {len}")]
    FocusOutOfRange { index: usize, len: usize },

    #[error("deletion position {position} is out of range for a word of length {len}")]
    DeletionOutOfRange { position: usize, len: usize },

    #[error("unsupported stem {0:?}: only vowel-final stems can be inflected")]
    UnsupportedStem(String),

    #[error("rule syntax error on line {line}: {message}")]
    RuleSyntax { line: usize, message: String },

    #[error("readings syntax error on line {line}: {message}")]
    ReadingSyntax { line: usize, message: String },

    #[error("a reading set must contain at least one reading")]
    EmptyReadingSet,
}
