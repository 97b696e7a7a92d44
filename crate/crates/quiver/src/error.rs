use thiserror::Error;

use algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("vertex `{0}` is frozen")]
    FrozenVertex(String),
    #[error("mutation at `{0}` requires integral weights on its row")]
    NonIntegralRow(String),
    #[error("amalgamation pairs overlap at `{0}`")]
    OverlappingPairs(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("coordinate at `{0}` takes a value where the mutation map is undefined")]
    DisallowedValue(String),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub(crate) fn format_err(line: usize, msg: impl Into<String>) -> QuiverError {
    QuiverError::Format {
        line,
        msg: msg.into(),
    }
}
