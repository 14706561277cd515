use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex ({row}, {col}) out of range for a {rows}x{cols} grid")]
    VertexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("part {0} is empty")]
    EmptyPart(usize),

    /// A named precondition of an operation was violated.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// The instance is degenerate (e.g. zero total weight).
    #[error("degenerate instance: {0}")]
    Degenerate(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
