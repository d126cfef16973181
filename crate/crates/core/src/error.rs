use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("non-split: {0}")]
    NonSplit(String),
    #[error("catalog gap: {0}")]
    CatalogGap(String),
    #[error("degree {requested} exceeds the degree bound {bound}")]
    DegreeOverflow { requested: usize, bound: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular: {0}")]
    Singular(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, msg: msg.into() }
    }

    /// Replaces an unknown (zero) line number.
    pub fn at_line(self, line: usize) -> Error {
        match self {
            Error::Parse { line: 0, msg } => Error::Parse { line, msg },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
