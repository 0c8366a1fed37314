use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("part {0} is even where only odd parts are allowed")]
    EvenPart(u32),
    #[error("partition {0} is not strict")]
    NotStrict(String),
    #[error("index {0} must be odd")]
    EvenIndex(u32),
    #[error("unknown class label `{0}`")]
    UnknownLabel(String),
    #[error("label sets differ: {0} labels vs {1} labels")]
    LabelMismatch(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("group mismatch: `{0}` vs `{1}`")]
    GroupMismatch(String, String),
    #[error("group `{0}` has no character table")]
    MissingCharacterTable(String),
    #[error("no irreducible character with index {0}")]
    UnknownCharacter(usize),
    #[error("invalid group data: {0}")]
    InvalidGroup(String),
    #[error("invalid sector model: {0}")]
    InvalidModel(String),
    #[error("invalid cyclotomic literal `{0}`")]
    ParseCyclo(String),
    #[error("value {0} is not rational")]
    NotRational(String),
    #[error("64-bit rational overflow in {0}")]
    Overflow(&'static str),
    #[error("vector has length {0}, expected {1}")]
    DimensionMismatch(usize, usize),
    #[error("{0}")]
    Series(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: {message}")]
    Json {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    SerdeJson(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn json_at(path: impl Into<PathBuf>, err: serde_json::Error) -> Self {
        Error::Json {
            path: path.into(),
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}
