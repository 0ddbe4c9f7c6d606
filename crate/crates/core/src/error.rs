use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: malformed JSON: {message}")]
    MalformedJson { line: usize, message: String },

    #[error("line {line}: missing required field `{field}`")]
    MissingField { line: usize, field: &'static str },

    #[error("line {line}: invalid field `{field}`: {message}")]
    InvalidField {
        line: usize,
        field: &'static str,
        message: String,
    },

    #[error("line {line}: duplicate tweet id `{id}`")]
    DuplicateId { line: usize, id: String },

    #[error("line {line}: malformed judgment row: {message}")]
    MalformedJudgment { line: usize, message: String },

    #[error("line {line}: relevance thirds {value} outside 0..=3")]
    RelevanceOutOfRange { line: usize, value: i64 },

    #[error("line {line}: trust {value} outside -1..=1")]
    TrustOutOfRange { line: usize, value: i64 },

    #[error("cannot build corpus statistics from an empty document list")]
    EmptyDocuments,

    #[error("query `{0}` has no tokens")]
    EmptyQuery(String),

    #[error("candidate list is empty")]
    EmptyCandidates,

    #[error("vertex {index} out of range for graph with {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },

    #[error("tweet `{0}` in the top-k has no judgment")]
    Unjudged(String),

    #[error("requested size {size} exceeds corpus of {len} tweets")]
    SizeExceedsCorpus { size: usize, len: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
