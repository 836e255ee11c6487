use std::path::PathBuf;

use thiserror::Error;

use crate::spec::ValidationReport;

pub type Result<T, E = HbgError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum HbgError {
    #[error("invalid chord-index spec: {0}")]
    InvalidSpec(ValidationReport),

    #[error("label {label} out of range 1..={order}")]
    LabelOutOfRange { label: usize, order: usize },

    #[error("traversal root {root} out of range 1..={max}")]
    RootOutOfRange { root: usize, max: usize },

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("degenerate chords: {0}")]
    DegenerateChords(String),

    #[error("invalid search task: {0}")]
    InvalidTask(String),

    #[error("invalid order range: {0}")]
    InvalidRange(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("corrupt store {path}: line {line}: {reason}")]
    CorruptStore {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("parse error at line {line}: {reason}")]
    ParseError { line: usize, reason: String },

    #[error("odd order {order} rejected at line {line}")]
    OddOrderRejected { line: usize, order: u64 },

    #[error("girth {0} is outside the embedded bounds table")]
    OutOfTable(usize),

    #[error("unsupported export format `{0}`")]
    UnsupportedFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
