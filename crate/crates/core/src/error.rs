//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by any stage of the laboratory.
#[derive(Debug, Error)]
pub enum Error {
    /// A tensor or image had the wrong shape for the operation.
    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    DimMismatch {
        what: &'static str,
        expected: String,
        got: String,
    },

    /// Shape geometry falls outside the canvas.
    #[error("invalid scene geometry: {0}")]
    InvalidGeometry(String),

    /// A token id not present in the vocabulary.
    #[error("unknown token id {0}")]
    UnknownToken(u32),

    /// A concept name with no registered oracle rule.
    #[error("unknown concept `{0}`")]
    UnknownConcept(String),

    /// A trigger id with no registered synonym group.
    #[error("unknown trigger `{0}`")]
    UnknownTrigger(String),

    /// An operation was asked to work on an empty batch or dataset.
    #[error("empty input: {0}")]
    Empty(&'static str),

    /// A configuration value violates its precondition.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// A numeric quantity became non-finite.
    #[error("non-finite value in {0}")]
    NonFinite(String),

    /// Not enough poison triples to reach the requested injection ratio.
    #[error("insufficient poison supply: need {need}, have {have}")]
    InsufficientPoison { need: usize, have: usize },

    /// Feature collision could not satisfy its stealth budget.
    #[error("collision failed: {0}")]
    CollisionFailed(String),

    /// A serialized artifact is malformed.
    #[error("format error: {0}")]
    Format(String),

    /// A pipeline stage failed; the stage name is attached for diagnostics.
    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Wrap an error with the pipeline stage it occurred in.
    pub fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
