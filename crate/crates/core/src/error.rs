use thiserror::Error;

use crate::types::ModelKind;

/// Errors raised by model evaluation and cohort construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssessError {
    #[error("a cohort must have at least one member")]
    EmptyCohort,

    #[error("frequencies must be nonnegative and sum to exactly 1 (got sum {sum})")]
    InvalidFrequencies { sum: String },

    #[error("{got} is not one of the fuzzy variations (GRFAM, TFAM, TpFAM)")]
    NotAVariation { got: ModelKind },

    #[error("GPA has no membership figure")]
    NoGeometry,

    #[error("cannot compare a {first} point with a {second} point")]
    MismatchedModels { first: ModelKind, second: ModelKind },

    #[error("figure has zero total area")]
    ZeroArea,

    #[error("integration resolution must be at least {min} (got {got})")]
    ResolutionTooLow { min: usize, got: usize },

    #[error("cannot rank an empty list of reports")]
    EmptyRanking,
}

/// Input errors from CSV ingestion and boundary configuration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}: {message}")]
    Row { line: u64, message: String },

    #[error("input contains no data rows")]
    Empty,

    #[error("score {score} is outside 0..=100")]
    ScoreOutOfRange { score: i64 },

    #[error("invalid grade boundaries: {0}")]
    Boundaries(String),

    #[error("csv: {0}")]
    Csv(String),
}

impl From<csv::Error> for InputError {
    fn from(err: csv::Error) -> Self {
        InputError::Csv(err.to_string())
    }
}

/// A runtime theorem check failed. Valid data can never trigger this; it
/// always indicates a bug in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invariant violated ({check}): {detail}")]
pub struct InvariantViolation {
    pub check: &'static str,
    pub detail: String,
}
