use thiserror::Error;

/// Errors raised while loading or validating a dataset.
///
/// Datasets with missing cells are rejected outright: none of the
/// downstream measures can handle defective records, so ingestion is the
/// single place where that constraint is enforced.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("missing value at row {row}, column '{column}' (empty, 'NA' or '?' cells are not supported)")]
    MissingValues { row: usize, column: String },

    #[error("target column '{0}' not found")]
    UnknownTarget(String),

    #[error("parse error in '{path}': {message}")]
    Parse { path: String, message: String },

    #[error("target column has a single class; at least two are required")]
    SingleClass,

    #[error("dataset has no predictive attributes")]
    NoAttributes,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl DataError {
    pub fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        DataError::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}
