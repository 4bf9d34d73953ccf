use thiserror::Error;

/// Failures mapped onto the tool's exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse channel document: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Validation(#[from] chancoh::Error),

    #[error("internal consistency failure: {0}")]
    Internal(chancoh::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 parse, 3 validation, 4 internal identity or CPTP-at-t, 5 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Internal(_) => 4,
            CliError::Io { .. } => 5,
        }
    }
}

/// Sorts a library error into validation vs. internal failures.
pub(crate) fn classify_error(err: chancoh::Error) -> CliError {
    match err {
        chancoh::Error::InternalConsistency { .. } | chancoh::Error::NonCptpFrame { .. } => {
            CliError::Internal(err)
        }
        other => CliError::Validation(other),
    }
}
