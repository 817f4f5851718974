use thiserror::Error;

/// CLI failure classes; each maps to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable/undecodable inputs, empty corpora, output I/O failures.
    #[error("{0}")]
    Input(String),
    /// Bad flags, bad config file values, invalid grids or guards.
    #[error("{0}")]
    Config(String),
    /// Numeric breakdown inside the pipeline (non-finite criteria).
    #[error("{0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Config(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

impl From<qpaint_core::Error> for CliError {
    fn from(err: qpaint_core::Error) -> Self {
        use qpaint_core::Error as E;
        match &err {
            E::Read { .. } | E::Write { .. } | E::EmptyCollection => {
                CliError::Input(err.to_string())
            }
            E::NonFiniteCriterion => CliError::Numeric(err.to_string()),
            _ => CliError::Config(err.to_string()),
        }
    }
}
