use thiserror::Error;

use crate::notation::{FileError, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{rendered}")]
    Parse { error: ParseError, rendered: String },
    #[error("{0}")]
    File(#[from] FileError),
    #[error(transparent)]
    Engine(#[from] tangles::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn parse(error: ParseError, src: &str) -> Self {
        let rendered = error.render(src);
        CliError::Parse { error, rendered }
    }

    /// Process exit status for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::File(_) | CliError::Usage(_) => 2,
            CliError::Engine(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}
