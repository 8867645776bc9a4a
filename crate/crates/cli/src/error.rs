use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] relspin::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("serialisation failed: {0}")]
    Serialize(String),
}

impl CliError {
    /// 2 for usage and domain errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Model(e) if is_domain_error(e) => 2,
            _ => 1,
        }
    }
}

fn is_domain_error(e: &relspin::Error) -> bool {
    matches!(
        e,
        relspin::Error::SpeedOutOfRange(_)
            | relspin::Error::NonFiniteSpeed
            | relspin::Error::InfiniteRapidity
    )
}

pub type Result<T> = std::result::Result<T, CliError>;
