use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{0}")]
    Args(String),
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", .path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("malformed summary: {0}")]
    Parse(String),
    #[error("solver error on {problem} run {run}: {message}")]
    Solve {
        problem: String,
        run: usize,
        message: String,
    },
}

impl BenchError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 1 for bad arguments, 2 for I/O, 3 for a run that could not finish.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Args(_) => 1,
            Self::Solve { .. } => 3,
            _ => 2,
        }
    }
}
