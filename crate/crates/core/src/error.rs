use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Malformed input data; `location` is a line number, feature index, or
    /// similar pointer into the offending file.
    #[error("parse error in {path} ({location}): {message}")]
    Parse {
        path: String,
        location: String,
        message: String,
    },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Configuration problems, all collected in one pass.
    #[error("invalid configuration:\n{}", .0.join("\n"))]
    Config(Vec<String>),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn parse(
        path: impl Into<String>,
        location: impl Into<String>,
        message: impl Into<String>,
    ) -> Self {
        Error::Parse {
            path: path.into(),
            location: location.into(),
            message: message.into(),
        }
    }

    /// Process exit code for the CLI: 1 config, 2 data, 3 numerical.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Config(_) => 1,
            Error::Io { .. } | Error::Parse { .. } | Error::Validation(_) => 2,
            Error::Numerical(_) => 3,
        }
    }
}
