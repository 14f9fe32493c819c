use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(
        "{origin}: malformed JSON at line {line}, column {column}: {message}\n  {line} | {snippet}"
    )]
    Parse {
        origin: String,
        line: usize,
        column: usize,
        snippet: String,
        message: String,
    },
    #[error("{origin}: {message}")]
    Format { origin: String, message: String },
    #[error("{origin}: {source}")]
    Validation {
        origin: String,
        #[source]
        source: qnet_core::Error,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn format(origin: &str, message: impl Into<String>) -> Self {
        Error::Format {
            origin: origin.to_owned(),
            message: message.into(),
        }
    }

    pub(crate) fn validation(origin: &str, source: qnet_core::Error) -> Self {
        Error::Validation {
            origin: origin.to_owned(),
            source,
        }
    }

    pub(crate) fn parse(origin: &str, raw: &str, e: &serde_json::Error) -> Self {
        let line = e.line();
        let snippet = raw
            .lines()
            .nth(line.saturating_sub(1))
            .unwrap_or("")
            .chars()
            .take(120)
            .collect();
        let message = e.to_string();
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_owned(),
            None => message,
        };
        Error::Parse {
            origin: origin.to_owned(),
            line,
            column: e.column(),
            snippet,
            message,
        }
    }

    /// Replaces the generic document label with a file path.
    pub(crate) fn at(self, path: &std::path::Path) -> Self {
        let o = path.display().to_string();
        match self {
            Error::Parse {
                line,
                column,
                snippet,
                message,
                ..
            } => Error::Parse {
                origin: o,
                line,
                column,
                snippet,
                message,
            },
            Error::Format { message, .. } => Error::Format { origin: o, message },
            Error::Validation { source, .. } => Error::Validation { origin: o, source },
            io => io,
        }
    }

    /// Process exit code for this failure class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Format { .. } => 1,
            Error::Validation { .. } => 2,
            Error::Io { .. } => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
