use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An input lies outside the domain of the model (non-positive distance,
    /// coincident nodes, zero noise, infeasible power budget, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: {what} has length {got}, expected {expected}")]
    Dimension {
        what: &'static str,
        got: usize,
        expected: usize,
    },

    /// Configuration problem, located by dotted key path and (when known) line.
    #[error("{}", fmt_config(.key, *.line, .message))]
    Config {
        key: String,
        line: Option<usize>,
        message: String,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn fmt_config(key: &str, line: Option<usize>, message: &str) -> String {
    match line {
        Some(l) => format!("config error at `{key}` (line {l}): {message}"),
        None => format!("config error at `{key}`: {message}"),
    }
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
