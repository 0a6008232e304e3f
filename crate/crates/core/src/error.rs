use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error{}: {msg}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, msg: String },

    #[error("unknown chord label `{0}`")]
    UnknownLabel(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("expected exactly one unicursal component, found {0}")]
    ComponentCount(usize),

    #[error("invalid move site: {0}")]
    InvalidSite(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("certification refused: {0}")]
    NotCertified(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn parse(line: Option<usize>, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
