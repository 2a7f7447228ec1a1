use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The instance lacks a structure the operation needs.
    #[error("capability missing: {0}")]
    Capability(String),
    #[error("type mismatch: {0}")]
    Mismatch(String),
    #[error("size mismatch: {0}")]
    Size(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unknown instance: {0}")]
    UnknownInstance(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

impl Error {
    pub fn capability(what: impl Into<String>) -> Error {
        Error::Capability(what.into())
    }

    pub fn mismatch(what: impl Into<String>) -> Error {
        Error::Mismatch(what.into())
    }

    pub fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
        Error::Schema { path: path.into(), message: message.into() }
    }

    /// Machine-readable kind used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Capability(_) => "capability",
            Error::Mismatch(_) => "mismatch",
            Error::Size(_) => "size",
            Error::Index(_) => "index",
            Error::Invalid(_) => "invalid",
            Error::UnknownInstance(_) => "unknown_instance",
            Error::Parse(_) => "parse",
            Error::Schema { .. } => "schema",
        }
    }
}
