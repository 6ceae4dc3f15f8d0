use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group too large or infinite: {0}")]
    Size(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("missing data: {0}")]
    Missing(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
