use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported group: {0}")]
    Unsupported(String),
    #[error("arithmetic: {0}")]
    Arithmetic(String),
    #[error("enumeration bound {bound} exceeded for {group}")]
    BoundExceeded { group: String, bound: u64 },
    #[error("generator data: {0}")]
    Generators(String),
    #[error("graph has undecided edges: {0}")]
    Undecided(String),
    #[error("certificate failed re-validation: {0}")]
    Certificate(String),
    #[error("range exceeds configured bound: {0}")]
    Range(String),
}

pub type Result<T> = std::result::Result<T, Error>;
