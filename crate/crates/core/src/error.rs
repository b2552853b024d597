use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("cap exceeded: {name} is {value}, limit {limit}")]
    CapExceeded {
        name: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
