use thiserror::Error;

/// Errors raised by the library and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid number literal {literal:?}: {message}")]
    Literal { literal: String, message: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("window overflow: {0}")]
    WindowOverflow(String),

    #[error("computation too large: {0}")]
    TooLarge(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
