use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("size cap exceeded: {what} has size {size}, cap is {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("character table construction failed: {0}")]
    CharacterTable(String),

    /// A statement that is a theorem failed at runtime. This is always a bug.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
