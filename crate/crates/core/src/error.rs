use thiserror::Error;

/// Outcome classes shared by every operation in the crate.
///
/// The CLI maps these onto exit codes 2, 3 and 4 respectively.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input or a violated documented precondition.
    #[error("input error: {0}")]
    Input(String),
    /// An internal check failed; indicates a bug, never a wrong answer.
    #[error("contract violation: {0}")]
    Contract(String),
    /// A search or family-size budget was exhausted.
    #[error("resource budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! input_err {
    ($($arg:tt)*) => { $crate::error::Error::Input(format!($($arg)*)) };
}
macro_rules! contract_err {
    ($($arg:tt)*) => { $crate::error::Error::Contract(format!($($arg)*)) };
}
pub(crate) use contract_err;
pub(crate) use input_err;
