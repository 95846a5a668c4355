use thiserror::Error;

/// Errors raised by the polynomial kernels, enumerators and formula evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A division that must be exact left a nonzero remainder. Every division
    /// performed by the formula modules is exact in theory, so this always
    /// points at a transcription bug.
    #[error("division is not exact: nonzero remainder")]
    NonExactDivision,

    #[error("division by the zero polynomial")]
    DivideByZero,

    #[error("{what} = {value} is out of range [{lo}, {hi}]")]
    IndexOutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("coefficient table holds rows up to {have}, but {needed} are required")]
    TableTooSmall { needed: usize, have: usize },

    #[error("permutation size {m} exceeds the enumeration cap {cap}")]
    CapExceeded { m: usize, cap: usize },

    #[error("invalid gap placement: {0}")]
    InvalidPlacement(String),

    #[error("expected {expected} prior values, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::IndexOutOfRange {
            what,
            value: value as i64,
            lo: lo as i64,
            hi: hi as i64,
        });
    }
    Ok(())
}
