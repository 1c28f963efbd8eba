use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("({0}) is not a hook partition")]
    NotAHook(String),

    #[error("{what} is {value}, which exceeds the limit {limit}")]
    ScaleExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("attempted to invert zero")]
    ZeroInverse,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid rank sequence: {0}")]
    InvalidRankSequence(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_prime(p: usize) -> Result<()> {
    if !(2..=251).contains(&p)
        || (2..p)
            .take_while(|d| d * d <= p)
            .any(|d| p.is_multiple_of(d))
    {
        return Err(Error::InvalidArgument(format!(
            "{p} is not a prime in the supported range 2..=251"
        )));
    }
    Ok(())
}

pub(crate) fn guard(what: &'static str, value: u128, limit: u128) -> Result<()> {
    if value > limit {
        Err(Error::ScaleExceeded { what, value, limit })
    } else {
        Ok(())
    }
}
