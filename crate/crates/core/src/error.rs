use thiserror::Error;

/// Errors raised while validating inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {n} is too small: a quartic circulant graph needs n >= 5")]
    OrderTooSmall { n: i64 },

    #[error("jumps ({p}, {q}) out of range for order {n}: need 1 <= p < q < n/2")]
    JumpOutOfRange { n: i64, p: i64, q: i64 },

    #[error("root index {t} out of range for order {n}")]
    IndexOutOfRange { n: u64, t: u64 },

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
