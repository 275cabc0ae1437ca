use thiserror::Error;

/// Errors raised by the evaluators, the zero finder and the census.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `s` lies within the guard radius of the pole at `1/k`.
    #[error("pole at 1/{k} of order {order} (s = {s})")]
    Pole { k: u32, order: u32, s: f64 },

    /// Argument outside the supported domain (negative, non-finite, ...).
    #[error("argument {value} outside the domain: {what}")]
    OutOfDomain { value: f64, what: &'static str },

    /// An integer parameter outside its admissible range.
    #[error("{name} = {value} out of range [{min}, {max}]")]
    Range {
        name: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    /// The truncated nested sum has fewer than `r` terms to choose from.
    #[error("empty sum: n = {n} < r = {r}")]
    EmptySum { r: u32, n: u64 },

    /// Both bracket endpoints have the same sign.
    #[error("no sign change on [{lo}, {hi}] (f = {f_lo}, {f_hi})")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    /// An iterative procedure did not settle.
    #[error("no convergence: {0}")]
    NonConvergence(String),

    /// The census input does not cover every interval.
    #[error("incomplete input: no empirical count for interval k = {k}")]
    IncompleteInput { k: u32 },

    /// Invalid tuning parameter.
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(name: &'static str, value: i64, min: i64, max: i64) -> Result<()> {
    if value < min || value > max {
        Err(Error::Range {
            name,
            value,
            min,
            max,
        })
    } else {
        Ok(())
    }
}
