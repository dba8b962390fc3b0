use thiserror::Error;

/// Errors raised by the bandwidth library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{name} = {value} is out of domain: {reason}")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// A bracketing search could not enclose the requested crossing.
    #[error("no sign change on [{lo}, {hi}]: {reason}")]
    Bracket {
        lo: f64,
        hi: f64,
        reason: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(name: &'static str, value: f64, reason: &'static str) -> Result<T> {
    Err(Error::Domain {
        name,
        value,
        reason,
    })
}
