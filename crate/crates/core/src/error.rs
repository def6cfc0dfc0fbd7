use thiserror::Error;

use crate::domain::DomainStatus;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the region where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A formula was asked to evaluate outside its convergence region.
    #[error("rejected by domain check: {0}")]
    Rejected(DomainStatus),

    #[error("pole: {0}")]
    Pole(String),

    /// A series or continued fraction did not reach tolerance.
    #[error("no convergence in {what} after {iterations} iterations")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
    },

    /// Quadrature did not meet its tolerance at the maximum level.
    #[error("quadrature did not converge: estimate {estimate:e} after {levels} levels")]
    Quadrature { estimate: f64, levels: u32 },

    #[error("integrand returned a non-finite value at u = {abscissa:e}")]
    Integrand { abscissa: f64 },

    /// Direct summation is not available (or did not finish) for these parameters.
    #[error("oracle unavailable in this region: {0}")]
    OracleUnavailable(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    /// True for errors that mean "these parameters are not allowed" rather
    /// than "the numerics failed".
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Rejected(_) | Error::Pole(_))
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
