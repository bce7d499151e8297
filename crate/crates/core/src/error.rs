use thiserror::Error;

use crate::chebyshev::FeasibilityReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// An instance field violates a schema or model invariant.
    #[error("invalid field `{field}`: {reason}")]
    Validation { field: String, reason: String },

    #[error("malformed instance document: {0}")]
    Parse(String),

    #[error("constraints are inconsistent (spectral ok: {}, bounds ok: {})", .0.spectral_ok, .0.bounds_ok)]
    Infeasible(Box<FeasibilityReport>),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("contract violation: {0}")]
    Contract(String),
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
