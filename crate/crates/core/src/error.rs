use thiserror::Error;

/// Failure modes shared by every evaluation routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("working precision of {digits} digits is outside the supported range 20..=1000")]
    InvalidPrecision { digits: u32 },

    #[error("tolerances must satisfy verify_tol > eval_tol > 10^-digits")]
    InvalidTolerance,

    #[error("{func}: pole at {at}")]
    Pole { func: &'static str, at: String },

    #[error("{func}: argument outside domain ({detail})")]
    Domain { func: &'static str, detail: String },

    #[error("{what} did not converge: {detail}")]
    NonConvergence { what: &'static str, detail: String },

    #[error("integer relation search exhausted working precision after {iterations} iterations")]
    PrecisionExhausted { iterations: u64 },

    #[error("angles live over different quadratic fields: Q(sqrt {left}) vs Q(sqrt {right})")]
    FieldMismatch { left: u64, right: u64 },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

impl Error {
    pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain { func, detail: detail.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
