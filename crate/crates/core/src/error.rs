//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the toolkit, named after the contract they break.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument violates a precondition (NaN, out of range, bad interval).
    #[error("domain error ({context}): {message}")]
    Domain {
        context: &'static str,
        message: String,
    },

    /// Arguments are finite but outside the supported numerical envelope.
    #[error("envelope error ({context}): {message}")]
    Envelope {
        context: &'static str,
        message: String,
    },

    /// An exponent left the representable range of f64.
    #[error("range error ({context}): exponent {exponent} overflows f64")]
    Range { context: &'static str, exponent: f64 },

    /// A kernel or integrand evaluation produced a non-finite value.
    #[error("numeric error ({context}): {message}")]
    Numeric {
        context: &'static str,
        message: String,
    },

    /// The Nyström factorization of (1 - K) detected rank deficiency.
    #[error("singular operator ({context}): relative pivot {pivot:.3e} below threshold")]
    SingularOperator { context: &'static str, pivot: f64 },

    /// Two integration contours approach closer than the collision threshold.
    #[error("contour collision: minimum separation {separation:.3e}")]
    ContourCollision { separation: f64 },

    /// The rejection sampler ran out of proposal budget.
    #[error(
        "acceptance failure: {accepted} of {requested} samples after {proposed} proposals \
         (acceptance rate {rate:.3e})"
    )]
    AcceptanceFailure {
        accepted: usize,
        requested: usize,
        proposed: usize,
        rate: f64,
    },
}

impl Error {
    pub fn domain(context: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            context,
            message: message.into(),
        }
    }

    pub fn envelope(context: &'static str, message: impl Into<String>) -> Self {
        Error::Envelope {
            context,
            message: message.into(),
        }
    }

    pub fn numeric(context: &'static str, message: impl Into<String>) -> Self {
        Error::Numeric {
            context,
            message: message.into(),
        }
    }
}
