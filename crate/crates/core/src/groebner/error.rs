use thiserror::Error;

use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("ideal must have at least one generator")]
    EmptyIdeal,
    #[error("ideal generators must be nonzero")]
    ZeroGenerator,
    #[error("reduction step limit of {0} exceeded")]
    StepLimitExceeded(u64),
    #[error("not isolated at origin: {0}")]
    NotIsolatedAtOrigin(String),
    #[error("prime {prime} is unlucky for this input: {reason}")]
    UnluckyPrime { prime: u64, reason: String },
}
