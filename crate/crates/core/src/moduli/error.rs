use thiserror::Error;

use crate::groebner::GroebnerError;
use crate::poly::PolyError;
use crate::singularity::SingularityError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error(transparent)]
    Singularity(#[from] SingularityError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("degree and weight lists must be nonempty, positive, and of equal length")]
    BezoutShape,
    #[error("weighted Bezout quotient {numerator}/{denominator} is not an integer")]
    NonIntegerQuotient {
        numerator: String,
        denominator: String,
    },
    #[error("quotient ring is not zero-dimensional")]
    NotZeroDimensional,
    #[error("stable map input failed validation: {0}")]
    InvalidStableMap(String),
    #[error("no valid marked points and lines found after {0} attempts")]
    MarkedDataSearchFailed(u32),
}
