use thiserror::Error;

/// Errors raised by polynomial construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ring mismatch: ({0}) vs ({1})")]
    RingMismatch(String, String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}` in ring declaration")]
    DuplicateVariable(String),
    #[error("variable `{0}` is bound more than once")]
    DuplicateBinding(String),
    #[error("substitution values live in different rings: ({0}) vs ({1})")]
    InconsistentSubstitution(String, String),
    #[error("parameter set must be a nonempty subset of the ring")]
    EmptyParameters,
    #[error("monomial has {got} exponents but the ring has {expected} variables")]
    ExponentWidth { got: usize, expected: usize },
    #[error("{got} weights given for {expected} variables")]
    WeightCount { got: usize, expected: usize },
    #[error("weights must be positive")]
    NonPositiveWeight,
    #[error("matrix is not square")]
    NonSquareMatrix,
    #[error("minor size {k} out of range for a {n}x{n} matrix")]
    MinorSize { k: usize, n: usize },
    #[error("{got} values given for {expected} variables")]
    ValueCount { got: usize, expected: usize },
}
