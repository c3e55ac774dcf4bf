use crate::matroid::ValidationReport;
use thiserror::Error;

/// Errors raised by matroid construction and probability computations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("capacity exceeded: {what} is {got}, limit {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("circuit axioms fail: {0}")]
    NotAMatroid(ValidationReport),

    #[error("basis family is not a matroid: {0}")]
    NotABasisFamily(String),

    #[error("matroid has no circuits; the game never ends")]
    NoCircuits,

    #[error("{circuit} is not a circuit of this matroid")]
    NotACircuit { circuit: String },

    #[error(
        "inclusion-exclusion over {count} circuits exceeds cap {cap}; \
         use the timed (independent-set) engine instead"
    )]
    CircuitCapExceeded { count: usize, cap: usize },

    #[error("exponential evaluates within 1e-40 of an integer; refusing to ceil at this precision")]
    PrecisionFlag,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
}
