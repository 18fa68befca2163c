use thiserror::Error;

use crate::moduli::ModuliQuery;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{x} is not invertible modulo {modulus}")]
    NotInvertible { x: i64, modulus: i64 },

    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(i64),

    #[error("vector of length {found} does not match lattice of rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("Gram matrix is not square and symmetric")]
    NotSymmetric,

    #[error("divisibility {t} does not divide {modulus}")]
    DivisibilityViolation { t: i64, modulus: i64 },

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error(
        "inconsistent answers for {query}: non-emptiness criterion says {non_empty}, \
         component count is {components}"
    )]
    InternalInconsistency {
        query: ModuliQuery,
        non_empty: bool,
        components: i64,
    },
}
