use thiserror::Error;

/// Errors raised by field, polynomial and factorization routines.
///
/// Variants split into usage errors (bad input, violated preconditions) and
/// integrity errors (an internal consistency check failed); see
/// [`Error::is_integrity`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic must be odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("field too large: {0}")]
    FieldTooLarge(String),
    #[error("modulus {0} is not irreducible over F_{1}")]
    ReducibleModulus(String, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("residues belong to different quotient rings")]
    ModulusMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("modulus must be a monic polynomial of degree at least 1")]
    InvalidModulus,
    #[error("bad reduction: modulus shares a factor with the discriminant of the Drinfeld module")]
    BadReduction,
    #[error("input polynomial is not squarefree")]
    NotSquarefree,
    #[error("input polynomial must have positive degree")]
    ConstantInput,
    #[error("Frobenius tables cover indices up to {bound}, index {requested} requested")]
    TableBound { bound: usize, requested: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("integrity check failed: {0}")]
    Integrity(String),
}

impl Error {
    /// True for failures that indicate broken invariants rather than bad input.
    pub fn is_integrity(&self) -> bool {
        matches!(self, Error::Integrity(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
