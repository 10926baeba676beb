use thiserror::Error;

/// Crate-wide error type. Every fallible public operation returns one of
/// these; nothing is ever silently guessed.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// An input failed validation before any computation started.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Trial division plus primality testing could not finish factoring;
    /// raising the factor bound may help.
    #[error("factorization incomplete: {0}")]
    FactorizationIncomplete(String),

    /// The valuation hypothesis of the lifting lemma cannot be satisfied
    /// anywhere in the starting residue class.
    #[error("hensel hypothesis fails: {0}")]
    HenselHypothesisFails(String),

    /// Two elements of parametrized fields were combined with different
    /// parameters (modulus, radicand, root order).
    #[error("mismatched field parameters: {0}")]
    FieldMismatch(String),

    /// An exact division or inversion that the algorithm guarantees to be
    /// possible failed; indicates corrupted inputs.
    #[error("internal field arithmetic failure: {0}")]
    InternalFieldError(String),

    /// A polynomial expected to split over the coefficient field does not.
    #[error("roots not in the coefficient field: {0}")]
    RootsNotRational(String),

    /// A requested point has no coordinate in the coefficient field.
    #[error("point not defined over the coefficient field: {0}")]
    PointNotRational(String),

    /// Coordinates do not satisfy the curve equation.
    #[error("point not on curve: {0}")]
    PointNotOnCurve(String),

    /// Reduction at the given prime is undefined (denominator vanishes or
    /// the reduced model is singular).
    #[error("bad reduction: {0}")]
    BadReduction(String),

    /// The prime ramifies where an unramified one is required.
    #[error("ramified prime: {0}")]
    RamifiedPrime(String),

    /// A configured size bound would be exceeded.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// No multiple of the element vanished within the search bound.
    #[error("no order found: {0}")]
    NoOrderFound(String),

    /// The subextension count is only defined under the Vandiver hypothesis,
    /// which the caller did not assert.
    #[error("vandiver hypothesis not assumed")]
    VandiverNotAssumed,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command-line front end: 2 for input
    /// validation failures, 3 for computation errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) => 2,
            _ => 3,
        }
    }
}
