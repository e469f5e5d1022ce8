use alloc::vec::Vec;
use core::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Condition codimensions must have even sum.
    OddSum { sum: u64 },
    /// Condition codimensions must be positive.
    NonPositiveCondition,
    /// The operation requires a valid problem (every a_i <= n - 1).
    InvalidProblem,
    /// Mismatched parity between the number of 1-conditions and the extra part.
    Parity,
    /// A stated hypothesis of the operation does not hold.
    Precondition(&'static str),
    /// No discriminating rearrangement exists for the given reduced problem.
    /// Firing this falsifies either the implementation or the induction lemma.
    LemmaFailure(Vec<u32>),
    /// Enumeration would exceed the configured cap.
    ResourceLimit { cap: u64 },
    /// Argument outside the function's domain.
    Domain,
    /// The truncated operator is too small to contain an interior window.
    TruncationTooSmall,
    /// A certificate failed re-validation.
    InvalidCertificate(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OddSum { sum } => write!(f, "odd sum: conditions sum to {sum}"),
            Error::NonPositiveCondition => write!(f, "non-positive entry in condition list"),
            Error::InvalidProblem => write!(f, "invalid problem: some condition exceeds n - 1"),
            Error::Parity => write!(f, "parity mismatch"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::LemmaFailure(p) => {
                write!(f, "no discriminating rearrangement found for {p:?}")
            }
            Error::ResourceLimit { cap } => write!(f, "enumeration exceeds cap of {cap}"),
            Error::Domain => write!(f, "argument outside domain"),
            Error::TruncationTooSmall => write!(f, "truncation too small"),
            Error::InvalidCertificate(why) => write!(f, "invalid certificate: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
