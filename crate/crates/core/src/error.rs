use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Inputs outside the documented domain of an operation.
    Precondition(String),
    /// `|det C| != 1`: the Cartan matrix is not unimodular.
    NonUnimodularCartan(i128),
    /// A runtime post-condition failed. Signals a bug, not bad input.
    Verification(String),
    /// A complex was handed to an operation over a different algebra.
    AlgebraMismatch,
    /// The chain-map search space for an isomorphism test exceeded the cap.
    SearchTooLarge(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::NonUnimodularCartan(d) => write!(f, "Cartan matrix has determinant {d}, not ±1"),
            Error::Verification(m) => write!(f, "verification failed: {m}"),
            Error::AlgebraMismatch => write!(f, "objects live over different algebras"),
            Error::SearchTooLarge(d) => write!(f, "degree-0 Hom space of dimension {d} exceeds the search cap"),
        }
    }
}

impl core::error::Error for Error {}
