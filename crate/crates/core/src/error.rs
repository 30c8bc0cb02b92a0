use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected} states, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("state {state} out of range for {n} states")]
    StateOutOfRange { state: usize, n: usize },

    #[error("invalid range {lo}..={hi} for {n} states")]
    InvalidRange { lo: usize, hi: usize, n: usize },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("semigroup exceeded cap of {cap} elements (found at least {partial})")]
    CapExceeded { cap: usize, partial: usize },

    #[error("transformation is not an element of the semigroup")]
    NotInSemigroup,

    #[error("state {0} is not an absorbing sink")]
    NotASink(usize),

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("invalid witness request: {0}")]
    InvalidWitness(String),

    #[error("parse error at `{path}`: {message}")]
    Parse { path: String, message: String },

    #[error("{0} is too large for brute-force enumeration")]
    TooLarge(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
