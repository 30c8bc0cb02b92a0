//! Syntactic complexity of regular languages, with a focus on ideal and
//! closed languages.
//!
//! The syntactic complexity σ(L) of a regular language is the size of the
//! transition semigroup of its minimal DFA. This crate computes it
//! ([`semigroup`]), decides ideal/closed class membership and special
//! quotients ([`classify`]), builds the extremal witness automata for right,
//! left and two-sided ideals ([`witnesses`]), and searches small state
//! spaces exhaustively for the maximal σ within a class ([`search`]).
//!
//! ```
//! use syncomplex::{sigma_of_language, witnesses::right_ideal_witness};
//!
//! let dfa = right_ideal_witness(4, "abcd").unwrap();
//! assert_eq!(sigma_of_language(&dfa).unwrap(), 64);
//! ```

pub mod automata;
pub mod bounds;
pub mod classify;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod search;
pub mod semigroup;
pub mod tables;
pub mod transform;
pub mod witnesses;

pub use automata::{Dfa, Nfa, Semiautomaton};
pub use bounds::Family;
pub use classify::{classify, ClassReport};
pub use error::{Error, Result};
pub use semigroup::{sigma_of_language, transition_semigroup, SemigroupResult};
pub use transform::{compose, Transformation};

/// Exact, arbitrary-size counts (bounds and closed forms).
pub type BigCount = num_bigint::BigUint;
/// Machine-word counts for callers that know the range fits.
pub type SmallCount = u64;

/// Serializes a big count as a JSON number when it fits in `u64`, else as a
/// decimal string, so no count is ever printed in scientific notation.
pub(crate) fn serialize_big<S: serde::Serializer>(v: &BigCount, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(small) => s.serialize_u64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}
