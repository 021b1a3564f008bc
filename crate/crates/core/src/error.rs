//! Error type shared by all modules.

use thiserror::Error;

/// Errors reachable through the public API.
///
/// Contract violations that can only arise from library bugs (mixing group
/// ranks inside one product, a coset with two minimal-length elements) are
/// asserted with panics instead; they indicate a broken invariant, not a
/// recoverable condition.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("n must be at least 1")]
    ZeroRank,

    #[error("group enumeration of W_{n} exceeds the bound {bound} (2^n n! elements); raise the bound explicitly to proceed")]
    EnumerationBound { n: usize, bound: usize },

    #[error("expected an all-positive composition, found negative part {part}")]
    SignedPartsRejected { part: i64 },

    #[error("the shifted cyclic projector requires an element of odd order, got order {order}")]
    EvenOrder { order: usize },

    #[error("power exponent {exponent} out of range for {kind} with block size {size}")]
    ExponentRange {
        kind: &'static str,
        exponent: usize,
        size: usize,
    },

    #[error("element is not in the Mantaci-Reutenauer subalgebra: {reason}")]
    NotInSubalgebra { reason: String },

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("subgroup is not closed under multiplication")]
    SubgroupNotClosed,

    #[error("character value missing for a subgroup element")]
    MissingCharacterValue,

    #[error("permutation is not positively supported on the given block")]
    NotPositiveOnBlock,

    #[error("eigen-element is zero; no scalar action to read off")]
    ZeroEigenElement,

    #[error("centralizer element does not act on the eigen-element as a root-of-unity scalar")]
    ScalarActionFailure,

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid signed partition: {0}")]
    InvalidPartition(String),

    #[error("invalid one-row permutation: {0}")]
    InvalidPermutation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
