//! Exhaustive, symmetry-pruned search over petal sequences.
//!
//! A length-`p` petal sequence is a permutation of `1..=p`, but rotating
//! the sequence or traversing it backwards describes the same projection,
//! so the search space is the set of orbit representatives under rotation
//! and reversal. [`enumerate_sequences`] streams those canonical forms in
//! lexicographic order; [`classify_all`] fingerprints every one of them
//! against the reference table; [`petal_number`] finds the least petal
//! count realizing a given knot; and [`verify_table`] replays the shipped
//! table: each published sequence must identify as its knot, and
//! exhaustive search below its petal count must come up empty.
//!
//! Enumeration order is a contract: parallel classification splits the
//! stream into chunks by the entry after the leading 1 and merges chunk
//! results in stream order, so reports are identical for any worker count.

#![warn(missing_docs)]

mod classify;
mod enumerate;

use std::time::Duration;

use knot_identify::IdentifyError;
use petal_core::SequenceError;
use thiserror::Error;

pub use classify::{
    classify_all, petal_number, verify_table, ClassificationReport,
    SearchOptions, VerifyReport, VerifyRow,
};
pub use enumerate::{enumerate_sequences, CanonicalSequences};

/// Failures of enumeration, classification, and table verification.
#[derive(Debug, Error)]
pub enum SearchError {
    /// The requested petal count is not an odd positive integer.
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    /// The requested petal count exceeds the configured search maximum.
    #[error("{petals} petals exceeds the configured maximum of {max}")]
    PetalLimit {
        /// Requested petal count.
        petals: usize,
        /// Configured ceiling.
        max: usize,
    },
    /// A fingerprint-count or wall-clock budget ran out mid-search.
    #[error("search budget exceeded after {fingerprints} fingerprints in {elapsed:?}")]
    BudgetExceeded {
        /// Fingerprints computed before the budget tripped.
        fingerprints: u64,
        /// Wall-clock time spent before the budget tripped.
        elapsed: Duration,
    },
    /// No sequence within the petal-count ceiling realizes the target.
    #[error("no representation with at most {p_max} petals")]
    NotFound {
        /// Largest petal count that was searched.
        p_max: usize,
    },
    /// The identification pipeline failed on an enumerated sequence.
    #[error(transparent)]
    Identify(#[from] IdentifyError),
}
