//! Petal sequences and the moves that preserve their knot type.
//!
//! A petal diagram draws a knot as a rose: every strand passes through one
//! central multi-crossing and loops back around, so the whole knot is captured
//! by the permutation of heights (levels) in which the strands stack at the
//! center. An odd-length permutation of `1..=p` is therefore a complete knot
//! presentation, and this crate is the home of that representation.
//!
//! The operations here are purely combinatorial: validation, a canonical form
//! under the symmetries that do not change the knot, the loop-removal
//! reduction and its inverse stabilization, mirroring, connected sum, torus
//! sequences, and seeded random sampling. Converting a sequence into an
//! honest planar diagram lives in `diagram-convert`.

mod random;
mod sequence;

pub use random::random_sequence;
pub use sequence::{
    canonicalize, compose, is_canonical, mirror, reduce, stabilize, torus_sequence, validate,
    Level, PetalSequence,
};

use thiserror::Error;

/// Errors produced by sequence construction and the moves on sequences.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    /// Petal sequences always have odd length: a strand entering the central
    /// crossing must exit on the far side, so loops pair up around one
    /// unpaired closing loop.
    #[error("petal sequence must have odd length, got {0}")]
    EvenLength(usize),
    /// The empty sequence does not describe a knot.
    #[error("petal sequence must be non-empty")]
    Empty,
    /// Every level `1..=p` must appear exactly once.
    #[error("sequence of length {length} is not a permutation of 1..={length}: {reason}")]
    NotPermutation { length: usize, reason: String },
    /// Stabilization inserts at a slot `0..=p`.
    #[error("insertion position {position} out of range 0..={max}")]
    PositionOutOfRange { position: usize, max: usize },
    /// Torus sequences are defined for `r >= 1`.
    #[error("torus parameter must be at least 1, got {0}")]
    InvalidTorusParameter(usize),
    /// Random sampling needs a valid petal count.
    #[error("petal count must be odd and at least 1, got {0}")]
    InvalidPetalCount(usize),
    /// Text being parsed as a sequence contained a non-numeric token.
    #[error("`{token}` is not a positive integer")]
    BadToken { token: String },
}
