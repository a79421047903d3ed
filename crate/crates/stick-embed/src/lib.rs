//! Polygonal realizations of petal sequences in 3-space.
//!
//! A petal sequence determines a knot through a single multi-crossing.
//! This crate realizes that knot as a closed polygon of straight segments
//! with exact rational coordinates: [`petal_to_sticks`] emits at most
//! `2(p-1)` segments for a `p`-petal sequence, with embeddedness certified
//! by exact arithmetic rather than floating point. [`project_to_pd`]
//! projects a conformation back to a planar diagram along any generic
//! rational direction, so the knot type of the output can be certified
//! independently by computing invariants of the projection.

#![warn(missing_docs)]

mod build;
mod conformation;
mod geom;
mod project;

pub use build::petal_to_sticks;
pub use conformation::StickConformation;
pub use geom::Point3;
pub use project::{project_to_pd, standard_directions};

use thiserror::Error;

/// Errors from conformation validation, parsing, and projection.
#[derive(Debug, Error)]
pub enum StickError {
    /// A closed polygon needs at least three vertices.
    #[error("a closed polygon needs at least 3 vertices, got {count}")]
    TooFewVertices {
        /// Number of vertices supplied.
        count: usize,
    },

    /// Two consecutive vertices coincide.
    #[error("consecutive vertices coincide at index {index}")]
    RepeatedVertex {
        /// Index of the first vertex of the degenerate pair.
        index: usize,
    },

    /// Three consecutive vertices are collinear.
    #[error("three consecutive vertices starting at {index} are collinear")]
    CollinearRun {
        /// Index of the first vertex of the collinear run.
        index: usize,
    },

    /// Two non-adjacent segments touch or cross in space.
    #[error("segments {first} and {second} intersect; the polygon is not embedded")]
    Intersection {
        /// Index of the first segment.
        first: usize,
        /// Index of the second segment.
        second: usize,
    },

    /// The requested projection direction is not generic for the
    /// conformation.
    #[error("direction is not generic: {reason}")]
    NonGenericDirection {
        /// What degeneracy was detected.
        reason: String,
    },

    /// A serialized coordinate failed to parse as an exact rational.
    #[error("bad rational coordinate {text:?}: {message}")]
    BadCoordinate {
        /// The offending coordinate text.
        text: String,
        /// Parser diagnostic.
        message: String,
    },

    /// A conformation file was not valid JSON.
    #[error("malformed conformation file: {0}")]
    Json(#[from] serde_json::Error),

    /// The projected diagram failed planar-diagram validation.
    #[error(transparent)]
    Diagram(#[from] diagram_convert::ConvertError),
}
