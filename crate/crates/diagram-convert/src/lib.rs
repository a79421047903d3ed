//! Conversions between knot presentations.
//!
//! A petal sequence pins a knot down with a single multi-crossing; most
//! downstream tooling (polynomial invariants, identification) wants a
//! classical diagram instead. This crate provides two independent routes
//! from a petal sequence to a [`PlanarDiagram`]:
//!
//! * **Grid route** — [`petal_to_grid`] lays the sequence out as a grid
//!   diagram, and [`grid_to_pd`] reads crossings off the grid.
//! * **Geometric route** — [`petal_to_pd_geometric`] places the petal rose
//!   in the plane with exact rational coordinates and perturbs the central
//!   multi-crossing into simple crossings.
//!
//! The two routes share no code on purpose: agreement of their invariants is
//! a strong end-to-end check, so each must stand on its own.
//!
//! Braid closures ([`braid_to_pd`]) supply well-understood reference knots,
//! and [`render_svg`] / [`render_grid_svg`] produce deterministic pictures.

mod assemble;
mod braid;
mod geometric;
mod grid;
mod pd;
mod svg;

/// Low-level walk-to-PD assembly, shared by anything that can describe a
/// knot as an ordered list of crossing passages.
pub mod walk_support {
    pub use crate::assemble::{Role, Walk};
}

pub use braid::{braid_to_pd, BraidWord};
pub use geometric::petal_to_pd_geometric;
pub use grid::{grid_to_pd, petal_to_grid, GridDiagram};
pub use pd::{Crossing, PlanarDiagram};
pub use svg::{render_grid_svg, render_svg};

use petal_core::SequenceError;
use thiserror::Error;

/// Errors produced by diagram construction and conversion.
#[derive(Debug, Error)]
pub enum ConvertError {
    /// The underlying petal sequence was invalid.
    #[error(transparent)]
    Sequence(#[from] SequenceError),

    /// A grid diagram violated its structural invariants.
    #[error("malformed grid diagram: {0}")]
    MalformedGrid(String),

    /// A planar diagram code violated its structural invariants.
    #[error("malformed planar diagram: {0}")]
    MalformedPd(String),

    /// A braid closure had more than one link component.
    #[error("braid closure is a {components}-component link, not a knot")]
    MultiComponentClosure {
        /// Number of components in the closure.
        components: usize,
    },

    /// A braid word referenced a generator outside `1..strands`.
    #[error("braid letter {letter} out of range for {strands} strands")]
    BraidLetterOutOfRange {
        /// The offending letter (signed generator index).
        letter: i32,
        /// Number of strands in the braid.
        strands: usize,
    },

    /// The exact geometric construction hit a degenerate configuration
    /// (coincident or tangent strands) instead of simple crossings.
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
}
