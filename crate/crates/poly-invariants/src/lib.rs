//! Exact polynomial invariants of knot diagrams.
//!
//! Everything here is computed over arbitrary-precision integers; there are
//! no floating-point values and no coefficient overflow. The Kauffman
//! bracket comes in two deliberately independent implementations: a fast
//! tangle-contraction sweep ([`kauffman_bracket`]) and a brute-force
//! `2^c` state sum ([`bracket_bruteforce`]) kept as an oracle for the fast
//! path. [`jones`], [`alexander`], [`determinant`] and [`fingerprint`]
//! build on them.

mod alexander;
mod bracket;
mod contraction;
mod fingerprint;
mod laurent;
mod simplify;

pub use alexander::{alexander, determinant};
pub use bracket::bracket_bruteforce;
pub use contraction::kauffman_bracket;
pub use fingerprint::{fingerprint, jones, Fingerprint};
pub use laurent::LaurentPolynomial;
pub use simplify::simplify;

use thiserror::Error;

/// Errors from invariant computation.
#[derive(Debug, Error)]
pub enum InvariantError {
    /// The brute-force state sum refuses diagrams with too many crossings.
    #[error("diagram has {crossings} crossings, brute-force cap is {limit}")]
    TooManyCrossings {
        /// Crossings in the offending diagram.
        crossings: usize,
        /// Hard cap of the brute-force oracle.
        limit: usize,
    },

    /// The contraction sweep's boundary grew past the configured cap.
    #[error("contraction boundary reached {width} endpoints, cap is {cap}")]
    StateSpaceTooLarge {
        /// Boundary width that was reached.
        width: usize,
        /// Configured cap.
        cap: usize,
    },

    /// An internal normalization identity failed; indicates a bug or an
    /// input that is not a knot diagram.
    #[error("normalization failed: {0}")]
    NormalizationFailed(String),
}

/// Sum of crossing signs of the diagram.
///
/// Zero crossings give writhe 0; the all-positive braid closure of three
/// half-twists gives +3.
pub fn writhe(pd: &diagram_convert::PlanarDiagram) -> i64 {
    pd.writhe()
}
