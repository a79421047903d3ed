//! Shared arc-labeling step: turn a knot traversal into PD tuples.
//!
//! Every converter in this crate reduces its geometry to the same data: an
//! ordered list of crossing passages along the oriented knot, plus one
//! orientation bit per crossing. This module does the bookkeeping from
//! there, so converters only reason about their own geometry.

use crate::pd::Crossing;
use crate::{ConvertError, PlanarDiagram};

/// Which strand of a crossing a passage travels on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Role {
    Under,
    Over,
}

/// A complete traversal of a knot diagram.
pub struct Walk {
    /// Total number of crossings in the diagram.
    pub crossing_count: usize,
    /// Crossing passages in traversal order. Each crossing must appear
    /// exactly twice, once per role.
    pub passages: Vec<(usize, Role)>,
    /// Per crossing: `true` if the incoming over-arc sits counterclockwise
    /// next to the incoming under-arc. With under-strand direction `u` and
    /// over-strand direction `v` in the plane, this is `cross(u, v) > 0`.
    pub over_in_ccw: Vec<bool>,
}

impl Walk {
    /// Labels arcs `1..=2c` along the traversal and emits PD tuples.
    ///
    /// Panics if the walk is internally inconsistent (converter bug); the
    /// resulting diagram is additionally re-validated by
    /// [`PlanarDiagram::new`].
    pub fn assemble(self) -> Result<PlanarDiagram, ConvertError> {
        let c = self.crossing_count;
        assert_eq!(
            self.passages.len(),
            2 * c,
            "walk must pass every crossing exactly twice"
        );
        assert_eq!(self.over_in_ccw.len(), c);
        if c == 0 {
            return Ok(PlanarDiagram::unknot());
        }

        let arcs = 2 * c as u32;
        let succ = |x: u32| x % arcs + 1;
        let mut under_in: Vec<Option<u32>> = vec![None; c];
        let mut over_in: Vec<Option<u32>> = vec![None; c];
        for (idx, &(cid, role)) in self.passages.iter().enumerate() {
            let in_arc = idx as u32 + 1;
            let slot = match role {
                Role::Under => &mut under_in[cid],
                Role::Over => &mut over_in[cid],
            };
            assert!(
                slot.replace(in_arc).is_none(),
                "crossing {cid} passed twice in role {role:?}"
            );
        }

        let mut crossings: Vec<Crossing> = Vec::with_capacity(c);
        for cid in 0..c {
            let a = under_in[cid]
                .unwrap_or_else(|| panic!("crossing {cid} never passed under"));
            let o = over_in[cid]
                .unwrap_or_else(|| panic!("crossing {cid} never passed over"));
            let tuple = if self.over_in_ccw[cid] {
                [a, o, succ(a), succ(o)]
            } else {
                [a, succ(o), succ(a), o]
            };
            crossings.push(tuple);
        }
        PlanarDiagram::new(crossings)
    }
}
