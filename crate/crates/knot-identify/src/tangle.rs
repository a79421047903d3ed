//! Reference diagrams from twist constructions.
//!
//! Two-bridge knots and Montesinos/pretzel knots have completely
//! mechanical standard diagrams: rows and columns of twists assembled
//! from a continued fraction. Building them here gives the reference
//! table diagrams that owe nothing to petal projections, so agreement of
//! their invariants with the petal pipeline is a real cross-check.
//!
//! A tangle is a planar graph fragment with four boundary corners. Each
//! crossing has its four ends numbered counterclockwise SW = 0, SE = 1,
//! NE = 2, NW = 3; one diagonal (0–2 or 1–3) is the over-strand. The
//! closure walks the resulting knot and hands an ordered passage list to
//! the shared assembler.

use crate::IdentifyError;
use diagram_convert::walk_support::{Role, Walk};
use diagram_convert::PlanarDiagram;

const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// A tangle under construction: a perfect matching on crossing ends plus
/// the four boundary stubs `NW..=SE`.
pub struct Tangle {
    /// `conn[e]` is the endpoint wired to endpoint `e`. Endpoints `0..4`
    /// are the boundary stubs; `4 + 4k + s` is end `s` of crossing `k`.
    conn: Vec<usize>,
    /// Per crossing: `true` if the SE–NW diagonal (ends 1 and 3) is the
    /// over-strand.
    over_odd: Vec<bool>,
}

fn end(crossing: usize, slot: usize) -> usize {
    4 + 4 * crossing + slot
}

impl Tangle {
    /// Two horizontal strands: NW–NE above, SW–SE below.
    pub fn zero() -> Self {
        Tangle {
            conn: vec![NE, NW, SE, SW],
            over_odd: Vec::new(),
        }
    }

    /// Two vertical strands: NW–SW on the left, NE–SE on the right.
    pub fn infinity() -> Self {
        Tangle {
            conn: vec![SW, SE, NW, NE],
            over_odd: Vec::new(),
        }
    }

    /// Number of crossings added so far.
    pub fn crossing_count(&self) -> usize {
        self.over_odd.len()
    }

    fn link(&mut self, a: usize, b: usize) {
        self.conn[a] = b;
        self.conn[b] = a;
    }

    fn new_crossing(&mut self, over_odd: bool) -> usize {
        self.over_odd.push(over_odd);
        self.conn.extend_from_slice(&[usize::MAX; 4]);
        self.over_odd.len() - 1
    }

    /// Adds `|n|` crossings twisting the bottom boundary pair; the sign
    /// selects the over-diagonal.
    pub fn twist_bottom(&mut self, n: i64) {
        for _ in 0..n.unsigned_abs() {
            let k = self.new_crossing(n > 0);
            let below_left = self.conn[SW];
            let below_right = self.conn[SE];
            self.link(below_left, end(k, NW_SLOT));
            self.link(below_right, end(k, NE_SLOT));
            self.link(SW, end(k, SW_SLOT));
            self.link(SE, end(k, SE_SLOT));
        }
    }

    /// Adds `|n|` crossings twisting the right boundary pair; the sign
    /// selects the over-diagonal.
    pub fn twist_right(&mut self, n: i64) {
        for _ in 0..n.unsigned_abs() {
            let k = self.new_crossing(n > 0);
            let left_top = self.conn[NE];
            let left_bottom = self.conn[SE];
            self.link(left_top, end(k, NW_SLOT));
            self.link(left_bottom, end(k, SW_SLOT));
            self.link(NE, end(k, NE_SLOT));
            self.link(SE, end(k, SE_SLOT));
        }
    }

    /// Side-by-side sum: `self` on the left, `other` on the right.
    ///
    /// Both summands must have at least one crossing (their corners wired
    /// to crossings, not to each other), which every twist construction
    /// here guarantees.
    pub fn sum(mut self, other: &Tangle) -> Tangle {
        let base = self.conn.len();
        let shift = |e: usize| {
            debug_assert!(e >= 4, "degenerate summand corner");
            e - 4 + base
        };
        let self_ne = self.conn[NE];
        let self_se = self.conn[SE];
        let other_nw = shift(other.conn[NW]);
        let other_sw = shift(other.conn[SW]);
        let other_ne = shift(other.conn[NE]);
        let other_se = shift(other.conn[SE]);
        debug_assert!(self_ne >= 4 && self_se >= 4);

        self.over_odd.extend_from_slice(&other.over_odd);
        self.conn.extend(other.conn[4..].iter().map(|&p| {
            if p >= 4 {
                p - 4 + base
            } else {
                usize::MAX // boundary-adjacent; rewired just below
            }
        }));

        self.link(self_ne, other_nw);
        self.link(self_se, other_sw);
        self.link(NE, other_ne);
        self.link(SE, other_se);
        self
    }

    /// Numerator closure: joins NW–NE and SW–SE, then orients and labels
    /// the resulting knot.
    pub fn numerator_closure(mut self) -> Result<PlanarDiagram, IdentifyError> {
        let c = self.crossing_count();
        if c == 0 {
            return Ok(PlanarDiagram::unknot());
        }
        let top_left = self.conn[NW];
        let top_right = self.conn[NE];
        let bottom_left = self.conn[SW];
        let bottom_right = self.conn[SE];
        debug_assert!(
            top_left >= 4 && top_right >= 4 && bottom_left >= 4 && bottom_right >= 4
        );
        self.link(top_left, top_right);
        self.link(bottom_left, bottom_right);

        // Walk the knot: enter a crossing end, leave by the opposite end
        // of the same strand (slot XOR 2), follow the wiring.
        let mut passages = Vec::with_capacity(2 * c);
        let mut entry_slots: Vec<[Option<usize>; 2]> = vec![[None; 2]; c];
        let start = end(0, 0);
        let mut entry = start;
        loop {
            let slot = (entry - 4) % 4;
            let k = (entry - 4) / 4;
            let over = (slot % 2 == 1) == self.over_odd[k];
            passages.push((k, if over { Role::Over } else { Role::Under }));
            entry_slots[k][usize::from(over)] = Some(slot);
            let exit = entry ^ 2;
            entry = self.conn[exit];
            if entry == start {
                break;
            }
        }
        if passages.len() != 2 * c {
            return Err(IdentifyError::NotAKnot {
                components: 1 + (2 * c - passages.len()) / 2,
            });
        }

        let over_in_ccw = entry_slots
            .iter()
            .map(|&[under, over]| {
                let u = under.expect("walk visited every strand");
                let o = over.expect("walk visited every strand");
                o == (u + 1) % 4
            })
            .collect();
        Ok(Walk {
            crossing_count: c,
            passages,
            over_in_ccw,
        }
        .assemble()?)
    }
}

// Crossing-end slots in counterclockwise order.
const SW_SLOT: usize = 0;
const SE_SLOT: usize = 1;
const NE_SLOT: usize = 2;
const NW_SLOT: usize = 3;

/// Builds the standard diagram of the rational tangle with continued
/// fraction `cf = [a_1, ..., a_n]`, meaning `a_1 + 1/(a_2 + 1/(...))`,
/// applying twists inside-out so horizontal rows and vertical columns
/// alternate and `a_1` is the final horizontal row.
///
/// Returns the tangle together with its fraction as `(numerator,
/// denominator)`; the numerator's magnitude is the determinant of the
/// numerator closure, which callers use as an arithmetic cross-check.
pub fn rational_tangle(cf: &[i64]) -> (Tangle, i64, i64) {
    assert!(!cf.is_empty(), "continued fraction must be nonempty");
    let n = cf.len();
    // a_1 is horizontal, a_2 vertical, ...; the innermost a_n determines
    // the starting tangle.
    let (mut tangle, mut num, mut den) = if n % 2 == 1 {
        (Tangle::zero(), 0i64, 1i64)
    } else {
        (Tangle::infinity(), 1i64, 0i64)
    };
    for i in (1..=n).rev() {
        let a = cf[i - 1];
        if i % 2 == 1 {
            tangle.twist_right(a);
            num += a * den;
        } else {
            tangle.twist_bottom(a);
            den += a * num;
        }
    }
    (tangle, num, den)
}

/// Standard two-bridge diagram for a continued fraction; also returns the
/// knot determinant (the fraction's numerator).
pub fn rational_pd(cf: &[i64]) -> Result<(PlanarDiagram, u64), IdentifyError> {
    let (tangle, num, _den) = rational_tangle(cf);
    let pd = tangle.numerator_closure()?;
    Ok((pd, num.unsigned_abs()))
}

/// Standard pretzel diagram `P(q_1, ..., q_m)`: vertical twist columns
/// side by side; also returns the determinant `|Σ_i Π_{j≠i} q_j|`.
pub fn pretzel_pd(qs: &[i64]) -> Result<(PlanarDiagram, u64), IdentifyError> {
    assert!(qs.len() >= 2, "a pretzel needs at least two columns");
    assert!(qs.iter().all(|&q| q != 0), "zero columns are not twists");
    let mut total: Option<Tangle> = None;
    for &q in qs {
        let mut column = Tangle::infinity();
        column.twist_bottom(q);
        total = Some(match total {
            None => column,
            Some(t) => t.sum(&column),
        });
    }
    let determinant: i64 = (0..qs.len())
        .map(|i| {
            qs.iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &q)| q)
                .product::<i64>()
        })
        .sum();
    let pd = total.expect("at least two columns").numerator_closure()?;
    Ok((pd, determinant.unsigned_abs()))
}

/// Montesinos diagram: the numerator closure of a side-by-side sum of
/// rational tangles; also returns the determinant.
///
/// Tangle fractions add under summation, so the closure's determinant is
/// the numerator of `Σ n_i/d_i` over the common denominator `Π d_i`
/// without reduction — the pretzel formula is the all-columns special
/// case.
pub fn montesinos_pd(fractions: &[&[i64]]) -> Result<(PlanarDiagram, u64), IdentifyError> {
    assert!(fractions.len() >= 2);
    let mut total: Option<Tangle> = None;
    let (mut num, mut den) = (0i64, 1i64);
    for cf in fractions {
        let (tangle, n, d) = rational_tangle(cf);
        assert!(tangle.crossing_count() > 0, "summands need crossings");
        num = num * d + n * den;
        den *= d;
        total = Some(match total {
            None => tangle,
            Some(t) => t.sum(&tangle),
        });
    }
    let pd = total.expect("at least two summands").numerator_closure()?;
    Ok((pd, num.unsigned_abs()))
}
