//! Planar diagram codes for knots.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::ConvertError;

/// One crossing as a PD tuple `(a, b, c, d)`.
///
/// Entries are arc labels listed counterclockwise around the crossing
/// starting from the incoming under-arc `a`. The outgoing under-arc is `c`,
/// and the over-strand occupies `b` and `d`.
pub type Crossing = [u32; 4];

/// A knot diagram encoded as a list of PD tuples.
///
/// Arcs are labeled `1..=2c` along the orientation of the knot, so the arc
/// following `x` is `x % 2c + 1`. An empty crossing list encodes the
/// zero-crossing unknot diagram.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PdJson", into = "PdJson")]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
}

#[derive(Serialize, Deserialize)]
struct PdJson {
    crossings: Vec<Crossing>,
}

impl TryFrom<PdJson> for PlanarDiagram {
    type Error = ConvertError;
    fn try_from(json: PdJson) -> Result<Self, Self::Error> {
        PlanarDiagram::new(json.crossings)
    }
}

impl From<PlanarDiagram> for PdJson {
    fn from(pd: PlanarDiagram) -> Self {
        PdJson {
            crossings: pd.crossings,
        }
    }
}

/// The incoming over-arc of a tuple, or `None` if neither over-arc follows
/// the other.
///
/// In a one-crossing diagram both successor relations hold at once; the
/// kink forms `(1,1,2,2)` and `(1,2,2,1)` are told apart by which over-arc
/// coincides with the under-arc, making the former positive and the latter
/// negative.
fn over_in_of(arcs: u32, [a, b, _, d]: Crossing) -> Option<u32> {
    let succ = |x: u32| x % arcs + 1;
    match (b == succ(d), d == succ(b)) {
        (true, false) => Some(d),
        (false, true) => Some(b),
        (true, true) => Some(if d != a { d } else { b }),
        (false, false) => None,
    }
}

impl PlanarDiagram {
    /// Builds a diagram from PD tuples, checking the arc structure.
    ///
    /// Requirements: with `c` crossings every label in `1..=2c` appears
    /// exactly twice, each tuple satisfies `c = succ(a)`, the over-arcs `b`
    /// and `d` are consecutive, and every arc enters exactly one crossing
    /// and leaves exactly one crossing.
    pub fn new(crossings: Vec<Crossing>) -> Result<Self, ConvertError> {
        let n = crossings.len();
        let arcs = 2 * n as u32;
        let succ = |x: u32| x % arcs + 1;

        let mut seen = vec![0u8; 2 * n];
        let mut incoming = vec![0u8; 2 * n];
        let mut outgoing = vec![0u8; 2 * n];
        for (i, &[a, b, c, d]) in crossings.iter().enumerate() {
            for label in [a, b, c, d] {
                if label == 0 || label > arcs {
                    return Err(ConvertError::MalformedPd(format!(
                        "crossing {i}: arc label {label} outside 1..={arcs}"
                    )));
                }
                seen[(label - 1) as usize] += 1;
            }
            if c != succ(a) {
                return Err(ConvertError::MalformedPd(format!(
                    "crossing {i}: under-arc {a} must continue as {}, found {c}",
                    succ(a)
                )));
            }
            // Exactly one of b, d is the over-strand's outgoing arc.
            let over_in = match over_in_of(arcs, [a, b, c, d]) {
                Some(arc) => arc,
                None => {
                    return Err(ConvertError::MalformedPd(format!(
                        "crossing {i}: over-arcs {b} and {d} are not \
                         consecutive"
                    )));
                }
            };
            let over_out = succ(over_in);
            for label in [a, over_in] {
                incoming[(label - 1) as usize] += 1;
            }
            for label in [succ(a), over_out] {
                outgoing[(label - 1) as usize] += 1;
            }
        }
        for (idx, &count) in seen.iter().enumerate() {
            if count != 2 {
                return Err(ConvertError::MalformedPd(format!(
                    "arc label {} appears {} times, expected 2",
                    idx + 1,
                    count
                )));
            }
        }
        for idx in 0..2 * n {
            if incoming[idx] != 1 || outgoing[idx] != 1 {
                return Err(ConvertError::MalformedPd(format!(
                    "arc label {} enters {} crossings and leaves {}, expected 1 and 1",
                    idx + 1,
                    incoming[idx],
                    outgoing[idx]
                )));
            }
        }
        Ok(PlanarDiagram { crossings })
    }

    /// The zero-crossing unknot diagram.
    pub fn unknot() -> Self {
        PlanarDiagram {
            crossings: Vec::new(),
        }
    }

    /// Number of crossings.
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// The PD tuples.
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Number of arcs (`2 * crossing_count`).
    pub fn arc_count(&self) -> u32 {
        2 * self.crossings.len() as u32
    }

    /// The arc following `arc` along the knot's orientation.
    pub fn succ(&self, arc: u32) -> u32 {
        arc % self.arc_count() + 1
    }

    /// Sign of crossing `index`: `+1` where the over-strand passes from
    /// `d` to `b` (counterclockwise frames agree), `-1` otherwise.
    pub fn crossing_sign(&self, index: usize) -> i32 {
        let tuple = self.crossings[index];
        let over_in = over_in_of(self.arc_count(), tuple)
            .expect("validated at construction");
        if over_in == tuple[3] {
            1
        } else {
            -1
        }
    }

    /// Sum of all crossing signs.
    pub fn writhe(&self) -> i64 {
        (0..self.crossings.len())
            .map(|i| self.crossing_sign(i) as i64)
            .sum()
    }

    /// The mirror-image diagram: every crossing switched.
    ///
    /// Reversing each tuple's over-arc order `(a, b, c, d) -> (a, d, c, b)`
    /// swaps over- and under-strand roles relative to the plane, which is
    /// exactly reflection through the projection plane.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|&[a, b, c, d]| [a, d, c, b])
            .collect();
        PlanarDiagram { crossings }
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossings.is_empty() {
            return write!(f, "PD[]");
        }
        write!(f, "PD[")?;
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "X({a},{b},{c},{d})")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_diagram_is_valid() {
        let pd = PlanarDiagram::unknot();
        assert_eq!(pd.crossing_count(), 0);
        assert_eq!(pd.to_string(), "PD[]");
    }

    #[test]
    fn positive_kink_is_valid() {
        let pd = PlanarDiagram::new(vec![[1, 1, 2, 2]]).unwrap();
        assert_eq!(pd.arc_count(), 2);
        assert_eq!(pd.succ(2), 1);
    }

    #[test]
    fn negative_kink_is_valid() {
        PlanarDiagram::new(vec![[1, 2, 2, 1]]).unwrap();
    }

    #[test]
    fn two_kink_unknot_is_valid() {
        // Closure of the braid word s1 s2 on three strands, traversed from
        // the bottom of the first strand.
        PlanarDiagram::new(vec![[4, 2, 1, 1], [3, 3, 4, 2]]).unwrap();
    }

    #[test]
    fn rejects_label_out_of_range() {
        let err = PlanarDiagram::new(vec![[1, 3, 2, 4]]).unwrap_err();
        assert!(matches!(err, ConvertError::MalformedPd(_)));
    }

    #[test]
    fn rejects_zero_label() {
        let err = PlanarDiagram::new(vec![[0, 1, 1, 2]]).unwrap_err();
        assert!(matches!(err, ConvertError::MalformedPd(_)));
    }

    #[test]
    fn rejects_broken_under_strand() {
        // c must be succ(a).
        let err = PlanarDiagram::new(vec![[1, 2, 1, 2]]).unwrap_err();
        assert!(matches!(err, ConvertError::MalformedPd(_)));
    }

    #[test]
    fn rejects_nonconsecutive_over_arcs() {
        // Two tuples whose over legs are not successors of each other.
        let err =
            PlanarDiagram::new(vec![[1, 1, 2, 3], [3, 2, 4, 4]]).unwrap_err();
        assert!(matches!(err, ConvertError::MalformedPd(_)));
    }

    #[test]
    fn rejects_inconsistent_arc_roles() {
        // Every label appears twice and the per-tuple checks pass, but arc 3
        // enters two crossings and leaves none.
        let err =
            PlanarDiagram::new(vec![[1, 3, 2, 4], [3, 1, 4, 2]]).unwrap_err();
        assert!(matches!(err, ConvertError::MalformedPd(_)));
    }

    #[test]
    fn kink_signs_follow_their_forms() {
        let positive = PlanarDiagram::new(vec![[1, 1, 2, 2]]).unwrap();
        assert_eq!(positive.crossing_sign(0), 1);
        let negative = PlanarDiagram::new(vec![[1, 2, 2, 1]]).unwrap();
        assert_eq!(negative.crossing_sign(0), -1);
        assert_eq!(positive.mirror(), negative);
    }

    #[test]
    fn writhe_of_standard_trefoil_code_is_three() {
        let pd = PlanarDiagram::new(vec![
            [4, 2, 5, 1],
            [2, 6, 3, 5],
            [6, 4, 1, 3],
        ])
        .unwrap();
        assert_eq!(pd.writhe(), 3);
        assert_eq!(pd.mirror().writhe(), -3);
    }

    #[test]
    fn mirror_is_an_involution() {
        let pd = PlanarDiagram::new(vec![[4, 2, 1, 1], [3, 3, 4, 2]]).unwrap();
        let mirrored = pd.mirror();
        assert_ne!(mirrored, pd);
        assert_eq!(mirrored.mirror(), pd);
    }

    #[test]
    fn json_round_trip() {
        let pd = PlanarDiagram::new(vec![[4, 2, 1, 1], [3, 3, 4, 2]]).unwrap();
        let json = serde_json::to_string(&pd).unwrap();
        assert_eq!(json, r#"{"crossings":[[4,2,1,1],[3,3,4,2]]}"#);
        let back: PlanarDiagram = serde_json::from_str(&json).unwrap();
        assert_eq!(back, pd);
    }

    #[test]
    fn json_rejects_malformed_code() {
        let err = serde_json::from_str::<PlanarDiagram>(
            r#"{"crossings":[[1,2,3,4]]}"#,
        );
        assert!(err.is_err());
    }
}
