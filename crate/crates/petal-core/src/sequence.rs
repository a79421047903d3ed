use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::SequenceError;

/// Height of a strand at the central multi-crossing, `1..=p` from bottom to top.
pub type Level = u16;

/// A validated petal sequence: an odd-length permutation of `1..=p`.
///
/// Two sequences describe the same diagram whenever they differ by a cyclic
/// rotation (choice of starting loop) or by reversal (traversal direction), so
/// equality of knots is tested on [`canonicalize`]d representatives.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Level>", try_from = "Vec<Level>")]
pub struct PetalSequence(Vec<Level>);

impl PetalSequence {
    /// Validates and wraps a candidate list of levels.
    pub fn new(levels: Vec<Level>) -> Result<Self, SequenceError> {
        validate(&levels)?;
        Ok(Self(levels))
    }

    /// Number of petals `p` (always odd).
    pub fn petals(&self) -> usize {
        self.0.len()
    }

    /// The levels in traversal order.
    pub fn levels(&self) -> &[Level] {
        &self.0
    }

    /// The single-petal unknot `(1)`.
    pub fn unknot() -> Self {
        Self(vec![1])
    }
}

impl From<PetalSequence> for Vec<Level> {
    fn from(seq: PetalSequence) -> Self {
        seq.0
    }
}

impl TryFrom<Vec<Level>> for PetalSequence {
    type Error = SequenceError;

    fn try_from(levels: Vec<Level>) -> Result<Self, Self::Error> {
        Self::new(levels)
    }
}

impl fmt::Display for PetalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, level) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{level}")?;
        }
        write!(f, ")")
    }
}

// `Debug` mirrors `Display`; the tuple form is how sequences appear in
// reports and error messages throughout the workspace.
impl fmt::Debug for PetalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PetalSequence {
    type Err = SequenceError;

    /// Parses `1 3 5 2 4`, `1,3,5,2,4`, or `(1,3,5,2,4)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .unwrap_or(trimmed);
        let mut levels = Vec::new();
        for token in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let level = token.parse::<Level>().map_err(|_| {
                SequenceError::BadToken {
                    token: token.to_string(),
                }
            })?;
            levels.push(level);
        }
        PetalSequence::new(levels)
    }
}

/// Checks that `levels` is a non-empty, odd-length permutation of `1..=p`.
pub fn validate(levels: &[Level]) -> Result<(), SequenceError> {
    if levels.is_empty() {
        return Err(SequenceError::Empty);
    }
    if levels.len() % 2 == 0 {
        return Err(SequenceError::EvenLength(levels.len()));
    }
    let p = levels.len();
    let mut seen = vec![false; p + 1];
    for &level in levels {
        let l = level as usize;
        if l == 0 || l > p {
            return Err(SequenceError::NotPermutation {
                length: p,
                reason: format!("level {l} outside 1..={p}"),
            });
        }
        if seen[l] {
            return Err(SequenceError::NotPermutation {
                length: p,
                reason: format!("level {l} repeated"),
            });
        }
        seen[l] = true;
    }
    Ok(())
}

/// Rotates `levels` so the entry with value 1 comes first.
fn rotate_to_one(levels: &[Level]) -> Vec<Level> {
    let start = levels
        .iter()
        .position(|&l| l == 1)
        .expect("validated sequence contains level 1");
    let mut out = Vec::with_capacity(levels.len());
    out.extend_from_slice(&levels[start..]);
    out.extend_from_slice(&levels[..start]);
    out
}

/// The canonical representative of a sequence's symmetry class: the
/// lexicographically least sequence over all cyclic rotations of the sequence
/// and of its reversal.
///
/// Since every level is distinct, the least rotation is the unique one that
/// starts at level 1, so only two candidates compete.
pub fn canonicalize(seq: &PetalSequence) -> PetalSequence {
    let forward = rotate_to_one(seq.levels());
    let mut reversed: Vec<Level> = seq.levels().to_vec();
    reversed.reverse();
    let backward = rotate_to_one(&reversed);
    PetalSequence(forward.min(backward))
}

/// Whether `levels` (already starting with 1) is its own canonical form.
///
/// This is the hot path of exhaustive enumeration, so it avoids allocating:
/// the only competing candidate is the reversal rotated to start at 1, and we
/// compare against it in place.
pub fn is_canonical(levels: &[Level]) -> bool {
    debug_assert_eq!(levels.first(), Some(&1));
    let p = levels.len();
    // Reversal rotated to start at 1 reads backwards from the entry before 1.
    let one_pos = 0;
    for offset in 1..p {
        // backward[offset] = levels[(one_pos + p - offset) % p]
        let b = levels[(one_pos + p - offset) % p];
        let f = levels[offset];
        if f < b {
            return true;
        }
        if f > b {
            return false;
        }
    }
    true
}

/// Removes trivial loops until none remain.
///
/// A cyclically adjacent pair with `|a_i - a_{i+1}| = 1` is a fold of one loop
/// directly over its neighbor; deleting both entries and relabeling the rest
/// by rank gives a petal sequence of the same knot with two fewer petals. The
/// leftmost eligible pair is removed first on every pass.
pub fn reduce(seq: &PetalSequence) -> PetalSequence {
    let mut levels = seq.levels().to_vec();
    while reduce_once(&mut levels) {}
    PetalSequence(levels)
}

/// Removes the leftmost cyclically adjacent pair with `|a_i - a_{i+1}| = 1`,
/// if any, and relabels by rank. Returns whether a pair was removed.
fn reduce_once(levels: &mut Vec<Level>) -> bool {
    let p = levels.len();
    if p == 1 {
        return false;
    }
    for i in 0..p {
        let j = (i + 1) % p;
        if levels[i].abs_diff(levels[j]) == 1 {
            // Remove the larger index first so the smaller stays valid.
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            levels.remove(hi);
            levels.remove(lo);
            relabel_by_rank(levels);
            return true;
        }
    }
    false
}

/// Compacts levels to `1..=len` preserving their relative order.
fn relabel_by_rank(levels: &mut [Level]) {
    let mut sorted: Vec<Level> = levels.to_vec();
    sorted.sort_unstable();
    for level in levels.iter_mut() {
        let rank = sorted.binary_search(level).expect("level present") + 1;
        *level = rank as Level;
    }
}

/// Inserts a trivial loop pair at the given slot, producing a sequence of
/// length `p + 2` for the same knot.
///
/// The new pair `(v, v+1)` is adjacent both in position and in level, so a
/// single [`reduce`] pass can always remove it again. `v` is chosen as the
/// level of the entry that follows the insertion slot, which keeps the move
/// deterministic; any consecutive pair would preserve the knot.
pub fn stabilize(seq: &PetalSequence, position: usize) -> Result<PetalSequence, SequenceError> {
    let p = seq.petals();
    if position > p {
        return Err(SequenceError::PositionOutOfRange { position, max: p });
    }
    let v = seq.levels()[position % p];
    let mut levels: Vec<Level> = seq
        .levels()
        .iter()
        .map(|&l| if l >= v { l + 2 } else { l })
        .collect();
    levels.splice(position..position, [v, v + 1]);
    Ok(PetalSequence(levels))
}

/// The mirror image: levels flip top-to-bottom, `a_j -> p + 1 - a_j`.
pub fn mirror(seq: &PetalSequence) -> PetalSequence {
    let p = seq.petals() as Level;
    PetalSequence(seq.levels().iter().map(|&l| p + 1 - l).collect())
}

/// Rotates the sequence to start immediately after the top level and drops
/// that top entry. The remaining levels are exactly `1..=p-1`, in the order
/// the strands are visited once the top loop is unfolded out of the crossing.
fn unfold_top(seq: &PetalSequence) -> Vec<Level> {
    let p = seq.petals();
    let top = seq
        .levels()
        .iter()
        .position(|&l| l as usize == p)
        .expect("validated sequence contains its top level");
    let mut out = Vec::with_capacity(p - 1);
    out.extend_from_slice(&seq.levels()[top + 1..]);
    out.extend_from_slice(&seq.levels()[..top]);
    out
}

/// Connected sum of two petal sequences, of length `m + n - 1`.
///
/// Both summands have their top loop unfolded; the second factor's levels are
/// stacked above the first's, and a single new top loop folds the combined
/// diagram closed. Composing with the unknot `(1)` returns a rotation of the
/// other factor.
pub fn compose(s: &PetalSequence, t: &PetalSequence) -> PetalSequence {
    let m = s.petals();
    let n = t.petals();
    if m == 1 {
        return t.clone();
    }
    if n == 1 {
        return s.clone();
    }
    let shift = (m - 1) as Level;
    let mut levels = unfold_top(s);
    levels.extend(unfold_top(t).into_iter().map(|l| l + shift));
    levels.push((m + n - 1) as Level);
    PetalSequence(levels)
}

/// The standard petal sequence of the `(r, r+1)` torus knot:
/// `a_j = 1 + ((j-1) * r mod (2r+1))`, of length `2r + 1`.
pub fn torus_sequence(r: usize) -> Result<PetalSequence, SequenceError> {
    if r == 0 {
        return Err(SequenceError::InvalidTorusParameter(r));
    }
    let p = 2 * r + 1;
    let levels = (0..p).map(|j| (1 + (j * r) % p) as Level).collect();
    Ok(PetalSequence(levels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(levels: &[Level]) -> PetalSequence {
        PetalSequence::new(levels.to_vec()).unwrap()
    }

    #[test]
    fn validate_rejects_even_length() {
        assert_eq!(
            PetalSequence::new(vec![1, 2]).unwrap_err(),
            SequenceError::EvenLength(2)
        );
    }

    #[test]
    fn validate_rejects_non_permutations() {
        assert!(matches!(
            PetalSequence::new(vec![1, 2, 2]).unwrap_err(),
            SequenceError::NotPermutation { .. }
        ));
        assert!(matches!(
            PetalSequence::new(vec![1, 2, 5]).unwrap_err(),
            SequenceError::NotPermutation { .. }
        ));
        assert_eq!(
            PetalSequence::new(vec![]).unwrap_err(),
            SequenceError::Empty
        );
    }

    #[test]
    fn validate_accepts_trefoil() {
        assert_eq!(seq(&[1, 3, 5, 2, 4]).petals(), 5);
    }

    #[test]
    fn parses_all_supported_shapes() {
        for text in ["1 3 5 2 4", "1,3,5,2,4", "(1,3,5,2,4)", " (1, 3, 5, 2, 4) "] {
            assert_eq!(text.parse::<PetalSequence>().unwrap(), seq(&[1, 3, 5, 2, 4]));
        }
        assert!("1 2".parse::<PetalSequence>().is_err());
        assert!("x".parse::<PetalSequence>().is_err());
    }

    #[test]
    fn canonical_form_of_trefoil_is_fixed() {
        assert_eq!(canonicalize(&seq(&[1, 3, 5, 2, 4])), seq(&[1, 3, 5, 2, 4]));
        // Rotations and reversals all land on the same representative.
        assert_eq!(canonicalize(&seq(&[3, 5, 2, 4, 1])), seq(&[1, 3, 5, 2, 4]));
        assert_eq!(canonicalize(&seq(&[4, 2, 5, 3, 1])), seq(&[1, 3, 5, 2, 4]));
    }

    #[test]
    fn is_canonical_agrees_with_canonicalize() {
        // Exhaustive check at p = 5 over sequences starting with 1.
        let mut rest = [2u16, 3, 4, 5];
        permute(&mut rest, 0, &mut |tail| {
            let mut levels = vec![1u16];
            levels.extend_from_slice(tail);
            let s = seq(&levels);
            let canonical = canonicalize(&s) == s;
            assert_eq!(is_canonical(&levels), canonical, "sequence {s}");
        });
    }

    fn permute(values: &mut [u16], k: usize, visit: &mut impl FnMut(&[u16])) {
        if k == values.len() {
            visit(values);
            return;
        }
        for i in k..values.len() {
            values.swap(k, i);
            permute(values, k + 1, visit);
            values.swap(k, i);
        }
    }

    #[test]
    fn reduce_removes_leftmost_adjacent_pair_first() {
        // One step removes the (1,2) pair and rank-relabels the rest.
        let mut levels = vec![1, 2, 5, 3, 7, 4, 6];
        assert!(reduce_once(&mut levels));
        assert_eq!(levels, vec![3, 1, 5, 2, 4]);
        // The cyclic pair (4, 3) is still removable, so full reduction keeps
        // collapsing this sequence all the way to the one-petal unknot.
        assert_eq!(reduce(&seq(&[1, 2, 5, 3, 7, 4, 6])), seq(&[1]));
    }

    #[test]
    fn reduce_handles_wraparound_pairs() {
        // The only eligible pair at the start is (last, first) = (3, 2).
        let mut levels = vec![2, 4, 1, 5, 3];
        assert!(reduce_once(&mut levels));
        assert_eq!(levels, vec![2, 1, 3]);
        assert_eq!(reduce(&seq(&[2, 4, 1, 5, 3])), seq(&[1]));
    }

    #[test]
    fn reduce_fixes_irreducible_sequences() {
        let eleven = seq(&[1, 9, 3, 5, 7, 10, 2, 4, 8, 11, 6]);
        assert_eq!(reduce(&eleven), eleven);
    }

    #[test]
    fn reduce_collapses_single_petal() {
        assert_eq!(reduce(&seq(&[1, 3, 2])), seq(&[1]));
        assert_eq!(reduce(&seq(&[1])), seq(&[1]));
    }

    #[test]
    fn stabilize_inserts_removable_pair() {
        assert_eq!(stabilize(&seq(&[1]), 0).unwrap(), seq(&[1, 2, 3]));
        let s = seq(&[1, 3, 5, 2, 4]);
        for position in 0..=5 {
            let bigger = stabilize(&s, position).unwrap();
            assert_eq!(bigger.petals(), 7);
            assert_eq!(reduce(&bigger), s, "position {position}");
        }
        assert_eq!(
            stabilize(&s, 6).unwrap_err(),
            SequenceError::PositionOutOfRange { position: 6, max: 5 }
        );
    }

    #[test]
    fn mirror_flips_levels() {
        assert_eq!(mirror(&seq(&[1, 3, 5, 2, 4])), seq(&[5, 3, 1, 4, 2]));
        assert_eq!(mirror(&mirror(&seq(&[1, 3, 5, 2, 4]))), seq(&[1, 3, 5, 2, 4]));
    }

    #[test]
    fn compose_lengths_and_unknot_identity() {
        let trefoil = seq(&[1, 3, 5, 2, 4]);
        let granny = compose(&trefoil, &trefoil);
        assert_eq!(granny.petals(), 9);
        assert_eq!(compose(&PetalSequence::unknot(), &trefoil), trefoil);
        assert_eq!(compose(&trefoil, &PetalSequence::unknot()), trefoil);
        // Composing with the unknot's rotations is still a valid permutation.
        validate(granny.levels()).unwrap();
    }

    #[test]
    fn torus_sequences_match_known_values() {
        assert_eq!(torus_sequence(1).unwrap(), seq(&[1, 2, 3]));
        assert_eq!(torus_sequence(2).unwrap(), seq(&[1, 3, 5, 2, 4]));
        assert_eq!(torus_sequence(3).unwrap(), seq(&[1, 4, 7, 3, 6, 2, 5]));
        assert_eq!(
            torus_sequence(4).unwrap(),
            seq(&[1, 5, 9, 4, 8, 3, 7, 2, 6])
        );
        assert!(torus_sequence(0).is_err());
    }
}
