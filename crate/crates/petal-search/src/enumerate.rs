//! Streaming enumeration of canonical petal sequences.

use petal_core::{is_canonical, Level, PetalSequence, SequenceError};

/// Advances `slice` to its lexicographic successor permutation in place,
/// returning `false` once `slice` is already the final (descending)
/// arrangement.
fn next_permutation(slice: &mut [Level]) -> bool {
    let n = slice.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && slice[i - 1] >= slice[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while slice[j] <= slice[i - 1] {
        j -= 1;
    }
    slice.swap(i - 1, j);
    slice[i..].reverse();
    true
}

/// Iterator over canonical petal sequences of a fixed length, emitted in
/// lexicographic order.
///
/// Every canonical form starts with level 1 (the least rotation of a
/// permutation with distinct entries begins at its least entry), so the
/// iterator walks permutations of the remaining levels and keeps the ones
/// that are their own canonical representative.
pub struct CanonicalSequences {
    /// Current candidate; the first `fixed` entries never change.
    levels: Vec<Level>,
    /// Length of the frozen prefix: 1 for a full enumeration, 2 for one
    /// chunk of a partitioned run.
    fixed: usize,
    exhausted: bool,
}

impl CanonicalSequences {
    fn new(levels: Vec<Level>, fixed: usize) -> Self {
        debug_assert_eq!(levels.first(), Some(&1));
        CanonicalSequences {
            levels,
            fixed,
            exhausted: false,
        }
    }
}

impl Iterator for CanonicalSequences {
    type Item = PetalSequence;

    fn next(&mut self) -> Option<PetalSequence> {
        while !self.exhausted {
            let hit = is_canonical(&self.levels);
            let out = hit.then(|| {
                PetalSequence::new(self.levels.clone())
                    .expect("permutations of 1..=p are valid sequences")
            });
            if !next_permutation(&mut self.levels[self.fixed..]) {
                self.exhausted = true;
            }
            if out.is_some() {
                return out;
            }
        }
        None
    }
}

/// Streams every canonical petal sequence of length `p` exactly once, in
/// lexicographic order.
///
/// The stream has one entry per orbit of the permutations of `1..=p`
/// under rotation and reversal: `p!/(2p)` sequences for odd `p >= 3`, and
/// the single sequence `(1)` for `p = 1`.
pub fn enumerate_sequences(p: usize) -> Result<CanonicalSequences, SequenceError> {
    if p == 0 {
        return Err(SequenceError::Empty);
    }
    if p % 2 == 0 {
        return Err(SequenceError::EvenLength(p));
    }
    let levels: Vec<Level> = (1..=p as Level).collect();
    Ok(CanonicalSequences::new(levels, 1))
}

/// One chunk of the canonical stream: the sequences whose entry after the
/// leading 1 equals `second`. Concatenating chunks for `second = 2..=p`
/// reproduces [`enumerate_sequences`] exactly.
pub(crate) fn enumerate_chunk(p: usize, second: Level) -> CanonicalSequences {
    debug_assert!(p >= 3 && (2..=p as Level).contains(&second));
    let mut levels = Vec::with_capacity(p);
    levels.push(1);
    levels.push(second);
    levels.extend((2..=p as Level).filter(|&l| l != second));
    CanonicalSequences::new(levels, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use petal_core::canonicalize;
    use std::collections::BTreeSet;

    /// All permutations of `1..=p`, generated independently of the
    /// iterator under test.
    fn all_permutations(p: usize) -> Vec<Vec<Level>> {
        let mut current: Vec<Level> = (1..=p as Level).collect();
        let mut out = vec![current.clone()];
        while next_permutation(&mut current) {
            out.push(current.clone());
        }
        out
    }

    #[test]
    fn next_permutation_walks_all_arrangements() {
        assert_eq!(all_permutations(4).len(), 24);
        let perms = all_permutations(3);
        assert_eq!(
            perms,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1],
            ]
        );
    }

    #[test]
    fn single_petal_enumeration() {
        let seqs: Vec<_> = enumerate_sequences(1).unwrap().collect();
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].levels(), &[1]);
    }

    #[test]
    fn even_and_empty_lengths_are_rejected() {
        assert!(matches!(
            enumerate_sequences(4),
            Err(SequenceError::EvenLength(4))
        ));
        assert!(matches!(enumerate_sequences(0), Err(SequenceError::Empty)));
    }

    /// Brute-force orbit count: canonicalize every raw permutation and
    /// count distinct results. The stream must agree exactly.
    #[test]
    fn counts_match_brute_force_orbits() {
        for p in [1usize, 3, 5, 7] {
            let orbits: BTreeSet<Vec<Level>> = all_permutations(p)
                .into_iter()
                .map(|levels| {
                    canonicalize(&PetalSequence::new(levels).unwrap())
                        .levels()
                        .to_vec()
                })
                .collect();
            let emitted: Vec<Vec<Level>> = enumerate_sequences(p)
                .unwrap()
                .map(|s| s.levels().to_vec())
                .collect();
            assert_eq!(emitted.len(), orbits.len(), "count at p = {p}");
            let emitted_set: BTreeSet<Vec<Level>> =
                emitted.iter().cloned().collect();
            assert_eq!(emitted_set, orbits, "orbit representatives at p = {p}");
            // Orbits are size 2p exactly (the action is free on sequences
            // with distinct entries), so the count has a closed form.
            if p >= 3 {
                let factorial: usize = (1..=p).product();
                assert_eq!(emitted.len(), factorial / (2 * p), "free action at p = {p}");
            }
        }
    }

    #[test]
    fn emitted_in_lexicographic_order_without_repeats() {
        let seqs: Vec<Vec<Level>> = enumerate_sequences(7)
            .unwrap()
            .map(|s| s.levels().to_vec())
            .collect();
        for pair in seqs.windows(2) {
            assert!(pair[0] < pair[1], "strictly increasing stream");
        }
    }

    #[test]
    fn chunks_partition_the_stream() {
        let p = 7;
        let whole: Vec<Vec<Level>> = enumerate_sequences(p)
            .unwrap()
            .map(|s| s.levels().to_vec())
            .collect();
        let mut chunked = Vec::new();
        for second in 2..=p as Level {
            chunked.extend(
                enumerate_chunk(p, second).map(|s| s.levels().to_vec()),
            );
        }
        assert_eq!(whole, chunked);
    }

    /// Expanding each emitted representative's orbit recovers the whole
    /// permutation set: nothing was pruned away beyond symmetry.
    #[test]
    fn orbit_expansion_covers_every_permutation() {
        let p = 7;
        let mut covered = BTreeSet::new();
        for s in enumerate_sequences(p).unwrap() {
            let levels = s.levels();
            let mut variants = Vec::new();
            for rot in 0..p {
                let mut forward: Vec<Level> = Vec::with_capacity(p);
                forward.extend_from_slice(&levels[rot..]);
                forward.extend_from_slice(&levels[..rot]);
                let mut backward = forward.clone();
                backward.reverse();
                variants.push(forward);
                variants.push(backward);
            }
            covered.extend(variants);
        }
        assert_eq!(covered.len(), (1..=p).product::<usize>());
    }
}
