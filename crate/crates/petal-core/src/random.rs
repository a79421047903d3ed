use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{Level, PetalSequence, SequenceError};

/// Draws a uniformly random petal sequence with `p` petals.
///
/// The generator is a seeded ChaCha stream and the shuffle is a hand-rolled
/// Fisher-Yates with rejection sampling, so the same `(p, seed)` pair yields
/// the same sequence on every platform and in every release.
pub fn random_sequence(p: usize, seed: u64) -> Result<PetalSequence, SequenceError> {
    if p == 0 || p % 2 == 0 {
        return Err(SequenceError::InvalidPetalCount(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut levels: Vec<Level> = (1..=p as Level).collect();
    for i in (1..p).rev() {
        let j = uniform_below(&mut rng, (i + 1) as u64) as usize;
        levels.swap(i, j);
    }
    PetalSequence::new(levels)
}

/// Unbiased sample from `0..bound` by rejecting the overhang of the 64-bit range.
fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
    loop {
        let draw = rng.next_u64();
        if draw <= zone {
            return draw % bound;
        }
    }
}
