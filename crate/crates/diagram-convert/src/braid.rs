//! Braid words and their closures, used as ground-truth diagrams.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::assemble::{Role, Walk};
use crate::{ConvertError, PlanarDiagram};

/// A word in the braid group on `strands` strands.
///
/// Letter `g > 0` is the generator crossing strand positions `g` and `g+1`
/// with the left strand passing over; `g < 0` is its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a braid word, checking every letter against the strand count.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, ConvertError> {
        if strands == 0 {
            return Err(ConvertError::BraidLetterOutOfRange {
                letter: 0,
                strands,
            });
        }
        for &letter in &letters {
            let magnitude = letter.unsigned_abs() as usize;
            if letter == 0 || magnitude >= strands {
                return Err(ConvertError::BraidLetterOutOfRange {
                    letter,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The letters of the word.
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// The permutation of strand positions induced bottom-to-top, as a
    /// 0-based mapping.
    fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &letter in &self.letters {
            let g = letter.unsigned_abs() as usize;
            perm.swap(g - 1, g);
        }
        perm
    }

    /// Number of components of the braid's trace closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = perm[at];
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Braid(strands={}, word={:?})", self.strands, self.letters)
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Converts the trace closure of a braid word into a planar diagram with
/// one crossing per letter.
///
/// Fails with [`ConvertError::MultiComponentClosure`] unless the closure is
/// a knot, i.e. the word's permutation is a single `strands`-cycle.
pub fn braid_to_pd(word: &BraidWord) -> Result<PlanarDiagram, ConvertError> {
    let components = word.closure_components();
    if components != 1 {
        return Err(ConvertError::MultiComponentClosure { components });
    }
    if word.letters.is_empty() {
        // Only possible for a single strand: the closure is an unknot.
        return Ok(PlanarDiagram::unknot());
    }

    // Walk the knot through the braid, wrapping around the closure. The
    // walker occupies a strand position and scans letters bottom to top;
    // each letter touching the current position is a crossing passage.
    let letter_count = word.letters.len();
    let mut passages = Vec::with_capacity(2 * letter_count);
    let over_in_ccw: Vec<bool> =
        word.letters.iter().map(|&l| l < 0).collect();
    let mut position = 1usize;
    let mut index = 0usize;
    loop {
        let letter = word.letters[index];
        let g = letter.unsigned_abs() as usize;
        if position == g || position == g + 1 {
            let over = (letter > 0 && position == g)
                || (letter < 0 && position == g + 1);
            passages.push((
                index,
                if over { Role::Over } else { Role::Under },
            ));
            position = if position == g { g + 1 } else { g };
        }
        index += 1;
        if index == letter_count {
            index = 0; // closure arc back to the bottom
        }
        if position == 1 && index == 0 {
            break;
        }
    }

    Walk {
        crossing_count: letter_count,
        passages,
        over_in_ccw,
    }
    .assemble()
}
