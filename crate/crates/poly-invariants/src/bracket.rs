//! Brute-force Kauffman bracket: the full `2^c` state sum.
//!
//! Deliberately simple and slow; this is the oracle against which the fast
//! contraction engine is certified. Keep it free of shared code with
//! `contraction.rs`.

use diagram_convert::PlanarDiagram;

use crate::laurent::loop_value;
use crate::{InvariantError, LaurentPolynomial};

/// Hard cap on crossings for the exponential state sum.
pub(crate) const BRUTE_FORCE_LIMIT: usize = 16;

/// Kauffman bracket by summing all `2^c` smoothings.
///
/// Each crossing `(a, b, c, d)` contributes weight `A` when smoothed by
/// joining `a-b` and `c-d`, and `A^-1` when joining `a-d` and `b-c`; a
/// fully smoothed state of `l` loops contributes its weight times
/// `(-A^2 - A^-2)^(l-1)`. The 0-crossing unknot has bracket 1.
pub fn bracket_bruteforce(
    pd: &PlanarDiagram,
) -> Result<LaurentPolynomial, InvariantError> {
    let c = pd.crossing_count();
    if c > BRUTE_FORCE_LIMIT {
        return Err(InvariantError::TooManyCrossings {
            crossings: c,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    if c == 0 {
        return Ok(LaurentPolynomial::one());
    }

    let delta = loop_value();
    // delta^0 ..= delta^(c+1): a state has at most c + 1 loops.
    let mut delta_powers = vec![LaurentPolynomial::one()];
    for i in 1..=c + 1 {
        delta_powers.push(delta_powers[i - 1].mul(&delta));
    }

    let arcs = 2 * c;
    let mut total = LaurentPolynomial::zero();
    for state in 0u32..1 << c {
        let mut uf = UnionFind::new(arcs);
        let mut exponent: i64 = 0;
        for (i, &[a, b, cc, d]) in pd.crossings().iter().enumerate() {
            if state >> i & 1 == 0 {
                exponent += 1;
                uf.union(a as usize - 1, b as usize - 1);
                uf.union(cc as usize - 1, d as usize - 1);
            } else {
                exponent -= 1;
                uf.union(a as usize - 1, d as usize - 1);
                uf.union(b as usize - 1, cc as usize - 1);
            }
        }
        let loops = uf.components();
        total = total
            .add(&delta_powers[loops - 1].mul_monomial(exponent, &1.into()));
    }
    Ok(total)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn components(&mut self) -> usize {
        let n = self.parent.len();
        (0..n).filter(|&i| self.find(i) == i).count()
    }
}
