//! Alexander polynomial from the Wirtinger presentation.
//!
//! Each over-strand of the diagram (a maximal run of arcs between two
//! under-passages) is a generator; each crossing contributes one linear
//! relation over `Z[t, 1/t]` after Fox differentiation. Deleting one row
//! and one column of the relation matrix and taking a determinant yields
//! the Alexander polynomial up to a unit `±t^k`, which the normalization
//! step removes.
//!
//! The determinant uses fraction-free Bareiss elimination so every
//! intermediate entry stays an integer polynomial; all divisions along the
//! way are exact by construction.

use crate::bracket::UnionFind;
use crate::{InvariantError, LaurentPolynomial};
use diagram_convert::PlanarDiagram;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Dense integer polynomial in `t`: `poly[e]` is the coefficient of `t^e`,
/// with no trailing zero kept.
type Poly = Vec<BigInt>;

fn poly_trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_add_term(p: &mut Poly, exp: usize, coeff: i64) {
    if p.len() <= exp {
        p.resize_with(exp + 1, BigInt::zero);
    }
    p[exp] += coeff;
    poly_trim(p);
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize_with(b.len(), BigInt::zero);
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_trim(&mut out);
    out
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

/// Long division known to be exact; used only for Bareiss interior
/// divisions, where exactness is a theorem.
fn poly_div_exact(a: &Poly, b: &Poly) -> Poly {
    assert!(!b.is_empty(), "Bareiss pivot must be nonzero");
    if a.is_empty() {
        return Vec::new();
    }
    let mut rem = a.clone();
    let deg_b = b.len() - 1;
    assert!(rem.len() >= b.len(), "quotient degree would be negative");
    let mut quot = vec![BigInt::zero(); rem.len() - deg_b];
    let lead = &b[deg_b];
    for k in (0..quot.len()).rev() {
        let top = rem[k + deg_b].clone();
        if top.is_zero() {
            continue;
        }
        let (q, r) = (&top / lead, &top % lead);
        assert!(r.is_zero(), "Bareiss division was not exact");
        for (i, c) in b.iter().enumerate() {
            rem[k + i] -= &q * c;
        }
        quot[k] = q;
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "Bareiss division left a remainder"
    );
    poly_trim(&mut quot);
    quot
}

/// Fraction-free determinant with row pivoting. Returns `None` for a
/// singular matrix.
fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Option<Poly> {
    let n = m.len();
    if n == 0 {
        return Some(vec![BigInt::from(1)]);
    }
    let mut negated = false;
    let mut prev: Poly = vec![BigInt::from(1)];
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            let r = (k + 1..n).find(|&r| !m[r][k].is_empty())?;
            m.swap(k, r);
            negated = !negated;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross =
                    poly_sub(&poly_mul(&m[k][k], &m[i][j]), &poly_mul(&m[i][k], &m[k][j]));
                m[i][j] = poly_div_exact(&cross, &prev);
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if det.is_empty() {
        return None;
    }
    if negated {
        for c in &mut det {
            *c = -std::mem::take(c);
        }
    }
    Some(det)
}

/// Rescales a raw determinant (defined up to `±t^k`) to the canonical
/// symmetric Alexander polynomial with `Δ(1) = 1`.
fn normalize(det: Poly) -> Result<LaurentPolynomial, InvariantError> {
    let raw = LaurentPolynomial::from_terms(
        det.into_iter().enumerate().map(|(e, c)| (e as i64, c)),
    );
    let fail = |msg: String| InvariantError::NormalizationFailed(msg);
    let min = raw
        .min_exp()
        .ok_or_else(|| fail("Alexander determinant vanished".into()))?;
    let mut poly = raw.mul_monomial(-min, &BigInt::from(1));

    let at_one = poly.evaluate_at_one();
    if at_one.magnitude().to_u64() != Some(1) {
        return Err(fail(format!(
            "Alexander polynomial evaluates to {at_one} at t = 1, expected ±1"
        )));
    }
    if at_one.is_negative() {
        poly = poly.neg();
    }

    let degree = poly.max_exp().expect("nonzero by construction");
    if degree % 2 != 0 {
        return Err(fail(format!(
            "Alexander polynomial has odd degree {degree}"
        )));
    }
    let centered = poly.mul_monomial(-degree / 2, &BigInt::from(1));
    if !centered.is_palindromic() {
        return Err(fail(format!(
            "Alexander polynomial is not symmetric: {centered}"
        )));
    }
    Ok(centered)
}

/// Computes the Alexander polynomial in its canonical form: symmetric in
/// `t ↔ 1/t` and normalized so `Δ(1) = 1`.
///
/// Works directly on the diagram as given; no simplification is applied.
pub fn alexander(pd: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    let c = pd.crossing_count();
    if c == 0 {
        return Ok(LaurentPolynomial::one());
    }

    // Merge arcs into over-strands: the over-strand keeps its generator
    // through the crossing it passes over.
    let mut uf = UnionFind::new(2 * c);
    for k in 0..c {
        let over_in = over_in_arc(pd, k);
        uf.union(over_in as usize - 1, pd.succ(over_in) as usize - 1);
    }
    let mut strand_index = vec![usize::MAX; 2 * c];
    let mut strands = 0;
    for arc in 0..2 * c {
        let root = uf.find(arc);
        if strand_index[root] == usize::MAX {
            strand_index[root] = strands;
            strands += 1;
        }
    }
    debug_assert_eq!(strands, c, "a knot diagram has one strand per crossing");
    let mut strand_of = |arc: u32| strand_index[uf.find(arc as usize - 1)];

    // One Fox relation per crossing. Negative crossings are scaled by t to
    // keep entries in Z[t]; row scaling only moves the determinant by a
    // unit, which normalization strips anyway.
    let mut matrix: Vec<Vec<Poly>> = vec![vec![Vec::new(); c]; c];
    for (k, tuple) in pd.crossings().iter().enumerate() {
        let positive = pd.crossing_sign(k) > 0;
        let over = strand_of(if positive { tuple[3] } else { tuple[1] });
        let under_in = strand_of(tuple[0]);
        let under_out = strand_of(tuple[2]);
        let row = &mut matrix[k];
        if positive {
            // (1 - t)·over + t·in - out
            poly_add_term(&mut row[over], 0, 1);
            poly_add_term(&mut row[over], 1, -1);
            poly_add_term(&mut row[under_in], 1, 1);
            poly_add_term(&mut row[under_out], 0, -1);
        } else {
            // t·[(1 - 1/t)·over + (1/t)·in - out]
            poly_add_term(&mut row[over], 1, 1);
            poly_add_term(&mut row[over], 0, -1);
            poly_add_term(&mut row[under_in], 0, 1);
            poly_add_term(&mut row[under_out], 1, -1);
        }
    }

    // Any one generator and any one relation are redundant; drop the last
    // of each and take the determinant of the minor.
    let minor: Vec<Vec<Poly>> = matrix
        .into_iter()
        .take(c - 1)
        .map(|row| row.into_iter().take(c - 1).collect())
        .collect();
    let det = bareiss_det(minor).ok_or_else(|| {
        InvariantError::NormalizationFailed(
            "Wirtinger minor is singular; diagram is not a knot".into(),
        )
    })?;
    normalize(det)
}

/// Knot determinant `|Δ(-1)|`.
pub fn determinant(pd: &PlanarDiagram) -> Result<u64, InvariantError> {
    let delta = alexander(pd)?;
    delta
        .evaluate_at_minus_one()
        .magnitude()
        .to_u64()
        .ok_or_else(|| {
            InvariantError::NormalizationFailed(
                "knot determinant exceeds u64".into(),
            )
        })
}

fn over_in_arc(pd: &PlanarDiagram, k: usize) -> u32 {
    let tuple = pd.crossings()[k];
    if pd.crossing_sign(k) > 0 {
        tuple[3]
    } else {
        tuple[1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use diagram_convert::{braid_to_pd, BraidWord};

    fn braid_pd(strands: usize, letters: &[i32]) -> PlanarDiagram {
        braid_to_pd(&BraidWord::new(strands, letters.to_vec()).unwrap())
            .unwrap()
    }

    fn poly(pairs: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(pairs.iter().copied())
    }

    #[test]
    fn unknot_has_trivial_polynomial() {
        assert_eq!(
            alexander(&PlanarDiagram::unknot()).unwrap(),
            LaurentPolynomial::one()
        );
        assert_eq!(determinant(&PlanarDiagram::unknot()).unwrap(), 1);
    }

    #[test]
    fn kink_has_trivial_polynomial() {
        let pd = PlanarDiagram::new(vec![[1, 1, 2, 2]]).unwrap();
        assert_eq!(alexander(&pd).unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn three_crossing_unknot_has_trivial_polynomial() {
        let pd = braid_pd(2, &[1, -1, 1]);
        assert_eq!(alexander(&pd).unwrap(), LaurentPolynomial::one());
        assert_eq!(determinant(&pd).unwrap(), 1);
    }

    #[test]
    fn trefoil_polynomial() {
        // Δ(3_1) = t - 1 + 1/t, determinant 3.
        let pd = braid_pd(2, &[1, 1, 1]);
        assert_eq!(alexander(&pd).unwrap(), poly(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(determinant(&pd).unwrap(), 3);
    }

    #[test]
    fn mirror_trefoil_has_same_polynomial() {
        let pd = braid_pd(2, &[1, 1, 1]).mirror();
        assert_eq!(alexander(&pd).unwrap(), poly(&[(1, 1), (0, -1), (-1, 1)]));
    }

    #[test]
    fn figure_eight_polynomial() {
        // Δ(4_1) = -t + 3 - 1/t, determinant 5.
        let pd = braid_pd(3, &[1, -2, 1, -2]);
        assert_eq!(
            alexander(&pd).unwrap(),
            poly(&[(1, -1), (0, 3), (-1, -1)])
        );
        assert_eq!(determinant(&pd).unwrap(), 5);
    }

    #[test]
    fn cinquefoil_polynomial() {
        // Δ(5_1) = t^2 - t + 1 - 1/t + 1/t^2, determinant 5.
        let pd = braid_pd(2, &[1, 1, 1, 1, 1]);
        assert_eq!(
            alexander(&pd).unwrap(),
            poly(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)])
        );
        assert_eq!(determinant(&pd).unwrap(), 5);
    }

    #[test]
    fn connected_sum_multiplies_polynomials() {
        // Granny knot as a braid: closure of s1^3 s2^3 on three strands is
        // the connected sum of two trefoils.
        let pd = braid_pd(3, &[1, 1, 1, 2, 2, 2]);
        let trefoil = poly(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(alexander(&pd).unwrap(), trefoil.mul(&trefoil));
        assert_eq!(determinant(&pd).unwrap(), 9);
    }

    #[test]
    fn polynomial_is_symmetric_and_unit_at_one() {
        for letters in [
            vec![1i32, 1, 1],
            vec![1, -2, 1, -2],
            vec![1, 1, 1, 2, -1, 2],
            vec![1, 1, -2, 1, -2, -2],
        ] {
            let strands = letters
                .iter()
                .map(|l| l.unsigned_abs())
                .max()
                .unwrap() as usize
                + 1;
            let pd = braid_pd(strands, &letters);
            let delta = alexander(&pd).unwrap();
            assert!(delta.is_palindromic(), "not symmetric: {delta}");
            assert_eq!(delta.evaluate_at_one(), BigInt::from(1));
            assert_eq!(
                determinant(&pd).unwrap() % 2,
                1,
                "knot determinant must be odd"
            );
        }
    }
}
