//! Jones polynomial and the combined invariant fingerprint.

use crate::alexander::{alexander, determinant};
use crate::contraction::kauffman_bracket;
use crate::laurent::is_odd;
use crate::simplify::simplify;
use crate::{InvariantError, LaurentPolynomial};
use diagram_convert::PlanarDiagram;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Jones polynomial of the knot, in the variable `t`.
///
/// The diagram is first simplified (Reidemeister I/II), then the Kauffman
/// bracket of the smaller diagram is corrected by its writhe:
/// `V = (-A)^(-3w) · ⟨D⟩` with `t = A^(-4)`.
pub fn jones(pd: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    jones_of_reduced(&simplify(pd))
}

/// Jones polynomial of a diagram assumed already simplified; the bracket
/// and writhe are taken from this exact diagram.
fn jones_of_reduced(
    pd: &PlanarDiagram,
) -> Result<LaurentPolynomial, InvariantError> {
    let bracket = kauffman_bracket(pd)?;
    let w = pd.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let corrected = bracket.mul_monomial(-3 * w, &BigInt::from(sign));
    let v = corrected.rescale_exponents(-4).ok_or_else(|| {
        InvariantError::NormalizationFailed(
            "bracket exponents not divisible by 4".into(),
        )
    })?;
    if v.evaluate_at_one() != BigInt::from(1) {
        return Err(InvariantError::NormalizationFailed(format!(
            "Jones polynomial evaluates to {} at t = 1, expected 1",
            v.evaluate_at_one()
        )));
    }
    Ok(v)
}

/// Combined invariant fingerprint of a knot.
///
/// Equal knots always produce equal fingerprints; unequal fingerprints
/// certify distinct knots. The converse is heuristic: rare distinct knots
/// share all three invariants.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Fingerprint {
    /// Jones polynomial in `t`.
    pub jones: LaurentPolynomial,
    /// Canonical symmetric Alexander polynomial in `t`.
    pub alexander: LaurentPolynomial,
    /// Knot determinant `|Δ(-1)|`.
    pub determinant: u64,
}

impl Fingerprint {
    /// Fingerprint of the mirror-image knot: Jones has `t ↔ 1/t`, while
    /// the Alexander polynomial and determinant are mirror-blind.
    pub fn mirror(&self) -> Self {
        Fingerprint {
            jones: self.jones.invert_variable(),
            alexander: self.alexander.clone(),
            determinant: self.determinant,
        }
    }

    /// Whether the fingerprint cannot distinguish the knot from its
    /// mirror image.
    pub fn is_mirror_symmetric(&self) -> bool {
        self.jones == self.jones.invert_variable()
    }
}

/// Computes all fingerprint invariants of a diagram.
///
/// The diagram is simplified once and shared by both polynomial routines;
/// cheap internal consistency checks (`V(1) = 1`, symmetric `Δ`, odd
/// determinant) are enforced along the way.
pub fn fingerprint(pd: &PlanarDiagram) -> Result<Fingerprint, InvariantError> {
    let reduced = simplify(pd);
    let jones = jones_of_reduced(&reduced)?;
    let alexander = alexander(&reduced)?;
    let determinant = determinant(&reduced)?;
    if !is_odd(&BigInt::from(determinant)) {
        return Err(InvariantError::NormalizationFailed(format!(
            "knot determinant {determinant} is even"
        )));
    }
    Ok(Fingerprint {
        jones,
        alexander,
        determinant,
    })
}
