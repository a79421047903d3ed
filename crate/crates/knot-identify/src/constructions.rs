//! Build recipes for the shipped reference diagrams.
//!
//! Every knot in the table gets a diagram from a standard construction
//! that is independent of petal projections:
//!
//! * two-bridge knots from their continued fractions, which also predict
//!   the determinant (the fraction's numerator) by pure arithmetic;
//! * pretzel knots from their twist columns, with the determinant
//!   predicted by `|Σ_i Π_{j≠i} q_j|`;
//! * the remaining knots as braid closures, found by the bundled
//!   `braid_search` tool and frozen here.
//!
//! The table generator accepts a recipe only if the diagram's fingerprint
//! matches the fingerprint of the knot's published petal sequence (up to
//! mirror image) and, where a recipe predicts a determinant, that the
//! prediction agrees.

use crate::tangle::{montesinos_pd, pretzel_pd, rational_pd};
use crate::IdentifyError;
use diagram_convert::{braid_to_pd, BraidWord, PlanarDiagram};

/// How a reference diagram is built.
#[derive(Debug, Clone, Copy)]
pub enum Construction {
    /// The zero-crossing unknot diagram.
    Unknot,
    /// Two-bridge knot with the given continued fraction
    /// `[a_1, ..., a_n]` = `a_1 + 1/(a_2 + 1/(...))`.
    Rational(&'static [i64]),
    /// Pretzel knot `P(q_1, ..., q_m)`.
    Pretzel(&'static [i64]),
    /// Montesinos knot: numerator closure of a sum of rational tangles,
    /// each given by its continued fraction.
    Montesinos(&'static [&'static [i64]]),
    /// Closure of a braid word on the given number of strands; positive
    /// letter `i` is the generator `σ_i`, negative its inverse.
    Braid(usize, &'static [i32]),
}

/// Builds the diagram for a recipe; returns the independently predicted
/// determinant when the recipe has one.
pub fn build(construction: &Construction) -> Result<(PlanarDiagram, Option<u64>), IdentifyError> {
    match construction {
        Construction::Unknot => Ok((PlanarDiagram::unknot(), Some(1))),
        Construction::Rational(cf) => {
            let (pd, det) = rational_pd(cf)?;
            Ok((pd, Some(det)))
        }
        Construction::Pretzel(qs) => {
            let (pd, det) = pretzel_pd(qs)?;
            Ok((pd, Some(det)))
        }
        Construction::Montesinos(fractions) => {
            let (pd, det) = montesinos_pd(fractions)?;
            Ok((pd, Some(det)))
        }
        Construction::Braid(strands, letters) => {
            let word = BraidWord::new(*strands, letters.to_vec())?;
            Ok((braid_to_pd(&word)?, None))
        }
    }
}

/// Recipe per knot name. Covers every row of the published table.
pub const CONSTRUCTIONS: &[(&str, Construction)] = &[
    ("0_1", Construction::Unknot),
    // Two-bridge knots; fraction numerators double as determinant checks.
    ("3_1", Construction::Rational(&[3])),
    ("4_1", Construction::Rational(&[2, 2])),
    ("5_1", Construction::Rational(&[5])),
    ("5_2", Construction::Rational(&[3, 2])),
    ("6_1", Construction::Rational(&[4, 2])),
    ("6_2", Construction::Rational(&[2, 1, 3])),
    ("6_3", Construction::Rational(&[2, 1, 1, 2])),
    ("7_1", Construction::Rational(&[7])),
    ("7_2", Construction::Rational(&[5, 2])),
    ("7_3", Construction::Rational(&[4, 3])),
    ("7_4", Construction::Rational(&[3, 1, 3])),
    ("7_5", Construction::Rational(&[3, 2, 2])),
    ("7_6", Construction::Rational(&[2, 2, 1, 2])),
    ("7_7", Construction::Rational(&[2, 1, 1, 1, 2])),
    ("8_1", Construction::Rational(&[6, 2])),
    ("8_2", Construction::Rational(&[5, 1, 2])),
    ("8_3", Construction::Rational(&[4, 4])),
    ("8_4", Construction::Rational(&[4, 1, 3])),
    ("8_6", Construction::Rational(&[3, 3, 2])),
    ("8_7", Construction::Rational(&[4, 1, 1, 2])),
    ("8_8", Construction::Rational(&[2, 1, 3, 2])),
    ("8_9", Construction::Rational(&[3, 1, 1, 3])),
    ("8_11", Construction::Rational(&[3, 2, 1, 2])),
    ("8_12", Construction::Rational(&[2, 2, 2, 2])),
    ("8_13", Construction::Rational(&[3, 1, 1, 1, 2])),
    ("8_14", Construction::Rational(&[2, 2, 1, 1, 2])),
    ("9_1", Construction::Rational(&[9])),
    ("9_2", Construction::Rational(&[7, 2])),
    ("9_3", Construction::Rational(&[6, 3])),
    ("9_4", Construction::Rational(&[4, 5])),
    ("9_5", Construction::Rational(&[5, 1, 3])),
    ("9_6", Construction::Rational(&[5, 2, 2])),
    ("9_7", Construction::Rational(&[3, 4, 2])),
    ("9_8", Construction::Rational(&[2, 1, 4, 2])),
    ("9_9", Construction::Rational(&[3, 2, 4])),
    ("9_10", Construction::Rational(&[3, 3, 3])),
    ("9_11", Construction::Rational(&[4, 1, 2, 2])),
    ("9_12", Construction::Rational(&[2, 1, 2, 4])),
    ("9_13", Construction::Rational(&[3, 1, 2, 3])),
    ("9_14", Construction::Rational(&[2, 1, 1, 1, 4])),
    ("9_15", Construction::Rational(&[2, 2, 3, 2])),
    ("9_17", Construction::Rational(&[2, 1, 3, 1, 2])),
    ("9_18", Construction::Rational(&[3, 2, 2, 2])),
    ("9_19", Construction::Rational(&[2, 1, 1, 3, 2])),
    ("9_20", Construction::Rational(&[2, 1, 2, 1, 3])),
    ("9_21", Construction::Rational(&[2, 2, 1, 1, 3])),
    ("9_23", Construction::Rational(&[2, 2, 1, 2, 2])),
    ("9_26", Construction::Rational(&[2, 1, 1, 1, 1, 3])),
    ("9_27", Construction::Rational(&[2, 1, 1, 2, 1, 2])),
    ("9_31", Construction::Rational(&[2, 1, 1, 1, 1, 1, 2])),
    // Pretzel knots; the column formula doubles as a determinant check.
    ("8_5", Construction::Pretzel(&[3, 3, 2])),
    ("8_19", Construction::Pretzel(&[-2, 3, 3])),
    ("8_20", Construction::Pretzel(&[3, -3, 2])),
    ("9_35", Construction::Pretzel(&[3, 3, 3])),
    ("9_46", Construction::Pretzel(&[3, 3, -3])),
    // Montesinos knots: sums of rational tangles plus an integer twist
    // region, found by the `braid_search` sweep over small fractions.
    ("9_37", Construction::Montesinos(&[&[0, -3], &[0, -3], &[0, 3], &[2]])),
    ("9_48", Construction::Montesinos(&[&[0, -3], &[0, -3], &[0, -3], &[2]])),
    // Braid closures found by `braid_search` and verified against the
    // published petal sequences.
    ("8_10", Construction::Braid(3, &[-2, -2, -2, 1, -2, -2, 1, 1])),
    ("8_15", Construction::Braid(4, &[3, 2, 2, 1, 3, 1, -2, 3, 1])),
    ("8_16", Construction::Braid(3, &[-2, -2, 1, -2, -2, 1, -2, 1])),
    ("8_17", Construction::Braid(3, &[-2, -2, 1, -2, 1, -2, 1, 1])),
    ("8_18", Construction::Braid(3, &[-2, 1, -2, 1, -2, 1, -2, 1])),
    ("8_21", Construction::Braid(3, &[-2, -2, -1, -1, 2, -1, -2, 1])),
    ("9_16", Construction::Braid(3, &[2, 2, 2, 1, 1, 1, 2, 2, 2, -1])),
    ("9_22", Construction::Braid(4, &[3, 1, -2, 1, -2, 3, -2, -2, -2])),
    ("9_24", Construction::Braid(4, &[3, 1, 3, -2, 1, 3, -2, -2, -2])),
    ("9_25", Construction::Braid(5, &[4, 2, -1, 3, 3, 3, 2, -1, 4, -3])),
    ("9_28", Construction::Braid(4, &[3, 1, 3, 1, -2, 1, 3, -2, -2])),
    ("9_29", Construction::Braid(4, &[3, -2, 1, -2, 3, -2, 1, -2, -2])),
    ("9_30", Construction::Braid(4, &[3, 1, 3, -2, 1, -2, 3, -2, -2])),
    ("9_32", Construction::Braid(4, &[-3, -1, -3, 2, -3, -1, 2, -3, 2])),
    ("9_33", Construction::Braid(4, &[3, 1, -2, 1, 3, -2, 3, -2, -2])),
    ("9_34", Construction::Braid(4, &[-3, -1, 2, -3, 2, -1, 2, -3, 2])),
    ("9_36", Construction::Braid(4, &[-3, -3, -1, -3, 2, -1, -3, -3, 2])),
    ("9_38", Construction::Braid(4, &[3, 3, 2, 1, 1, 2, -3, 2, 2, -1, 2])),
    ("9_39", Construction::Braid(5, &[4, -1, 2, -1, 3, 3, 2, 2, 3, -2, 4, -3])),
    ("9_41", Construction::Braid(5, &[-4, -1, 2, -1, 3, -2, -3, -3, 2, 2, -4, 3])),
    ("9_40", Construction::Braid(4, &[3, 1, -2, 3, 1, -2, 1, 3, -2])),
    ("9_42", Construction::Braid(4, &[-3, -1, 2, -3, 1, -2, 1, -3, 2])),
    ("9_43", Construction::Braid(4, &[3, 2, 2, -1, 2, 3, 2, -1, 2])),
    ("9_44", Construction::Braid(4, &[3, -1, 2, 2, -1, 2, -1, 3, -2])),
    ("9_45", Construction::Braid(4, &[-3, -2, 1, -2, -1, -3, -1, 2, -1])),
    ("9_47", Construction::Braid(4, &[3, 2, -1, 2, 3, 2, -1, 2, -1])),
    ("9_49", Construction::Braid(4, &[-3, -2, -1, -3, -1, -2, 3, -2, -3, 1, -2])),
];

/// The recipe for a knot, if one is frozen in.
pub fn construction_for(name: &str) -> Option<&'static Construction> {
    CONSTRUCTIONS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, c)| c)
}

/// Builds the reference data file: one verified record per table row, as
/// pretty-printed JSON.
///
/// Every diagram must reproduce the fingerprint of its knot's published
/// petal sequence (up to mirror image), and recipes that predict a
/// determinant by arithmetic must agree with the diagram. Any mismatch
/// aborts generation, so a written file is verified end to end.
pub fn generate_table_json() -> Result<String, IdentifyError> {
    let mut records = Vec::new();
    for &(name, petals, levels) in crate::table1::ROWS {
        let sequence = petal_core::PetalSequence::new(levels.to_vec())
            .map_err(|e| IdentifyError::CorruptRecord(format!("{name}: {e}")))?;
        let table_fp = crate::sequence_fingerprint(&sequence)?;
        let construction = construction_for(name).ok_or_else(|| {
            IdentifyError::CorruptRecord(format!("{name}: no construction frozen in"))
        })?;
        let (pd, predicted_det) = build(construction)?;
        let fp = poly_invariants::fingerprint(&pd)?;
        if let Some(det) = predicted_det {
            if det != fp.determinant {
                return Err(IdentifyError::CorruptRecord(format!(
                    "{name}: recipe predicts determinant {det}, diagram has {}",
                    fp.determinant
                )));
            }
        }
        if fp != table_fp && fp != table_fp.mirror() {
            return Err(IdentifyError::CorruptRecord(format!(
                "{name}: recipe fingerprint does not match the published sequence"
            )));
        }
        records.push(crate::RawRecord {
            name: name.to_string(),
            crossing_number: crate::table1::crossing_number(name).ok_or_else(|| {
                IdentifyError::CorruptRecord(format!("{name}: unparseable name"))
            })?,
            table_petal_number: petals,
            table_sequence: sequence,
            pd,
        });
    }
    serde_json::to_string_pretty(&records)
        .map_err(|e| IdentifyError::CorruptRecord(e.to_string()))
}
