//! Identification of knots against the prime tables through nine crossings.
//!
//! The crate ships a reference database: one record per prime knot with at
//! most nine crossings (plus the unknot), each carrying a reference planar
//! diagram built from standard twist constructions, the knot's minimal
//! petal sequence, and its petal number. Fingerprints are computed from
//! the shipped diagrams at load time, never stored, so loading the table
//! re-validates the whole invariant engine against 85 independent
//! diagrams.
//!
//! [`KnotTable::identify`] resolves a fingerprint to the matching records
//! together with a chirality verdict: a chiral knot is reported as stored
//! or as its mirror image depending on which orientation matched.

#![warn(missing_docs)]

pub mod constructions;
pub mod table1;
pub mod tangle;

use std::fmt;
use std::fs;
use std::path::Path;

use diagram_convert::{grid_to_pd, petal_to_grid, PlanarDiagram};
use petal_core::{Level, PetalSequence};
use poly_invariants::{fingerprint, Fingerprint};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from loading the reference table or building reference diagrams.
#[derive(Debug, Error)]
pub enum IdentifyError {
    /// The reference data file could not be read.
    #[error("reference data unavailable: {0}")]
    MissingData(#[from] std::io::Error),

    /// The reference data was readable but not a valid knot table.
    #[error("corrupt knot record: {0}")]
    CorruptRecord(String),

    /// A shipped diagram failed planar-diagram validation.
    #[error(transparent)]
    Convert(#[from] diagram_convert::ConvertError),

    /// Fingerprinting a reference diagram failed.
    #[error(transparent)]
    Invariant(#[from] poly_invariants::InvariantError),

    /// A tangle closure produced a link with several components.
    #[error("tangle closure has {components} components, so it is not a knot")]
    NotAKnot {
        /// Number of components of the closure.
        components: usize,
    },
}

/// One entry of the reference database.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotRecord {
    /// Standard table name, e.g. `"6_2"`.
    pub name: String,
    /// Minimal crossing number of the knot.
    pub crossing_number: u32,
    /// Petal number from the minimal petal representation.
    pub table_petal_number: usize,
    /// The published minimal petal sequence.
    pub table_sequence: PetalSequence,
    /// Reference planar diagram, built independently of petal projections.
    pub pd: PlanarDiagram,
    /// Fingerprint of `pd`, computed at load time.
    pub fingerprint: Fingerprint,
    /// Fingerprint of the mirror image of `pd`.
    pub mirror_fingerprint: Fingerprint,
}

/// Whether a fingerprint matched a record's stored diagram, its mirror
/// image, or both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Chirality {
    /// Only the stored orientation matched.
    AsStored,
    /// Only the mirror image matched.
    Mirrored,
    /// Both matched: the fingerprint cannot distinguish the knot from its
    /// mirror image.
    AmphichiralAmbiguous,
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::AsStored => "as-stored",
            Chirality::Mirrored => "mirrored",
            Chirality::AmphichiralAmbiguous => "amphichiral-ambiguous",
        })
    }
}

/// One identification hit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identification {
    /// Name of the matching record.
    pub name: String,
    /// How the fingerprint matched that record.
    pub chirality: Chirality,
}

/// On-disk form of a record: invariants are recomputed, never shipped.
#[derive(Serialize, Deserialize)]
struct RawRecord {
    name: String,
    crossing_number: u32,
    table_petal_number: usize,
    table_sequence: PetalSequence,
    pd: PlanarDiagram,
}

impl RawRecord {
    fn into_record(self) -> Result<KnotRecord, IdentifyError> {
        let corrupt = |msg: String| IdentifyError::CorruptRecord(msg);
        if self.table_petal_number % 2 == 0 {
            return Err(corrupt(format!(
                "{}: petal number {} is even",
                self.name, self.table_petal_number
            )));
        }
        if self.table_sequence.petals() != self.table_petal_number {
            return Err(corrupt(format!(
                "{}: sequence has {} petals, record claims {}",
                self.name,
                self.table_sequence.petals(),
                self.table_petal_number
            )));
        }
        let fp = fingerprint(&self.pd)?;
        let mirror_fingerprint = fp.mirror();
        Ok(KnotRecord {
            name: self.name,
            crossing_number: self.crossing_number,
            table_petal_number: self.table_petal_number,
            table_sequence: self.table_sequence,
            pd: self.pd,
            fingerprint: fp,
            mirror_fingerprint,
        })
    }
}

/// The loaded reference database.
///
/// Immutable after load; lookups are read-only.
pub struct KnotTable {
    records: Vec<KnotRecord>,
}

impl KnotTable {
    /// Loads and validates a reference data file.
    pub fn load_table(path: impl AsRef<Path>) -> Result<Self, IdentifyError> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    /// Loads the table shipped inside the crate.
    pub fn embedded() -> Result<Self, IdentifyError> {
        Self::from_json(include_str!("../data/knot_table.json"))
    }

    /// Parses and validates reference data from JSON text.
    pub fn from_json(text: &str) -> Result<Self, IdentifyError> {
        let raw: Vec<RawRecord> = serde_json::from_str(text)
            .map_err(|e| IdentifyError::CorruptRecord(e.to_string()))?;
        let records = raw
            .into_iter()
            .map(RawRecord::into_record)
            .collect::<Result<Vec<_>, _>>()?;
        let mut names = std::collections::HashSet::new();
        for record in &records {
            // Duplicate names would make `get` ambiguous.
            if !names.insert(record.name.clone()) {
                return Err(IdentifyError::CorruptRecord(format!(
                    "duplicate record {}",
                    record.name
                )));
            }
        }
        Ok(KnotTable { records })
    }

    /// All records, in file order.
    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    /// Looks up a record by table name.
    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// Returns every record whose fingerprint or mirror fingerprint equals
    /// `f`, with a chirality verdict per hit.
    ///
    /// Jones and Alexander polynomials must both match; an empty result
    /// means the fingerprint belongs to no knot in the table.
    pub fn identify(&self, f: &Fingerprint) -> Vec<Identification> {
        self.records
            .iter()
            .filter_map(|record| {
                let stored = polynomials_match(f, &record.fingerprint);
                let mirrored = polynomials_match(f, &record.mirror_fingerprint);
                let chirality = match (stored, mirrored) {
                    (true, true) => Chirality::AmphichiralAmbiguous,
                    (true, false) => Chirality::AsStored,
                    (false, true) => Chirality::Mirrored,
                    (false, false) => return None,
                };
                // The determinant is implied by the polynomials; a mismatch
                // means the query fingerprint is internally inconsistent.
                assert_eq!(
                    f.determinant, record.fingerprint.determinant,
                    "fingerprint determinant disagrees with its polynomials"
                );
                Some(Identification {
                    name: record.name.clone(),
                    chirality,
                })
            })
            .collect()
    }

    /// Pairs of distinct records that share a fingerprint up to mirror
    /// image.
    ///
    /// A nonempty report would mean identification inside the table is
    /// ambiguous; for the shipped table it is empty.
    pub fn collision_report(&self) -> Vec<(String, String)> {
        let mut collisions = Vec::new();
        for (i, a) in self.records.iter().enumerate() {
            for b in &self.records[i + 1..] {
                if polynomials_match(&a.fingerprint, &b.fingerprint)
                    || polynomials_match(&a.fingerprint, &b.mirror_fingerprint)
                {
                    collisions.push((a.name.clone(), b.name.clone()));
                }
            }
        }
        collisions
    }
}

fn polynomials_match(a: &Fingerprint, b: &Fingerprint) -> bool {
    a.jones == b.jones && a.alexander == b.alexander
}

/// Fingerprints a petal sequence through the grid pipeline.
///
/// Convenience for the common query path: sequence, grid, planar diagram,
/// fingerprint.
pub fn sequence_fingerprint(seq: &PetalSequence) -> Result<Fingerprint, IdentifyError> {
    let pd = grid_to_pd(&petal_to_grid(seq))?;
    Ok(fingerprint(&pd)?)
}

/// Fingerprints a raw level list, validating it first.
pub fn levels_fingerprint(levels: &[Level]) -> Result<Fingerprint, IdentifyError> {
    let seq = PetalSequence::new(levels.to_vec())
        .map_err(|e| IdentifyError::CorruptRecord(e.to_string()))?;
    sequence_fingerprint(&seq)
}
