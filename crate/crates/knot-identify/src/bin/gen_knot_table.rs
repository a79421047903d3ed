//! Regenerates the reference data file from the frozen constructions.
//!
//! Writes `data/knot_table.json` next to the crate manifest, then reloads
//! it through the public loader and prints identification statistics. Any
//! verification failure (determinant arithmetic, fingerprint against the
//! published petal sequence, or a collision between records) aborts with
//! a nonzero exit.

use std::path::Path;

use knot_identify::constructions::generate_table_json;
use knot_identify::KnotTable;

fn main() {
    let json = generate_table_json().unwrap_or_else(|e| panic!("generation failed: {e}"));
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/knot_table.json");
    std::fs::write(&path, &json).unwrap_or_else(|e| panic!("writing {}: {e}", path.display()));

    let table = KnotTable::from_json(&json).expect("generated table loads");
    println!(
        "wrote {} records to {}",
        table.records().len(),
        path.display()
    );

    let collisions = table.collision_report();
    assert!(
        collisions.is_empty(),
        "fingerprint collisions within the table: {collisions:?}"
    );
    println!("no fingerprint collisions; identification is unambiguous");

    let amphichiral: Vec<&str> = table
        .records()
        .iter()
        .filter(|r| r.fingerprint.is_mirror_symmetric())
        .map(|r| r.name.as_str())
        .collect();
    println!("mirror-symmetric fingerprints: {}", amphichiral.join(" "));
}
