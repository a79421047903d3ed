//! Published petal numbers and minimal petal sequences for the prime
//! knots with fewer than ten crossings, plus the unknot.
//!
//! Each row is `(name, petal_number, minimal_sequence)`. These sequences
//! are the source of truth for knot naming: the reference table generator
//! accepts a construction for knot `X` only if its fingerprint matches the
//! fingerprint of `X`'s row here (up to mirror image).

use petal_core::Level;

/// `(name, petal number, minimal petal sequence)` for the unknot and all
/// 84 prime knots with crossing number ≤ 9.
pub const ROWS: &[(&str, usize, &[Level])] = &[
    ("0_1", 1, &[1]),
    ("3_1", 5, &[1, 3, 5, 2, 4]),
    ("4_1", 7, &[1, 3, 5, 2, 7, 4, 6]),
    ("5_1", 7, &[1, 3, 6, 2, 5, 7, 4]),
    ("5_2", 7, &[1, 3, 6, 2, 4, 7, 5]),
    ("6_1", 9, &[1, 3, 5, 2, 8, 4, 6, 9, 7]),
    ("6_2", 9, &[1, 3, 5, 2, 8, 4, 7, 9, 6]),
    ("6_3", 9, &[1, 3, 5, 2, 9, 7, 4, 8, 6]),
    ("7_1", 9, &[1, 8, 4, 9, 5, 3, 6, 2, 7]),
    ("7_2", 9, &[1, 3, 6, 9, 7, 2, 4, 8, 5]),
    ("7_3", 9, &[1, 3, 6, 9, 7, 2, 5, 8, 4]),
    ("7_4", 9, &[1, 3, 6, 4, 8, 2, 5, 9, 7]),
    ("7_5", 9, &[1, 3, 6, 4, 8, 2, 7, 9, 5]),
    ("7_6", 9, &[1, 3, 6, 4, 9, 7, 2, 8, 5]),
    ("7_7", 9, &[1, 3, 7, 9, 4, 6, 2, 8, 5]),
    ("8_1", 11, &[1, 3, 5, 2, 8, 11, 9, 4, 6, 10, 7]),
    ("8_2", 11, &[1, 3, 5, 2, 9, 4, 7, 11, 8, 10, 6]),
    ("8_3", 11, &[1, 3, 6, 2, 9, 5, 11, 4, 7, 10, 8]),
    ("8_4", 11, &[1, 3, 5, 8, 6, 2, 10, 4, 7, 11, 9]),
    ("8_5", 11, &[1, 3, 5, 8, 6, 11, 9, 2, 10, 4, 7]),
    ("8_6", 11, &[1, 3, 5, 2, 8, 6, 10, 4, 9, 11, 7]),
    ("8_7", 11, &[1, 3, 5, 2, 10, 7, 4, 8, 11, 9, 6]),
    ("8_8", 11, &[1, 3, 5, 2, 8, 6, 11, 9, 4, 10, 7]),
    ("8_9", 11, &[1, 3, 5, 9, 2, 7, 11, 6, 4, 10, 8]),
    ("8_10", 11, &[1, 3, 5, 2, 9, 7, 11, 8, 4, 10, 6]),
    ("8_11", 11, &[1, 3, 5, 2, 8, 11, 9, 4, 7, 10, 6]),
    ("8_12", 11, &[1, 3, 5, 2, 9, 11, 8, 6, 10, 4, 7]),
    ("8_13", 11, &[1, 3, 5, 2, 10, 7, 4, 9, 11, 8, 6]),
    ("8_14", 11, &[1, 3, 5, 2, 10, 8, 11, 6, 9, 4, 7]),
    ("8_15", 11, &[1, 3, 5, 2, 8, 11, 7, 9, 4, 10, 6]),
    ("8_16", 11, &[1, 3, 5, 8, 6, 2, 11, 9, 4, 10, 7]),
    ("8_17", 11, &[1, 3, 5, 8, 6, 2, 10, 4, 9, 11, 7]),
    ("8_18", 11, &[1, 3, 7, 4, 10, 2, 8, 6, 11, 9, 5]),
    ("8_19", 7, &[1, 4, 7, 3, 6, 2, 5]),
    ("8_20", 9, &[1, 3, 5, 8, 2, 6, 9, 4, 7]),
    ("8_21", 9, &[1, 3, 5, 8, 2, 7, 4, 9, 6]),
    ("9_1", 11, &[1, 10, 5, 11, 6, 4, 7, 3, 8, 2, 9]),
    ("9_2", 11, &[1, 3, 6, 10, 7, 2, 4, 8, 11, 9, 5]),
    ("9_3", 11, &[1, 3, 7, 5, 9, 2, 6, 11, 8, 10, 4]),
    ("9_4", 11, &[1, 3, 6, 10, 7, 2, 5, 8, 11, 9, 4]),
    ("9_5", 11, &[1, 3, 6, 4, 8, 11, 9, 2, 5, 10, 7]),
    ("9_6", 11, &[1, 3, 6, 4, 9, 2, 7, 11, 8, 10, 5]),
    ("9_7", 11, &[1, 3, 6, 10, 7, 2, 4, 9, 11, 8, 5]),
    ("9_8", 11, &[1, 3, 6, 10, 8, 4, 11, 7, 2, 9, 5]),
    ("9_9", 11, &[1, 3, 6, 10, 7, 2, 5, 9, 11, 8, 4]),
    ("9_10", 11, &[1, 3, 7, 5, 8, 11, 9, 2, 6, 10, 4]),
    ("9_11", 11, &[1, 3, 6, 4, 10, 7, 2, 8, 11, 9, 5]),
    ("9_12", 11, &[1, 3, 6, 10, 5, 7, 2, 8, 11, 9, 4]),
    ("9_13", 11, &[1, 3, 6, 4, 9, 2, 5, 11, 8, 10, 7]),
    ("9_14", 11, &[1, 3, 7, 10, 5, 2, 9, 11, 8, 4, 6]),
    ("9_15", 11, &[1, 3, 6, 4, 10, 8, 2, 7, 11, 9, 5]),
    ("9_16", 11, &[1, 3, 7, 4, 10, 2, 9, 11, 6, 8, 5]),
    ("9_17", 11, &[1, 3, 7, 10, 4, 6, 2, 9, 11, 8, 5]),
    ("9_18", 11, &[1, 3, 6, 4, 8, 11, 9, 2, 7, 10, 5]),
    ("9_19", 11, &[1, 3, 7, 5, 9, 11, 4, 8, 2, 10, 6]),
    ("9_20", 11, &[1, 3, 6, 4, 10, 8, 2, 9, 5, 11, 7]),
    ("9_21", 11, &[1, 3, 6, 4, 10, 7, 2, 9, 11, 8, 5]),
    ("9_22", 11, &[1, 3, 6, 4, 9, 7, 2, 10, 5, 11, 8]),
    ("9_23", 11, &[1, 3, 6, 4, 9, 11, 7, 2, 8, 10, 5]),
    ("9_24", 11, &[1, 3, 6, 11, 5, 7, 2, 9, 4, 10, 8]),
    ("9_25", 11, &[1, 3, 6, 4, 8, 11, 7, 9, 2, 10, 5]),
    ("9_26", 11, &[1, 3, 7, 5, 10, 6, 2, 9, 11, 4, 8]),
    ("9_27", 11, &[1, 3, 6, 4, 11, 7, 2, 8, 10, 5, 9]),
    ("9_28", 11, &[1, 3, 6, 11, 5, 7, 2, 8, 10, 4, 9]),
    ("9_29", 11, &[1, 3, 6, 4, 10, 7, 2, 8, 5, 11, 9]),
    ("9_30", 11, &[1, 3, 6, 4, 10, 8, 2, 7, 11, 5, 9]),
    ("9_31", 11, &[1, 3, 6, 10, 5, 7, 2, 9, 11, 4, 8]),
    ("9_32", 11, &[1, 3, 6, 4, 9, 11, 7, 2, 10, 5, 8]),
    ("9_33", 11, &[1, 3, 6, 4, 10, 2, 7, 11, 9, 5, 8]),
    ("9_34", 13, &[1, 3, 7, 9, 13, 5, 11, 8, 2, 4, 6, 10, 12]),
    ("9_35", 11, &[1, 3, 10, 6, 2, 9, 11, 8, 5, 7, 4]),
    ("9_36", 11, &[1, 3, 6, 4, 9, 7, 11, 8, 2, 10, 5]),
    ("9_37", 11, &[1, 3, 7, 10, 4, 6, 2, 8, 11, 9, 5]),
    ("9_38", 11, &[1, 3, 6, 4, 9, 2, 7, 11, 5, 10, 8]),
    ("9_39", 11, &[1, 3, 6, 4, 10, 2, 7, 9, 5, 11, 8]),
    ("9_40", 13, &[1, 11, 7, 5, 13, 2, 10, 8, 6, 12, 4, 9, 3]),
    ("9_41", 11, &[1, 3, 7, 11, 4, 8, 10, 6, 2, 9, 5]),
    ("9_42", 9, &[1, 3, 6, 2, 9, 5, 8, 4, 7]),
    ("9_43", 9, &[1, 3, 6, 9, 5, 8, 2, 7, 4]),
    ("9_44", 9, &[1, 3, 6, 9, 4, 7, 2, 8, 5]),
    ("9_45", 9, &[1, 3, 7, 4, 9, 6, 2, 8, 5]),
    ("9_46", 9, &[1, 3, 6, 9, 5, 2, 8, 4, 7]),
    ("9_47", 11, &[1, 3, 5, 7, 10, 4, 9, 6, 2, 11, 8]),
    ("9_48", 11, &[1, 3, 5, 2, 9, 11, 7, 4, 10, 6, 8]),
    ("9_49", 11, &[1, 3, 5, 2, 7, 11, 8, 4, 10, 6, 9]),
];

/// Crossing number parsed from a table name like `"8_19"`; the unknot
/// `"0_1"` has zero crossings.
pub fn crossing_number(name: &str) -> Option<u32> {
    name.split('_').next()?.parse().ok()
}
