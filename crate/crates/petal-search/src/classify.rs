//! Classification of enumerated sequences against the reference table.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use knot_identify::{sequence_fingerprint, KnotRecord, KnotTable};
use petal_core::{reduce, Level, PetalSequence};
use poly_invariants::Fingerprint;
use serde::Serialize;

use crate::enumerate::{enumerate_chunk, enumerate_sequences};
use crate::SearchError;

/// Knobs for the exhaustive searches: parallelism and safety rails.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Worker threads classifying sequence chunks. Results are merged in
    /// stream order, so any value produces the identical report.
    pub jobs: usize,
    /// Largest petal count the search agrees to enumerate.
    pub max_petals: usize,
    /// Abort after this many fingerprint computations.
    pub max_fingerprints: Option<u64>,
    /// Abort once this much wall-clock time has elapsed.
    pub max_time: Option<Duration>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            jobs: 1,
            max_petals: 11,
            max_fingerprints: None,
            max_time: None,
        }
    }
}

/// Shared budget accounting for one search call, which may span several
/// petal counts and worker threads.
struct Budget {
    start: Instant,
    fingerprints: AtomicU64,
    max_fingerprints: u64,
    max_time: Option<Duration>,
}

impl Budget {
    fn new(options: &SearchOptions) -> Self {
        Budget {
            start: Instant::now(),
            fingerprints: AtomicU64::new(0),
            max_fingerprints: options.max_fingerprints.unwrap_or(u64::MAX),
            max_time: options.max_time,
        }
    }

    /// Records one fingerprint computation, failing once either cap is
    /// crossed. The clock is only consulted every 64 charges.
    fn charge(&self) -> Result<(), SearchError> {
        let used = self.fingerprints.fetch_add(1, Ordering::Relaxed) + 1;
        let timed_out = match self.max_time {
            Some(cap) => used % 64 == 0 && self.start.elapsed() > cap,
            None => false,
        };
        if used > self.max_fingerprints || timed_out {
            return Err(SearchError::BudgetExceeded {
                fingerprints: used,
                elapsed: self.start.elapsed(),
            });
        }
        Ok(())
    }
}

/// Runs `visit` over every canonical sequence of length `p`, in stream
/// order, keeping whatever it returns. With several jobs the stream is
/// split into one chunk per second entry and the chunk results are
/// reassembled in stream order, so the output never depends on thread
/// scheduling.
fn map_sequences<T, F>(
    p: usize,
    options: &SearchOptions,
    budget: &Budget,
    visit: F,
) -> Result<Vec<T>, SearchError>
where
    T: Send,
    F: Fn(PetalSequence, &Budget) -> Result<Option<T>, SearchError> + Sync,
{
    let run_chunk = |chunk: crate::CanonicalSequences| {
        let mut kept = Vec::new();
        for seq in chunk {
            if let Some(item) = visit(seq, budget)? {
                kept.push(item);
            }
        }
        Ok(kept)
    };

    if p == 1 || options.jobs <= 1 {
        let mut kept = Vec::new();
        kept.push(run_chunk(enumerate_sequences(p)?)?);
        return Ok(kept.into_iter().flatten().collect());
    }

    let seconds: Vec<Level> = (2..=p as Level).collect();
    let workers = options.jobs.min(seconds.len());
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<Result<Vec<T>, SearchError>>> = Vec::new();
    slots.resize_with(seconds.len(), || None);

    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for _ in 0..workers {
            handles.push(scope.spawn(|| {
                let mut mine = Vec::new();
                loop {
                    let k = next.fetch_add(1, Ordering::Relaxed);
                    if k >= seconds.len() {
                        return mine;
                    }
                    let outcome = run_chunk(enumerate_chunk(p, seconds[k]));
                    let stop = outcome.is_err();
                    mine.push((k, outcome));
                    if stop {
                        return mine;
                    }
                }
            }));
        }
        for handle in handles {
            for (k, outcome) in handle.join().expect("search worker panicked") {
                slots[k] = Some(outcome);
            }
        }
    });

    let mut merged = Vec::new();
    for slot in slots {
        match slot {
            Some(Ok(kept)) => merged.extend(kept),
            Some(Err(e)) => return Err(e),
            // A later worker hit the budget before this chunk was claimed.
            None => {
                return Err(SearchError::BudgetExceeded {
                    fingerprints: budget.fingerprints.load(Ordering::Relaxed),
                    elapsed: budget.start.elapsed(),
                })
            }
        }
    }
    Ok(merged)
}

/// Everything classification learns about the sequences of one petal count.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    /// The petal count that was enumerated.
    pub petals: usize,
    /// Knot name to the canonical sequences realizing it at this petal
    /// count, each list in enumeration order.
    pub identified: BTreeMap<String, Vec<PetalSequence>>,
    /// Sequences whose fingerprint matches nothing in the table, with the
    /// fingerprint so the outsider can be recognized later.
    pub unidentified: Vec<(PetalSequence, Fingerprint)>,
}

impl ClassificationReport {
    /// Names of the identified knots other than the unknot.
    pub fn nontrivial_names(&self) -> Vec<&str> {
        self.identified
            .keys()
            .map(String::as_str)
            .filter(|&n| n != "0_1")
            .collect()
    }
}

enum Classified {
    Known(String, PetalSequence),
    Unknown(PetalSequence, Fingerprint),
}

/// Fingerprints every canonical sequence of length `p` and buckets it by
/// table identification.
///
/// Each sequence is reduced first: trivial loops never change the knot,
/// and the smaller diagram is cheaper to fingerprint. The original
/// length-`p` sequence is what lands in the report, so the identified
/// buckets list every knot representable with `p` petals, stabilized
/// smaller knots included.
pub fn classify_all(
    p: usize,
    db: &KnotTable,
    options: &SearchOptions,
) -> Result<ClassificationReport, SearchError> {
    if p > options.max_petals {
        return Err(SearchError::PetalLimit {
            petals: p,
            max: options.max_petals,
        });
    }
    let budget = Budget::new(options);
    let outcomes = map_sequences(p, options, &budget, |seq, budget| {
        budget.charge()?;
        let f = sequence_fingerprint(&reduce(&seq))?;
        Ok(Some(match db.identify(&f).first() {
            Some(hit) => Classified::Known(hit.name.clone(), seq),
            None => Classified::Unknown(seq, f),
        }))
    })?;

    let mut report = ClassificationReport {
        petals: p,
        identified: BTreeMap::new(),
        unidentified: Vec::new(),
    };
    for outcome in outcomes {
        match outcome {
            Classified::Known(name, seq) => {
                report.identified.entry(name).or_default().push(seq)
            }
            Classified::Unknown(seq, f) => report.unidentified.push((seq, f)),
        }
    }
    Ok(report)
}

/// The canonical sequences of length exactly `p` that fingerprint to
/// `target`, skipping sequences that reduce below `p`.
///
/// The skip is sound for minimality questions: at the least petal count
/// realizing a knot, every realizing sequence is irreducible, because a
/// trivial loop would reduce it to a smaller realization.
fn irreducible_witnesses(
    target: &KnotRecord,
    p: usize,
    db: &KnotTable,
    options: &SearchOptions,
    budget: &Budget,
) -> Result<Vec<PetalSequence>, SearchError> {
    map_sequences(p, options, budget, |seq, budget| {
        if reduce(&seq).petals() < p {
            return Ok(None);
        }
        budget.charge()?;
        let f = sequence_fingerprint(&seq)?;
        let hit = db.identify(&f).iter().any(|id| id.name == target.name);
        Ok(hit.then_some(seq))
    })
}

/// Finds the least odd petal count at or below `p_max` realizing
/// `target` (up to mirror image), together with every canonical witness
/// at that count.
pub fn petal_number(
    target: &KnotRecord,
    p_max: usize,
    db: &KnotTable,
    options: &SearchOptions,
) -> Result<(usize, Vec<PetalSequence>), SearchError> {
    if p_max > options.max_petals {
        return Err(SearchError::PetalLimit {
            petals: p_max,
            max: options.max_petals,
        });
    }
    let budget = Budget::new(options);
    let mut p = 1;
    while p <= p_max {
        let witnesses = irreducible_witnesses(target, p, db, options, &budget)?;
        if !witnesses.is_empty() {
            return Ok((p, witnesses));
        }
        p += 2;
    }
    Err(SearchError::NotFound { p_max })
}

/// One table row's verification outcome.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyRow {
    /// Knot name as in the table.
    pub name: String,
    /// The petal number the table claims.
    pub table_petal_number: usize,
    /// Whether the published sequence fingerprints to the named knot
    /// (up to mirror image).
    pub sequence_identifies: bool,
    /// Whether exhaustive search below the claimed petal number found no
    /// realization. `None` when there is nothing below to search.
    pub minimality_certified: Option<bool>,
}

/// Outcome of replaying the shipped table, row by row.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    /// Rows with table petal number at most this were verified.
    pub p_max: usize,
    /// Per-row outcomes, in table order.
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    /// Whether every row passed both checks.
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|row| {
            row.sequence_identifies && row.minimality_certified.unwrap_or(true)
        })
    }
}

/// Replays the shipped table: for every record whose claimed petal number
/// is at most `p_max`, checks that (a) the published sequence identifies
/// as the named knot and (b) no sequence with fewer petals realizes it.
///
/// Check (b) scans every odd petal count from 3 through the claim minus 2
/// for irreducible realizations; one scan per petal count is shared by
/// all rows. Row failures are reported, not raised.
pub fn verify_table(
    db: &KnotTable,
    p_max: usize,
    options: &SearchOptions,
) -> Result<VerifyReport, SearchError> {
    let rows: Vec<&KnotRecord> = db
        .records()
        .iter()
        .filter(|r| r.table_petal_number <= p_max)
        .collect();
    let budget = Budget::new(options);

    // names_at[q] = knots with an irreducible realization at q petals.
    let top_scan = rows
        .iter()
        .map(|r| r.table_petal_number)
        .max()
        .unwrap_or(1)
        .saturating_sub(2);
    let mut names_at: BTreeMap<usize, HashSet<String>> = BTreeMap::new();
    let mut q = 3;
    while q <= top_scan {
        let found = map_sequences(q, options, &budget, |seq, budget| {
            if reduce(&seq).petals() < q {
                return Ok(None);
            }
            budget.charge()?;
            let f = sequence_fingerprint(&seq)?;
            Ok(db.identify(&f).first().map(|hit| hit.name.clone()))
        })?;
        names_at.insert(q, found.into_iter().collect());
        q += 2;
    }

    let mut report = VerifyReport {
        p_max,
        rows: Vec::with_capacity(rows.len()),
    };
    for record in rows {
        let f = sequence_fingerprint(&record.table_sequence)?;
        let sequence_identifies =
            db.identify(&f).iter().any(|id| id.name == record.name);
        let p = record.table_petal_number;
        let minimality_certified = if p <= 3 {
            None
        } else {
            Some((3..=p - 2).step_by(2).all(|q| {
                !names_at
                    .get(&q)
                    .map(|names| names.contains(&record.name))
                    .unwrap_or(false)
            }))
        };
        report.rows.push(VerifyRow {
            name: record.name.clone(),
            table_petal_number: p,
            sequence_identifies,
            minimality_certified,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn db() -> KnotTable {
        KnotTable::embedded().unwrap()
    }

    #[test]
    fn classify_refuses_beyond_configured_maximum() {
        let options = SearchOptions {
            max_petals: 5,
            ..SearchOptions::default()
        };
        assert!(matches!(
            classify_all(7, &db(), &options),
            Err(SearchError::PetalLimit { petals: 7, max: 5 })
        ));
    }

    #[test]
    fn count_budget_trips() {
        let options = SearchOptions {
            max_fingerprints: Some(3),
            ..SearchOptions::default()
        };
        assert!(matches!(
            classify_all(5, &db(), &options),
            Err(SearchError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn trivial_census_is_the_unknot_alone() {
        let report = classify_all(1, &db(), &SearchOptions::default()).unwrap();
        assert_eq!(report.petals, 1);
        assert_eq!(report.identified.len(), 1);
        assert_eq!(report.identified["0_1"].len(), 1);
        assert!(report.unidentified.is_empty());
        assert!(report.nontrivial_names().is_empty());
    }

    #[test]
    fn unknot_petal_number_is_one() {
        let table = db();
        let target = table.get("0_1").unwrap();
        let (p, witnesses) =
            petal_number(target, 5, &table, &SearchOptions::default()).unwrap();
        assert_eq!(p, 1);
        assert_eq!(witnesses.len(), 1);
    }

    #[test]
    fn missing_knot_reports_not_found() {
        let table = db();
        let target = table.get("6_1").unwrap();
        assert!(matches!(
            petal_number(target, 5, &table, &SearchOptions::default()),
            Err(SearchError::NotFound { p_max: 5 })
        ));
    }
}
