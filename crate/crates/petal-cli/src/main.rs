//! `petal` — command-line front end for the petal-permutation toolkit.
//!
//! Every subcommand prints its result to standard output, as JSON when
//! `--json` is given and as plain text otherwise. Diagnostics go to standard
//! error. Exit codes: 0 on success, 1 on domain errors (invalid sequences,
//! failed searches, failed verification), 2 on usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use diagram_convert::{
    grid_to_pd, petal_to_grid, petal_to_pd_geometric, render_svg, ConvertError,
};
use knot_identify::{sequence_fingerprint, IdentifyError, KnotTable};
use petal_core::{
    canonicalize, compose, mirror, reduce, torus_sequence, PetalSequence,
    SequenceError,
};
use petal_search::{
    classify_all, petal_number, verify_table, SearchError, SearchOptions,
};
use poly_invariants::{alexander, determinant, jones, InvariantError};
use stick_embed::{petal_to_sticks, StickError};

/// Petal-permutation knot toolkit.
#[derive(Parser)]
#[command(name = "petal", version, about, max_term_width = 100)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a sequence is a valid petal permutation.
    Validate { sequence: String },
    /// Canonical representative under rotation and reversal.
    Canon { sequence: String },
    /// Remove trivial petal pairs until the sequence is irreducible.
    Reduce { sequence: String },
    /// Connected sum of two sequences.
    Compose { first: String, second: String },
    /// Mirror image (levels flipped top to bottom).
    Mirror { sequence: String },
    /// Petal sequence of the (r, r+1) torus knot.
    Torus { r: usize },
    /// Rectangular grid diagram of the sequence.
    ToGrid { sequence: String },
    /// Planar diagram code of the sequence.
    ToPd {
        sequence: String,
        /// Conversion route.
        #[arg(long, value_enum, default_value_t = PdPath::Geometric)]
        path: PdPath,
    },
    /// Render the petal rose as an SVG drawing.
    Render {
        sequence: String,
        /// Output file; standard output when omitted.
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Jones and Alexander polynomials, determinant, and writhe.
    Invariants { sequence: String },
    /// Match the sequence against the reference knot table.
    Identify { sequence: String },
    /// Least petal count realizing a named knot, with all witnesses.
    PetalNumber {
        /// Knot name as listed in the reference table, e.g. `6_2`.
        knot: String,
        /// Largest petal count to try.
        #[arg(long, default_value_t = 11)]
        max: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Identify every canonical sequence with the given petal count.
    Classify {
        /// Petal count to enumerate (odd).
        #[arg(long)]
        petals: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Re-check reference table rows: identification and minimality.
    VerifyTable {
        /// Only rows with table petal number at most this bound.
        #[arg(long, default_value_t = 11)]
        max: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Polygonal stick conformation with exact rational coordinates.
    Sticks {
        sequence: String,
        /// Write the conformation JSON to this file instead of stdout.
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PdPath {
    /// Through the rectangular grid diagram.
    Grid,
    /// Direct projection of the rose diagram.
    Geometric,
}

/// Budget caps shared by the search subcommands.
#[derive(Args)]
struct BudgetArgs {
    /// Worker threads for the enumeration.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Abort after this many fingerprint evaluations.
    #[arg(long, value_name = "N")]
    max_fingerprints: Option<u64>,
    /// Abort after this many seconds of wall-clock time.
    #[arg(long, value_name = "SECS")]
    max_seconds: Option<u64>,
}

impl BudgetArgs {
    fn options(&self, max_petals: usize) -> SearchOptions {
        SearchOptions {
            jobs: self.jobs.max(1),
            max_petals,
            max_fingerprints: self.max_fingerprints,
            max_time: self.max_seconds.map(Duration::from_secs),
        }
    }
}

enum CliError {
    Usage(String),
    Domain(String),
}

macro_rules! domain_from {
    ($($ty:ident),*) => {$(
        impl From<$ty> for CliError {
            fn from(err: $ty) -> Self {
                CliError::Domain(format!(concat!(stringify!($ty), ": {}"), err))
            }
        }
    )*};
}

domain_from!(SequenceError, ConvertError, InvariantError, IdentifyError, SearchError, StickError);

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Domain(format!("io error: {err}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let json = cli.json;
    match cli.command {
        Command::Validate { sequence } => {
            let seq = parse_sequence(&sequence)?;
            if json {
                emit(json!({ "valid": true, "petals": seq.petals(), "sequence": seq.levels() }));
            } else {
                println!("valid: {} petals", seq.petals());
            }
        }
        Command::Canon { sequence } => {
            print_sequence(&canonicalize(&parse_sequence(&sequence)?), json)
        }
        Command::Reduce { sequence } => {
            let seq = parse_sequence(&sequence)?;
            let reduced = reduce(&seq);
            let irreducible = reduced == seq;
            if json {
                emit(json!({
                    "sequence": reduced.levels(),
                    "petals": reduced.petals(),
                    "irreducible": irreducible,
                }));
            } else {
                println!("{}", seq_text(&reduced));
                if irreducible {
                    println!("irreducible");
                }
            }
        }
        Command::Compose { first, second } => {
            let sum = compose(&parse_sequence(&first)?, &parse_sequence(&second)?);
            print_sequence(&sum, json)
        }
        Command::Mirror { sequence } => {
            print_sequence(&mirror(&parse_sequence(&sequence)?), json)
        }
        Command::Torus { r } => print_sequence(&torus_sequence(r)?, json),
        Command::ToGrid { sequence } => {
            let grid = petal_to_grid(&parse_sequence(&sequence)?);
            if json {
                emit(serde_json::to_value(&grid).expect("grid serializes"));
            } else {
                println!("{grid}");
            }
        }
        Command::ToPd { sequence, path } => {
            let seq = parse_sequence(&sequence)?;
            let pd = match path {
                PdPath::Grid => grid_to_pd(&petal_to_grid(&seq))?,
                PdPath::Geometric => petal_to_pd_geometric(&seq)?,
            };
            if json {
                emit(serde_json::to_value(&pd).expect("diagram serializes"));
            } else {
                println!("{pd}");
            }
        }
        Command::Render { sequence, output } => {
            let svg = render_svg(&parse_sequence(&sequence)?);
            match output {
                Some(path) => {
                    fs::write(&path, &svg)?;
                    if json {
                        emit(json!({ "path": path, "bytes": svg.len() }));
                    } else {
                        println!("wrote {} bytes to {}", svg.len(), path.display());
                    }
                }
                None if json => emit(json!({ "svg": svg })),
                None => println!("{svg}"),
            }
        }
        Command::Invariants { sequence } => {
            let pd = petal_to_pd_geometric(&parse_sequence(&sequence)?)?;
            let (jones, alexander) = (jones(&pd)?, alexander(&pd)?);
            let determinant = determinant(&pd)?;
            if json {
                emit(json!({
                    "jones": jones,
                    "alexander": alexander,
                    "determinant": determinant,
                    "writhe": pd.writhe(),
                }));
            } else {
                println!("jones: {jones}");
                println!("alexander: {alexander}");
                println!("determinant: {determinant}");
                println!("writhe: {}", pd.writhe());
            }
        }
        Command::Identify { sequence } => {
            let f = sequence_fingerprint(&parse_sequence(&sequence)?)?;
            let hits = KnotTable::embedded()?.identify(&f);
            if json {
                emit(serde_json::to_value(&hits).expect("identifications serialize"));
            } else {
                if hits.is_empty() {
                    eprintln!("no match in the reference table");
                }
                for hit in &hits {
                    println!("{}", hit.name);
                }
            }
        }
        Command::PetalNumber { knot, max, budget } => {
            let table = KnotTable::embedded()?;
            let record = table.get(&knot).ok_or_else(|| {
                CliError::Domain(format!("`{knot}` is not in the reference table"))
            })?;
            let (p, witnesses) = petal_number(record, max, &table, &budget.options(max))?;
            if json {
                emit(json!({ "name": knot, "petal_number": p, "witnesses": witnesses }));
            } else {
                println!("petal number: {p}");
                for witness in &witnesses {
                    println!("witness: {}", seq_text(witness));
                }
            }
        }
        Command::Classify { petals, budget } => {
            if petals == 0 || petals % 2 == 0 {
                return Err(CliError::Usage(format!(
                    "--petals must be a positive odd integer, got {petals}"
                )));
            }
            let table = KnotTable::embedded()?;
            let report = classify_all(petals, &table, &budget.options(petals))?;
            if json {
                emit(serde_json::to_value(&report).expect("report serializes"));
            } else {
                println!("petals: {}", report.petals);
                for (name, seqs) in &report.identified {
                    println!("{name}: {}", seqs.len());
                }
                println!("unidentified: {}", report.unidentified.len());
            }
        }
        Command::VerifyTable { max, budget } => {
            let table = KnotTable::embedded()?;
            let report = verify_table(&table, max, &budget.options(max))?;
            if json {
                emit(serde_json::to_value(&report).expect("report serializes"));
            } else {
                for row in &report.rows {
                    let minimal = match row.minimality_certified {
                        Some(true) => "yes",
                        Some(false) => "NO",
                        None => "unchecked",
                    };
                    println!(
                        "{}: petals={} identifies={} minimal={}",
                        row.name,
                        row.table_petal_number,
                        if row.sequence_identifies { "yes" } else { "NO" },
                        minimal,
                    );
                }
            }
            if !report.all_pass() {
                return Err(CliError::Domain(format!(
                    "table verification failed for rows with at most {max} petals"
                )));
            }
            if !json {
                println!("all {} rows pass", report.rows.len());
            }
        }
        Command::Sticks { sequence, output } => {
            let conformation = petal_to_sticks(&parse_sequence(&sequence)?);
            match output {
                Some(path) => {
                    fs::write(&path, conformation.to_json())?;
                    if json {
                        emit(json!({
                            "path": path,
                            "segments": conformation.segment_count(),
                        }));
                    } else {
                        println!(
                            "wrote {} segments to {}",
                            conformation.segment_count(),
                            path.display()
                        );
                    }
                }
                None if json => println!("{}", conformation.to_json()),
                None => {
                    for vertex in conformation.vertices() {
                        println!("{} {} {}", vertex.x, vertex.y, vertex.z);
                    }
                }
            }
        }
    }
    Ok(())
}

fn parse_sequence(text: &str) -> Result<PetalSequence, CliError> {
    Ok(text.parse::<PetalSequence>()?)
}

fn seq_text(seq: &PetalSequence) -> String {
    let levels: Vec<String> = seq.levels().iter().map(|l| l.to_string()).collect();
    levels.join(" ")
}

fn print_sequence(seq: &PetalSequence, json: bool) {
    if json {
        emit(json!({ "sequence": seq.levels(), "petals": seq.petals() }));
    } else {
        println!("{}", seq_text(seq));
    }
}

fn emit(value: serde_json::Value) {
    println!("{value}");
}
