//! End-to-end tests of the `petal` binary: documented output shapes, exit
//! codes, and the JSON mode of every subcommand.

use std::process::{Command, Output};

fn petal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_petal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = petal(args);
    assert!(
        out.status.success(),
        "petal {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 stdout")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid JSON output")
}

#[test]
fn torus_three_prints_the_documented_sequence() {
    assert_eq!(stdout(&["torus", "3"]), "1 4 7 3 6 2 5\n");
}

#[test]
fn identify_prints_the_knot_name() {
    assert_eq!(stdout(&["identify", "1 3 5 2 7 4 6"]), "4_1\n");
    assert_eq!(stdout(&["identify", "(1,3,5,2,4)"]), "3_1\n");
}

#[test]
fn reduce_notes_irreducible_sequences() {
    let out = stdout(&["reduce", "1 9 3 5 7 10 2 4 8 11 6"]);
    assert_eq!(out, "1 9 3 5 7 10 2 4 8 11 6\nirreducible\n");
    assert_eq!(stdout(&["reduce", "1 2 3"]), "1\n");
}

#[test]
fn sequences_parse_with_or_without_punctuation() {
    let bare = stdout(&["canon", "3 5 2 4 1"]);
    let commas = stdout(&["canon", "3,5,2,4,1"]);
    let parens = stdout(&["canon", "(3, 5, 2, 4, 1)"]);
    assert_eq!(bare, commas);
    assert_eq!(bare, parens);
}

#[test]
fn validate_reports_petal_count() {
    assert_eq!(stdout(&["validate", "1 3 5 2 4"]), "valid: 5 petals\n");
    let v = json(&["validate", "1 3 5 2 4"]);
    assert_eq!(v["petals"], 5);
    assert_eq!(v["sequence"], serde_json::json!([1, 3, 5, 2, 4]));
}

#[test]
fn domain_errors_exit_one_with_module_error_name() {
    let out = petal(&["validate", "1 2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("SequenceError"), "stderr: {err}");

    let out = petal(&["petal-number", "not_a_knot"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    let out = petal(&["--bogus-flag", "torus", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = petal(&["classify", "--petals", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--petals"), "stderr: {err}");
}

#[test]
fn to_pd_emits_both_paths_as_json() {
    let grid = json(&["to-pd", "--path", "grid", "1 3 5 2 4"]);
    let geometric = json(&["to-pd", "--path", "geometric", "1 3 5 2 4"]);
    // Same knot, different diagrams: the grid staircase for the trefoil has
    // 4 crossings, while the rose projection crosses every strand pair.
    assert_eq!(grid["crossings"].as_array().unwrap().len(), 4);
    assert_eq!(geometric["crossings"].as_array().unwrap().len(), 10);
}

#[test]
fn invariants_reports_the_trefoil_data() {
    let out = stdout(&["invariants", "1 3 5 2 4"]);
    assert!(out.contains("determinant: 3"), "output: {out}");
    assert!(out.contains("jones: "), "output: {out}");
    let v = json(&["invariants", "1 3 5 2 4"]);
    assert_eq!(v["determinant"], 3);
}

#[test]
fn compose_concatenates_knots() {
    let out = stdout(&["compose", "1 3 5 2 4", "1 3 5 2 4"]);
    assert_eq!(out.trim().split(' ').count(), 9);
}

#[test]
fn mirror_flips_levels() {
    assert_eq!(stdout(&["mirror", "1 3 5 2 4"]), "5 3 1 4 2\n");
}

#[test]
fn render_writes_svg() {
    let path = std::env::temp_dir().join("petal-cli-test-rose.svg");
    let _ = std::fs::remove_file(&path);
    stdout(&["render", "1 3 5 2 4", "-o", path.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&path).expect("file written");
    assert!(svg.contains("<svg"), "not SVG: {}", &svg[..svg.len().min(120)]);
    std::fs::remove_file(&path).ok();
}

#[test]
fn sticks_emits_reimportable_conformation_json() {
    let v = json(&["sticks", "1 3 5 2 4"]);
    let vertices = v.as_array().expect("array of vertices");
    assert_eq!(vertices.len(), 8);
    assert_eq!(vertices[0].as_array().unwrap().len(), 3);
}

#[test]
fn petal_number_of_trefoil_is_five() {
    let v = json(&["petal-number", "3_1", "--max", "5"]);
    assert_eq!(v["petal_number"], 5);
    let witnesses = v["witnesses"].as_array().unwrap();
    assert!(!witnesses.is_empty());
}

#[test]
fn classify_five_petals_finds_the_trefoil() {
    let v = json(&["classify", "--petals", "5"]);
    assert!(v["identified"]["3_1"].is_array());
    assert_eq!(v["unidentified"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_table_passes_for_small_rows() {
    let out = stdout(&["verify-table", "--max", "5"]);
    assert!(out.contains("all 2 rows pass"), "output: {out}");
}

#[test]
fn to_grid_displays_and_serializes() {
    let human = stdout(&["to-grid", "1 3 5 2 4"]);
    assert!(human.starts_with("Grid(size=5"), "output: {human}");
    let v = json(&["to-grid", "1 3 5 2 4"]);
    assert_eq!(v["size"], 5);
}
