//! Structural invariants of the two conversion routes, checked across
//! exhaustive and random sequence populations. Polynomial-level agreement
//! of the routes is certified downstream where Jones is available.

use diagram_convert::{
    grid_to_pd, petal_to_grid, petal_to_pd_geometric, render_grid_svg,
    render_svg,
};
use petal_core::{random_sequence, PetalSequence};

/// All permutations of 1..=p, via Heap's algorithm.
fn all_permutations(p: u16) -> Vec<Vec<u16>> {
    let mut items: Vec<u16> = (1..=p).collect();
    let mut out = vec![items.clone()];
    let n = items.len();
    let mut counters = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(counters[i], i);
            }
            out.push(items.clone());
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

#[test]
fn exhaustive_small_sequences_convert_on_both_routes() {
    for p in [5u16, 7] {
        let pairs = (p as usize * (p as usize - 1)) / 2;
        for levels in all_permutations(p) {
            let s = PetalSequence::new(levels).unwrap();
            let grid = petal_to_grid(&s);
            assert_eq!(grid.size(), p as usize);
            let pd_grid = grid_to_pd(&grid)
                .unwrap_or_else(|e| panic!("grid route failed for {s}: {e}"));
            assert!(
                pd_grid.crossing_count() <= pairs,
                "{s}: {} crossings exceed C(p,2) = {pairs}",
                pd_grid.crossing_count()
            );
            let pd_geom = petal_to_pd_geometric(&s)
                .unwrap_or_else(|e| panic!("geometric route failed for {s}: {e}"));
            assert_eq!(pd_geom.crossing_count(), pairs, "{s}");
        }
    }
}

#[test]
fn random_large_sequences_convert_on_both_routes() {
    for p in [9usize, 11, 13] {
        let pairs = p * (p - 1) / 2;
        for seed in 0..40 {
            let s = random_sequence(p, seed).unwrap();
            let pd_grid = grid_to_pd(&petal_to_grid(&s)).unwrap();
            assert!(pd_grid.crossing_count() <= pairs);
            let pd_geom = petal_to_pd_geometric(&s).unwrap();
            assert_eq!(pd_geom.crossing_count(), pairs);
        }
    }
}

#[test]
fn torus_sequences_convert_cleanly() {
    for r in 1..=5 {
        let s = petal_core::torus_sequence(r).unwrap();
        grid_to_pd(&petal_to_grid(&s)).unwrap();
        petal_to_pd_geometric(&s).unwrap();
    }
}

#[test]
fn renders_do_not_depend_on_call_order() {
    let a = PetalSequence::new(vec![1, 3, 5, 2, 4]).unwrap();
    let b = PetalSequence::new(vec![1, 4, 7, 2, 6, 3, 5]).unwrap();
    let first = (render_svg(&a), render_svg(&b));
    let second = (render_svg(&a), render_svg(&b));
    assert_eq!(first, second);
    let ga = petal_to_grid(&a);
    assert_eq!(render_grid_svg(&ga), render_grid_svg(&ga));
}

#[test]
fn grid_json_schema_matches_documentation() {
    let s = PetalSequence::new(vec![1, 3, 5, 2, 4]).unwrap();
    let grid = petal_to_grid(&s);
    let value: serde_json::Value =
        serde_json::to_value(&grid).unwrap();
    assert!(value.get("size").is_some());
    assert!(value.get("o").unwrap().is_array());
    assert!(value.get("x").unwrap().is_array());

    let pd = grid_to_pd(&grid).unwrap();
    let value: serde_json::Value = serde_json::to_value(&pd).unwrap();
    let crossings = value.get("crossings").unwrap().as_array().unwrap();
    assert_eq!(crossings.len(), pd.crossing_count());
    assert!(crossings.iter().all(|c| c.as_array().unwrap().len() == 4));
}
