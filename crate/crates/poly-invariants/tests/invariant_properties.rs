//! Cross-checks between the independent computation routes.
//!
//! The contraction bracket is verified against the brute-force state sum,
//! the Jones and Alexander polynomials against each other through the knot
//! determinant, and everything against the two independent petal-to-PD
//! conversion paths and the moves that must not change the knot.

use diagram_convert::{
    grid_to_pd, petal_to_grid, petal_to_pd_geometric, PlanarDiagram,
};
use num_bigint::BigInt;
use petal_core::{
    compose, mirror, random_sequence, reduce, stabilize, torus_sequence,
    Level, PetalSequence,
};
use poly_invariants::{
    alexander, bracket_bruteforce, determinant, fingerprint, jones,
    kauffman_bracket, writhe, Fingerprint, LaurentPolynomial,
};

fn seq(levels: &[Level]) -> PetalSequence {
    PetalSequence::new(levels.to_vec()).unwrap()
}

fn grid_pd(s: &PetalSequence) -> PlanarDiagram {
    grid_to_pd(&petal_to_grid(s)).unwrap()
}

fn geom_pd(s: &PetalSequence) -> PlanarDiagram {
    petal_to_pd_geometric(s).unwrap()
}

fn poly(pairs: &[(i64, i64)]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(pairs.iter().copied())
}

/// All permutations of `1..=p` via Heap's algorithm.
fn all_sequences(p: usize) -> Vec<PetalSequence> {
    let mut items: Vec<Level> = (1..=p as Level).collect();
    let mut out = vec![seq(&items)];
    let mut stack = vec![0usize; p];
    let mut i = 0;
    while i < p {
        if stack[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(stack[i], i);
            }
            out.push(seq(&items));
            stack[i] += 1;
            i = 0;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    out
}

/// A spread of diagrams produced by both conversion routes.
fn conversion_corpus() -> Vec<PlanarDiagram> {
    let mut diagrams = Vec::new();
    for p in [3usize, 5, 7] {
        for seed in 0..170 {
            let s = random_sequence(p, seed).unwrap();
            diagrams.push(grid_pd(&s));
            diagrams.push(geom_pd(&s));
        }
    }
    for r in 1..=3 {
        let s = torus_sequence(r).unwrap();
        diagrams.push(grid_pd(&s));
        diagrams.push(geom_pd(&s));
    }
    diagrams.push(grid_pd(&seq(&[1, 3, 5, 2, 7, 4, 6])));
    diagrams
}

#[test]
fn contraction_matches_bruteforce_across_conversion_corpus() {
    let mut checked = 0usize;
    for pd in conversion_corpus() {
        if pd.crossing_count() > 12 {
            continue;
        }
        assert_eq!(
            kauffman_bracket(&pd).unwrap(),
            bracket_bruteforce(&pd).unwrap(),
            "bracket mismatch on {pd}"
        );
        checked += 1;
    }
    assert!(checked >= 500, "only {checked} diagrams were small enough");
}

#[test]
fn both_conversion_routes_give_identical_fingerprints() {
    for p in [3usize, 5] {
        for s in all_sequences(p) {
            assert_eq!(
                fingerprint(&grid_pd(&s)).unwrap(),
                fingerprint(&geom_pd(&s)).unwrap(),
                "fingerprint differs between routes for {s}"
            );
        }
    }
    for (p, seeds) in [(7usize, 60u64), (9, 12)] {
        for seed in 0..seeds {
            let s = random_sequence(p, seed).unwrap();
            assert_eq!(
                fingerprint(&grid_pd(&s)).unwrap(),
                fingerprint(&geom_pd(&s)).unwrap(),
                "fingerprint differs between routes for {s}"
            );
        }
    }
}

#[test]
fn trefoil_sequence_matches_known_invariants() {
    // The pipeline's chirality convention maps (1,3,5,2,4) to the
    // left-handed trefoil or the right-handed one; both are legal reading
    // conventions. The exact value pinned here records ours, and the two
    // conversion routes must land on the same side.
    let s = seq(&[1, 3, 5, 2, 4]);
    let fp = fingerprint(&grid_pd(&s)).unwrap();
    let right = poly(&[(1, 1), (3, 1), (4, -1)]);
    let left = right.invert_variable();
    assert!(fp.jones == right || fp.jones == left);
    assert_eq!(fp.jones, right, "pipeline convention changed");
    assert_eq!(fp.alexander, poly(&[(1, 1), (0, -1), (-1, 1)]));
    assert_eq!(fp.determinant, 3);
    assert_eq!(fingerprint(&geom_pd(&s)).unwrap(), fp);
}

#[test]
fn figure_eight_sequence_is_amphichiral() {
    let s = seq(&[1, 3, 5, 2, 7, 4, 6]);
    let fp = fingerprint(&grid_pd(&s)).unwrap();
    assert_eq!(
        fp.jones,
        poly(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)])
    );
    assert!(fp.is_mirror_symmetric());
    assert_eq!(fp.alexander, poly(&[(1, -1), (0, 3), (-1, -1)]));
    assert_eq!(fp.determinant, 5);
}

#[test]
fn torus_sequences_match_torus_knot_polynomials() {
    // r = 1 is the unknot and r = 2 the trefoil; r = 3 gives the (3,4)
    // torus knot with V = t^3 + t^5 - t^8 (up to mirror) and
    // Δ = t^3 - t^2 + 1 - 1/t^2 + 1/t^3.
    let unknot = fingerprint(&grid_pd(&torus_sequence(1).unwrap())).unwrap();
    assert_eq!(unknot.jones, LaurentPolynomial::one());
    assert_eq!(unknot.alexander, LaurentPolynomial::one());

    let trefoil = fingerprint(&grid_pd(&torus_sequence(2).unwrap())).unwrap();
    assert_eq!(trefoil.determinant, 3);

    let t34 = fingerprint(&grid_pd(&torus_sequence(3).unwrap())).unwrap();
    let v = poly(&[(3, 1), (5, 1), (8, -1)]);
    assert!(t34.jones == v || t34.jones == v.invert_variable());
    assert_eq!(
        t34.alexander,
        poly(&[(3, 1), (2, -1), (0, 1), (-2, -1), (-3, 1)])
    );
    assert_eq!(t34.determinant, 3);
}

#[test]
fn reduce_and_stabilize_preserve_the_fingerprint() {
    for p in [5usize, 7] {
        for seed in 0..12 {
            let s = random_sequence(p, seed).unwrap();
            let fp = fingerprint(&grid_pd(&s)).unwrap();
            assert_eq!(
                fingerprint(&grid_pd(&reduce(&s))).unwrap(),
                fp,
                "reduce changed the knot of {s}"
            );
            for position in [0, 1, p] {
                let bigger = stabilize(&s, position).unwrap();
                assert_eq!(
                    fingerprint(&grid_pd(&bigger)).unwrap(),
                    fp,
                    "stabilize at {position} changed the knot of {s}"
                );
            }
        }
    }
}

#[test]
fn mirror_sequence_mirrors_the_fingerprint() {
    for p in [5usize, 7] {
        for seed in 0..12 {
            let s = random_sequence(p, seed).unwrap();
            let fp = fingerprint(&grid_pd(&s)).unwrap();
            let mirrored = fingerprint(&grid_pd(&mirror(&s))).unwrap();
            assert_eq!(mirrored, fp.mirror(), "mirror mismatch for {s}");
        }
    }
}

#[test]
fn mirror_diagram_matches_mirror_sequence() {
    for seed in 0..12 {
        let s = random_sequence(7, seed).unwrap();
        assert_eq!(
            fingerprint(&grid_pd(&s).mirror()).unwrap(),
            fingerprint(&grid_pd(&mirror(&s))).unwrap(),
        );
    }
}

#[test]
fn compose_multiplies_polynomial_invariants() {
    let trefoil = seq(&[1, 3, 5, 2, 4]);
    let figure_eight = seq(&[1, 3, 5, 2, 7, 4, 6]);
    let cases = [
        (trefoil.clone(), trefoil.clone()),
        (trefoil.clone(), figure_eight.clone()),
        (trefoil.clone(), mirror(&trefoil)),
    ];
    for (a, b) in cases {
        let composed = compose(&a, &b);
        let fa = fingerprint(&grid_pd(&a)).unwrap();
        let fb = fingerprint(&grid_pd(&b)).unwrap();
        let fc = fingerprint(&grid_pd(&composed)).unwrap();
        assert_eq!(fc.jones, fa.jones.mul(&fb.jones), "Jones of {a} # {b}");
        assert_eq!(
            fc.alexander,
            fa.alexander.mul(&fb.alexander),
            "Alexander of {a} # {b}"
        );
        assert_eq!(fc.determinant, fa.determinant * fb.determinant);
    }

    // Composing with the one-petal unknot is the identity.
    let one = seq(&[1]);
    let fp = fingerprint(&grid_pd(&compose(&one, &trefoil))).unwrap();
    assert_eq!(fp, fingerprint(&grid_pd(&trefoil)).unwrap());
}

#[test]
fn composing_with_the_mirror_squares_away_chirality() {
    // V(K # mirror K) = V(t) · V(1/t) is palindromic even though the
    // trefoil itself is chiral.
    let trefoil = seq(&[1, 3, 5, 2, 4]);
    let composed = compose(&trefoil, &mirror(&trefoil));
    let v = jones(&grid_pd(&composed)).unwrap();
    assert_eq!(v, v.invert_variable());
}

#[test]
fn determinant_agrees_between_jones_and_alexander() {
    // |V(-1)| and |Δ(-1)| both compute the knot determinant, through two
    // routes that share no code: contraction bracket vs. Wirtinger matrix.
    let mut checked = 0usize;
    for pd in conversion_corpus() {
        if pd.crossing_count() > 14 {
            continue;
        }
        let fp = fingerprint(&pd).unwrap();
        let from_jones = fp.jones.evaluate_at_minus_one();
        assert_eq!(
            BigInt::from(fp.determinant),
            if from_jones < BigInt::from(0) {
                -from_jones
            } else {
                from_jones
            },
            "determinant mismatch on {pd}"
        );
        assert_eq!(fp.jones.evaluate_at_one(), BigInt::from(1));
        assert!(fp.alexander.is_palindromic());
        assert_eq!(fp.determinant % 2, 1);
        checked += 1;
    }
    assert!(checked >= 500, "only {checked} diagrams were small enough");
}

#[test]
fn simplification_is_invisible_to_jones() {
    // Jones computed from the raw bracket and raw writhe, with no
    // simplification anywhere, must equal the simplify-first result.
    for p in [5usize, 7] {
        for seed in 0..25 {
            let s = random_sequence(p, seed).unwrap();
            for pd in [grid_pd(&s), geom_pd(&s)] {
                let bracket = kauffman_bracket(&pd).unwrap();
                let w = writhe(&pd);
                let sign = if w % 2 == 0 { 1 } else { -1 };
                let raw = bracket
                    .mul_monomial(-3 * w, &BigInt::from(sign))
                    .rescale_exponents(-4)
                    .unwrap();
                assert_eq!(raw, jones(&pd).unwrap(), "on {pd}");
            }
        }
    }
}

#[test]
fn unknot_representations_share_the_trivial_fingerprint() {
    let trivial = Fingerprint {
        jones: LaurentPolynomial::one(),
        alexander: LaurentPolynomial::one(),
        determinant: 1,
    };
    for s in [seq(&[1]), seq(&[1, 2, 3]), seq(&[2, 1, 3]), seq(&[1, 2, 3, 4, 5])]
    {
        assert_eq!(fingerprint(&grid_pd(&s)).unwrap(), trivial);
        assert_eq!(fingerprint(&geom_pd(&s)).unwrap(), trivial);
    }
}

#[test]
fn eleven_petal_fingerprints_are_fast_enough_to_classify() {
    use std::time::Instant;
    let sequences: Vec<PetalSequence> = (0..10)
        .map(|seed| random_sequence(11, seed).unwrap())
        .collect();
    let start = Instant::now();
    for s in &sequences {
        let _ = fingerprint(&grid_pd(s)).unwrap();
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_millis() < 5_000,
        "10 eleven-petal fingerprints took {elapsed:?}"
    );
}

#[test]
fn alexander_is_independent_of_the_diagram() {
    for seed in 0..12 {
        let s = random_sequence(7, seed).unwrap();
        let a = alexander(&grid_pd(&s)).unwrap();
        assert_eq!(a, alexander(&geom_pd(&s)).unwrap(), "on {s}");
        assert_eq!(
            determinant(&grid_pd(&s)).unwrap(),
            determinant(&geom_pd(&s)).unwrap()
        );
    }
}
