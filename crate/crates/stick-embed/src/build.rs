//! The base stick construction: a petal sequence with `p` petals becomes a
//! closed polygon with `2(p-1)` straight segments.
//!
//! The conformation realizes the sequence's multi-crossing directly. Each
//! petal level except the top one contributes a horizontal chord of the
//! unit circle at height equal to its level, the chords meeting the circle
//! in the same node order as the petal rose used by the geometric
//! converter, so every chord pair crosses exactly once near the origin and
//! the higher level passes over. Consecutive chords are joined by short
//! tilted segments between adjacent circle nodes, which stay clear of all
//! crossings.
//!
//! The top level needs no chord of its own: at the multi-crossing it passes
//! over everything, so its strand can be swung around the outside instead.
//! The two chords it used to connect are extended far beyond the circle,
//! staying inside their own lines, and one long tilted segment joins the
//! extension tips. The construction certifies, exactly, that this closing
//! segment stays strictly outside the disk containing every other vertex;
//! together with the over-everything height of the strand it replaces,
//! that pins the closed polygon to the knot of the sequence.
//!
//! Segment census: `p - 1` horizontal chords (two of them extended) plus
//! `p - 2` short joins plus the closing segment, `2(p - 1)` in total and
//! exactly half of them horizontal.

use num::{BigRational, One, Zero};
use petal_core::PetalSequence;

use crate::conformation::StickConformation;
use crate::geom::{int, ratio, Point3};

/// Builds a stick conformation of the knot of `s` with at most `2(p-1)`
/// segments, where `p` is the petal count.
///
/// Sequences with fewer than five petals describe the unknot and come back
/// as a flat triangle. Embeddedness of the output is certified exactly
/// during construction.
pub fn petal_to_sticks(s: &PetalSequence) -> StickConformation {
    let p = s.petals();
    if p < 5 {
        return StickConformation::new(vec![
            Point3::from_integers(0, 0, 0),
            Point3::from_integers(1, 0, 0),
            Point3::from_integers(0, 1, 0),
        ])
        .expect("triangle is embedded");
    }

    let levels = s.levels();
    let top = levels
        .iter()
        .position(|&v| v as usize == p)
        .expect("a valid sequence visits its top level");

    // Chord endpoints in the plane, one chord per traversal position,
    // matching the geometric converter's rose: node m sits at the rational
    // circle point with parameter m/p, node m + p is its antipode, and
    // chord j runs from node j(p+1) mod 2p to the antipodal node, shifted
    // off the common diameter by j + 1 perturbation units.
    let half_nodes: Vec<(BigRational, BigRational)> = (0..p)
        .map(|m| {
            let u = ratio(m as i64, p as i64);
            let u2 = &u * &u;
            let den = BigRational::one() + &u2;
            ((BigRational::one() - &u2) / &den, (ratio(2, 1) * &u) / &den)
        })
        .collect();
    let node = |index: usize| -> (BigRational, BigRational) {
        if index < p {
            half_nodes[index].clone()
        } else {
            let (x, y) = &half_nodes[index - p];
            (-x.clone(), -y.clone())
        }
    };
    let delta = BigRational::new(1.into(), (64 * (p as i64).pow(3)).into());

    let mut entries = Vec::with_capacity(p);
    let mut exits = Vec::with_capacity(p);
    for j in 0..p {
        let start = (j * (p + 1)) % (2 * p);
        let (fx, fy) = node(start);
        let (tx, ty) = node((start + p) % (2 * p));
        // Counterclockwise perpendicular of the chord direction.
        let (nx, ny) = (&fy - &ty, &tx - &fx);
        let amount = &delta * ratio(j as i64 + 1, 1);
        entries.push((&fx + &nx * &amount, &fy + &ny * &amount));
        exits.push((&tx + &nx * &amount, &ty + &ny * &amount));
    }

    let height = |j: usize| int(levels[j] as i64);
    let lift = |(x, y): &(BigRational, BigRational), z: BigRational| {
        Point3::new(x.clone(), y.clone(), z)
    };

    // The closing segment must clear, in projection, the disk that holds
    // every other vertex; extend the two neighboring chords until it does.
    let first = (top + 1) % p;
    let last = (top + p - 1) % p;
    let mut reach = int(p as i64);
    for attempt in 0.. {
        assert!(attempt < 64, "closing segment never cleared the rose");
        let tip_b = extend(&entries[first], &exits[first], &reach);
        let tip_a = extend(&exits[last], &entries[last], &reach);

        let mut vertices = Vec::with_capacity(2 * (p - 1));
        vertices.push(lift(&tip_b, height(first)));
        vertices.push(lift(&exits[first], height(first)));
        let mut j = (first + 1) % p;
        while j != top {
            vertices.push(lift(&entries[j], height(j)));
            if j == last {
                vertices.push(lift(&tip_a, height(j)));
            } else {
                vertices.push(lift(&exits[j], height(j)));
            }
            j = (j + 1) % p;
        }
        assert_eq!(vertices.len(), 2 * (p - 1));

        if !closing_segment_clears(&vertices) {
            reach = &reach * int(2);
            continue;
        }
        return StickConformation::new(vertices)
            .expect("stick layout is embedded by construction");
    }
    unreachable!()
}

/// The point `anchor + reach * (anchor - inner)`: walks out of the circle
/// along the chord's own line, away from `inner`.
fn extend(
    anchor: &(BigRational, BigRational),
    inner: &(BigRational, BigRational),
    reach: &BigRational,
) -> (BigRational, BigRational) {
    (
        &anchor.0 + (&anchor.0 - &inner.0) * reach,
        &anchor.1 + (&anchor.1 - &inner.1) * reach,
    )
}

/// Checks that the closing segment (last vertex back to first) keeps its
/// projection strictly farther from the origin than every other vertex.
/// Everything except the closing segment and the two extension tips lies
/// in the convex hull of those vertices, so clearing their disk means the
/// closing segment crosses nothing in projection.
fn closing_segment_clears(vertices: &[Point3]) -> bool {
    let n = vertices.len();
    let radius_sq = |v: &Point3| -> BigRational { &v.x * &v.x + &v.y * &v.y };
    let hull = (1..n - 1)
        .map(|i| radius_sq(&vertices[i]))
        .max()
        .expect("conformation has interior vertices");

    // Minimum of |a + t(b - a)|^2 over t in [0, 1]: a convex quadratic,
    // evaluated at the clamped critical point and both endpoints.
    let a = &vertices[n - 1];
    let b = &vertices[0];
    let (dx, dy) = (&b.x - &a.x, &b.y - &a.y);
    let len_sq = &dx * &dx + &dy * &dy;
    let mut candidates = vec![radius_sq(a), radius_sq(b)];
    if !len_sq.is_zero() {
        let t = -(&a.x * &dx + &a.y * &dy) / &len_sq;
        if t > BigRational::zero() && t < BigRational::one() {
            let px = &a.x + &dx * &t;
            let py = &a.y + &dy * &t;
            candidates.push(&px * &px + &py * &py);
        }
    }
    candidates.into_iter().min().expect("nonempty") > hull
}
