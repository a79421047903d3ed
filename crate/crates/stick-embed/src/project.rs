//! Exact generic projection of a stick conformation to a planar diagram.

use diagram_convert::walk_support::{Role, Walk};
use diagram_convert::PlanarDiagram;
use num::{BigRational, Signed, Zero};

use crate::conformation::StickConformation;
use crate::geom::{cross2, int, Point2, Point3};
use crate::StickError;

/// Projects the conformation along `direction` and reads off a planar
/// diagram, with over/under decided by depth along the direction.
///
/// The direction must be generic for the conformation: no segment parallel
/// to it, no two vertices or crossings sharing a projected point, and no
/// vertex projecting onto another segment. All conditions are decided
/// exactly in rational arithmetic; violations surface as
/// [`StickError::NonGenericDirection`], and callers are expected to retry
/// with further entries of [`standard_directions`].
///
/// The projection plane is spanned by `u = direction × e` and
/// `v = u × direction` (with `e` a coordinate axis not parallel to the
/// direction), which is the plane frame seen by a viewer looking along the
/// direction; smaller depth means closer to the viewer, hence the over
/// strand.
pub fn project_to_pd(
    c: &StickConformation,
    direction: &Point3,
) -> Result<PlanarDiagram, StickError> {
    if direction.is_zero() {
        return Err(non_generic("direction is the zero vector"));
    }
    let axes = [
        Point3::from_integers(1, 0, 0),
        Point3::from_integers(0, 1, 0),
        Point3::from_integers(0, 0, 1),
    ];
    let e = axes
        .iter()
        .find(|axis| !direction.cross(axis).is_zero())
        .expect("a nonzero vector is not parallel to every axis");
    let u = direction.cross(e);
    let v = u.cross(direction);

    let n = c.segment_count();
    let shadow: Vec<Point2> = c
        .vertices()
        .iter()
        .map(|p| Point2 {
            x: p.dot(&u),
            y: p.dot(&v),
        })
        .collect();
    let depth: Vec<BigRational> =
        c.vertices().iter().map(|p| p.dot(direction)).collect();

    for i in 0..n {
        if shadow[i] == shadow[(i + 1) % n] {
            return Err(non_generic(format!(
                "segment {i} is parallel to the direction"
            )));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if shadow[i] == shadow[j] {
                return Err(non_generic(format!(
                    "vertices {i} and {j} project to the same point"
                )));
            }
        }
    }
    // A vertex shadow inside another segment's shadow would make the
    // diagram ambiguous at that point.
    for w in 0..n {
        for i in 0..n {
            if i == w || (i + 1) % n == w {
                continue;
            }
            let a = &shadow[i];
            let b = &shadow[(i + 1) % n];
            let r = b.sub(a);
            let t = &shadow[w].sub(a);
            if cross2(&r, t).is_zero() {
                let along = t.x.clone() * &r.x + t.y.clone() * &r.y;
                if along.is_positive() && along < r.norm_sq() {
                    return Err(non_generic(format!(
                        "vertex {w} projects onto segment {i}"
                    )));
                }
            }
        }
    }

    struct Hit {
        id: usize,
        param: BigRational,
        role: Role,
    }
    let mut per_segment: Vec<Vec<Hit>> = (0..n).map(|_| Vec::new()).collect();
    let mut over_in_ccw = Vec::new();
    let mut spots: Vec<Point2> = Vec::new();
    let mut crossing_count = 0usize;

    for i in 0..n {
        for j in (i + 1)..n {
            let adjacent = (i + 1) % n == j || (j + 1) % n == i;
            let a = &shadow[i];
            let b = &shadow[(i + 1) % n];
            let q = &shadow[j];
            let w = &shadow[(j + 1) % n];
            let r = b.sub(a);
            let s = w.sub(q);
            let den = cross2(&r, &s);
            if den.is_zero() {
                // Parallel shadows: harmless unless they share a line.
                if cross2(&r, &q.sub(a)).is_zero() {
                    return Err(non_generic(format!(
                        "segments {i} and {j} have collinear shadows"
                    )));
                }
                continue;
            }
            if adjacent {
                // Non-parallel shadows sharing an endpoint meet only there.
                continue;
            }
            let qa = q.sub(a);
            let t = cross2(&qa, &s) / &den;
            let h = cross2(&qa, &r) / &den;
            let interior = |x: &BigRational| {
                x.is_positive() && *x < BigRational::from_integer(1.into())
            };
            if !interior(&t) || !interior(&h) {
                // Endpoint coincidences were ruled out above, so the
                // shadows simply do not cross.
                continue;
            }
            let depth_at = |base: usize, param: &BigRational| -> BigRational {
                let d0 = &depth[base];
                let d1 = &depth[(base + 1) % n];
                d0 + (d1 - d0) * param
            };
            let di = depth_at(i, &t);
            let dj = depth_at(j, &h);
            // Equal depth would be a true intersection in space, which
            // embeddedness already excludes.
            assert_ne!(di, dj, "embedded sticks cannot meet in space");
            let (over, under, over_dir, under_dir) = if di < dj {
                (i, j, &r, &s)
            } else {
                (j, i, &s, &r)
            };
            let id = crossing_count;
            crossing_count += 1;
            spots.push(Point2 {
                x: &a.x + &r.x * &t,
                y: &a.y + &r.y * &t,
            });
            over_in_ccw.push(cross2(under_dir, over_dir).is_positive());
            per_segment[over].push(Hit {
                id,
                param: if over == i { t.clone() } else { h.clone() },
                role: Role::Over,
            });
            per_segment[under].push(Hit {
                id,
                param: if under == i { t } else { h },
                role: Role::Under,
            });
        }
    }

    let mut sorted_spots = spots;
    sorted_spots.sort();
    for pair in sorted_spots.windows(2) {
        if pair[0] == pair[1] {
            return Err(non_generic("two crossings share a projected point"));
        }
    }

    let mut passages = Vec::with_capacity(2 * crossing_count);
    for hits in per_segment.iter_mut() {
        hits.sort_by(|a, b| a.param.cmp(&b.param));
        for hit in hits.iter() {
            passages.push((hit.id, hit.role));
        }
    }

    Ok(Walk {
        crossing_count,
        passages,
        over_in_ccw,
    }
    .assemble()?)
}

/// A deterministic stream of projection directions, starting straight down
/// the height axis and continuing with gently tilted integer directions,
/// no two of them parallel. The tilts are kept small so the shadows stay
/// close to the straight-down picture and collect few extra crossings.
/// Genericity still has to be checked per conformation; [`project_to_pd`]
/// reports failures and the next entry is tried.
pub fn standard_directions() -> impl Iterator<Item = Point3> {
    (0i64..).map(|k| {
        if k == 0 {
            Point3::from_integers(0, 0, -1)
        } else {
            Point3::new(int(k), int(k + 1), int(-64 * (k * k + k + 1)))
        }
    })
}

fn non_generic(reason: impl Into<String>) -> StickError {
    StickError::NonGenericDirection {
        reason: reason.into(),
    }
}
