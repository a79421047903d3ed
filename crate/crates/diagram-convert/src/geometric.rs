//! Geometric conversion route: perturb the petal rose's central
//! multi-crossing into simple crossings with exact rational coordinates.

use num::{BigInt, BigRational, Signed, Zero};
use petal_core::PetalSequence;

use crate::assemble::{Role, Walk};
use crate::{ConvertError, PlanarDiagram};

#[derive(Clone)]
struct Pt {
    x: BigRational,
    y: BigRational,
}

impl Pt {
    fn add(&self, other: &Pt) -> Pt {
        Pt {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    fn sub(&self, other: &Pt) -> Pt {
        Pt {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    fn neg(&self) -> Pt {
        Pt {
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }

    fn scale(&self, factor: &BigRational) -> Pt {
        Pt {
            x: &self.x * factor,
            y: &self.y * factor,
        }
    }

    /// Counterclockwise perpendicular.
    fn rot90(&self) -> Pt {
        Pt {
            x: -self.y.clone(),
            y: self.x.clone(),
        }
    }
}

fn cross(a: &Pt, b: &Pt) -> BigRational {
    &a.x * &b.y - &a.y * &b.x
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Converts a petal sequence directly into a planar diagram by exact plane
/// geometry, independently of the grid route.
///
/// Model: `2p` boundary nodes sit on the unit circle, node `m + p`
/// antipodal to node `m`. Strand `j` (1-based) runs straight from node
/// `s_j = (j-1)(p+1) mod 2p` to its antipode, shifted perpendicular by the
/// perturbation `delta * j`; consecutive strands are joined outside the
/// crossing region by non-crossing arcs between adjacent nodes. Every
/// strand pair crosses exactly once near the center — `C(p, 2)` crossings —
/// and the strand with the larger petal level passes over. Crossing order
/// along each strand comes from exact rational intersection parameters.
///
/// The nodes are realized at rational points `P_m = ((1-u^2), 2u) / (1+u^2)`
/// with `u = m/p`, which keeps the prescribed circular node order and exact
/// antipodes while avoiding irrational coordinates.
///
/// Degeneracies (parallel strands, tangencies, coinciding parameters)
/// cannot occur with these perturbations but are reported defensively as
/// [`ConvertError::DegenerateGeometry`].
pub fn petal_to_pd_geometric(
    s: &PetalSequence,
) -> Result<PlanarDiagram, ConvertError> {
    let p = s.petals();
    if p == 1 {
        return Ok(PlanarDiagram::unknot());
    }
    let levels = s.levels();

    // Rational points on the upper half of the unit circle, in increasing
    // angular order; node m for m < p, with node m + p its antipode.
    let half_nodes: Vec<Pt> = (0..p)
        .map(|m| {
            let u = ratio(m as i64, p as i64);
            let u2 = &u * &u;
            let den = BigRational::from(BigInt::from(1)) + &u2;
            Pt {
                x: (BigRational::from(BigInt::from(1)) - &u2) / &den,
                y: (ratio(2, 1) * &u) / &den,
            }
        })
        .collect();
    let node = |index: usize| -> Pt {
        if index < p {
            half_nodes[index].clone()
        } else {
            half_nodes[index - p].neg()
        }
    };

    let delta = BigRational::new(
        BigInt::from(1),
        BigInt::from(64 * (p as i64).pow(3)),
    );

    // Strand j: entry and exit points, both shifted off the diameter.
    let mut entries = Vec::with_capacity(p);
    let mut dirs = Vec::with_capacity(p);
    for j in 0..p {
        let start_node = (j * (p + 1)) % (2 * p);
        let from = node(start_node);
        let to = node((start_node + p) % (2 * p));
        let dir = to.sub(&from);
        let shift = dir
            .rot90()
            .scale(&(&delta * ratio(j as i64 + 1, 1)));
        entries.push(from.add(&shift));
        dirs.push(dir);
    }

    // All pairwise crossings with exact parameters along both strands.
    struct Hit {
        id: usize,
        param: BigRational,
        other: usize,
    }
    let mut per_strand: Vec<Vec<Hit>> = (0..p).map(|_| Vec::new()).collect();
    let mut over_in_ccw = Vec::new();
    let mut crossing_count = 0usize;
    for i in 0..p {
        for j in i + 1..p {
            let denom = cross(&dirs[i], &dirs[j]);
            if denom.is_zero() {
                return Err(ConvertError::DegenerateGeometry(format!(
                    "strands {} and {} are parallel",
                    i + 1,
                    j + 1
                )));
            }
            let b = entries[j].sub(&entries[i]);
            let s_i = cross(&b, &dirs[j]) / &denom;
            let t_j = cross(&b, &dirs[i]) / &denom;
            let unit = BigRational::from(BigInt::from(1));
            for (name, param) in [(i, &s_i), (j, &t_j)] {
                if !param.is_positive() || *param >= unit {
                    return Err(ConvertError::DegenerateGeometry(format!(
                        "strands {} and {} miss each other (parameter {} on \
                         strand {})",
                        i + 1,
                        j + 1,
                        param,
                        name + 1
                    )));
                }
            }
            let id = crossing_count;
            crossing_count += 1;
            per_strand[i].push(Hit {
                id,
                param: s_i,
                other: j,
            });
            per_strand[j].push(Hit {
                id,
                param: t_j,
                other: i,
            });
            let (under, over) = if levels[i] > levels[j] {
                (j, i)
            } else {
                (i, j)
            };
            over_in_ccw.push(cross(&dirs[under], &dirs[over]).is_positive());
        }
    }
    debug_assert_eq!(crossing_count, p * (p - 1) / 2);

    // Traverse strand by strand; outer arcs contribute no passages.
    let mut passages = Vec::with_capacity(2 * crossing_count);
    for (j, hits) in per_strand.iter_mut().enumerate() {
        hits.sort_by(|a, b| a.param.cmp(&b.param));
        for pair in hits.windows(2) {
            if pair[0].param == pair[1].param {
                return Err(ConvertError::DegenerateGeometry(format!(
                    "strand {} passes two crossings at one point",
                    j + 1
                )));
            }
        }
        for hit in hits.iter() {
            let role = if levels[j] > levels[hit.other] {
                Role::Over
            } else {
                Role::Under
            };
            passages.push((hit.id, role));
        }
    }

    Walk {
        crossing_count,
        passages,
        over_in_ccw,
    }
    .assemble()
}
