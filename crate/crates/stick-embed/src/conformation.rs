//! Closed polygonal space curves with exactly certified embeddedness.

use std::str::FromStr;

use num::{BigRational, Signed};

use crate::geom::{segment_distance_sq, Point3};
use crate::StickError;

/// A closed polygon in 3-space: the knot runs straight from each vertex to
/// the next and from the last vertex back to the first.
///
/// Construction certifies embeddedness with exact rational arithmetic:
/// consecutive vertices are distinct, no three consecutive vertices are
/// collinear (so adjacent segments meet only in their shared vertex), and
/// every non-adjacent segment pair has strictly positive distance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StickConformation {
    vertices: Vec<Point3>,
}

impl StickConformation {
    /// Validates and wraps a closed vertex cycle.
    pub fn new(vertices: Vec<Point3>) -> Result<Self, StickError> {
        let n = vertices.len();
        if n < 3 {
            return Err(StickError::TooFewVertices { count: n });
        }
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(StickError::RepeatedVertex { index: i });
            }
        }
        for i in 0..n {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % n];
            let c = &vertices[(i + 2) % n];
            if b.sub(a).cross(&c.sub(b)).is_zero() {
                return Err(StickError::CollinearRun { index: i });
            }
        }
        // Segment i runs from vertex i to vertex i + 1; skip the pairs that
        // share a vertex, whose disjointness away from it follows from the
        // collinearity check above.
        for i in 0..n {
            for j in (i + 2)..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let d = segment_distance_sq(
                    &vertices[i],
                    &vertices[(i + 1) % n],
                    &vertices[j],
                    &vertices[(j + 1) % n],
                );
                if !d.is_positive() {
                    return Err(StickError::Intersection { first: i, second: j });
                }
            }
        }
        Ok(StickConformation { vertices })
    }

    /// The vertices of the closed polygon, in traversal order.
    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    /// Number of straight segments (equal to the number of vertices).
    pub fn segment_count(&self) -> usize {
        self.vertices.len()
    }

    /// Endpoints of segment `i`, which runs from vertex `i` to vertex
    /// `i + 1` (wrapping at the end).
    pub fn segment(&self, i: usize) -> (&Point3, &Point3) {
        let n = self.vertices.len();
        (&self.vertices[i % n], &self.vertices[(i + 1) % n])
    }

    /// Number of segments parallel to the projection plane (constant
    /// height).
    pub fn horizontal_segment_count(&self) -> usize {
        (0..self.segment_count())
            .filter(|&i| {
                let (a, b) = self.segment(i);
                a.z == b.z
            })
            .count()
    }

    /// Serializes the vertex cycle as a JSON array of `[x, y, z]` triples,
    /// each coordinate an exact `"numerator/denominator"` string.
    pub fn to_json(&self) -> String {
        let rows: Vec<[String; 3]> = self
            .vertices
            .iter()
            .map(|v| {
                [
                    format_rational(&v.x),
                    format_rational(&v.y),
                    format_rational(&v.z),
                ]
            })
            .collect();
        serde_json::to_string(&rows).expect("string triples always serialize")
    }

    /// Parses and re-validates a conformation serialized by [`Self::to_json`].
    pub fn from_json(text: &str) -> Result<Self, StickError> {
        let rows: Vec<[String; 3]> = serde_json::from_str(text)?;
        let mut vertices = Vec::with_capacity(rows.len());
        for [x, y, z] in &rows {
            vertices.push(Point3::new(
                parse_rational(x)?,
                parse_rational(y)?,
                parse_rational(z)?,
            ));
        }
        StickConformation::new(vertices)
    }
}

fn format_rational(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

fn parse_rational(text: &str) -> Result<BigRational, StickError> {
    BigRational::from_str(text).map_err(|e| StickError::BadCoordinate {
        text: text.to_string(),
        message: e.to_string(),
    })
}
