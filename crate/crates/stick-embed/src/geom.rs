//! Small exact-rational vector helpers shared by the conformation builder
//! and the projection code.

use num::{BigInt, BigRational, One, Signed, Zero};

/// A point (or free vector) in 3-space with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point3 {
    /// First coordinate.
    pub x: BigRational,
    /// Second coordinate.
    pub y: BigRational,
    /// Third coordinate (height in the conformations built here).
    pub z: BigRational,
}

impl Point3 {
    /// Builds a point from rational coordinates.
    pub fn new(x: BigRational, y: BigRational, z: BigRational) -> Self {
        Point3 { x, y, z }
    }

    /// Builds a point from integer coordinates.
    pub fn from_integers(x: i64, y: i64, z: i64) -> Self {
        Point3 {
            x: int(x),
            y: int(y),
            z: int(z),
        }
    }

    pub(crate) fn add(&self, other: &Point3) -> Point3 {
        Point3 {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
            z: &self.z + &other.z,
        }
    }

    pub(crate) fn sub(&self, other: &Point3) -> Point3 {
        Point3 {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
            z: &self.z - &other.z,
        }
    }

    pub(crate) fn scale(&self, factor: &BigRational) -> Point3 {
        Point3 {
            x: &self.x * factor,
            y: &self.y * factor,
            z: &self.z * factor,
        }
    }

    pub(crate) fn dot(&self, other: &Point3) -> BigRational {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub(crate) fn cross(&self, other: &Point3) -> Point3 {
        Point3 {
            x: &self.y * &other.z - &self.z * &other.y,
            y: &self.z * &other.x - &self.x * &other.z,
            z: &self.x * &other.y - &self.y * &other.x,
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

/// A point in the projection plane.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub(crate) struct Point2 {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point2 {
    pub fn sub(&self, other: &Point2) -> Point2 {
        Point2 {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.x * &self.x + &self.y * &self.y
    }
}

/// Scalar cross product of two plane vectors.
pub(crate) fn cross2(a: &Point2, b: &Point2) -> BigRational {
    &a.x * &b.y - &a.y * &b.x
}

/// The rational `n`.
pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// The rational `num/den`.
pub(crate) fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact squared distance between two closed 3D segments.
///
/// The squared distance is a convex quadratic in the two segment
/// parameters; over the unit box its minimum sits either at the interior
/// critical point or on one of the four edges, each of which is a 1D
/// convex quadratic minimized at a clamped critical point. All candidates
/// are rational, so the minimum is computed exactly.
pub(crate) fn segment_distance_sq(
    p0: &Point3,
    p1: &Point3,
    q0: &Point3,
    q1: &Point3,
) -> BigRational {
    let u = p1.sub(p0);
    let v = q1.sub(q0);
    let w = p0.sub(q0);
    let a = u.dot(&u);
    let b = u.dot(&v);
    let c = v.dot(&v);
    let d = u.dot(&w);
    let e = v.dot(&w);
    assert!(a.is_positive() && c.is_positive(), "degenerate segment");

    let at = |s: &BigRational, t: &BigRational| -> BigRational {
        let diff = w.add(&u.scale(s)).sub(&v.scale(t));
        diff.dot(&diff)
    };
    let clamp = |value: BigRational| -> BigRational {
        if value.is_negative() {
            BigRational::zero()
        } else if value > BigRational::one() {
            BigRational::one()
        } else {
            value
        }
    };

    let mut best: Option<BigRational> = None;
    let mut consider = |value: BigRational| {
        if best.as_ref().is_none_or(|b| value < *b) {
            best = Some(value);
        }
    };

    let den = &a * &c - &b * &b;
    if den.is_positive() {
        let s = (&b * &e - &c * &d) / &den;
        let t = (&a * &e - &b * &d) / &den;
        if s > BigRational::zero()
            && s < BigRational::one()
            && t > BigRational::zero()
            && t < BigRational::one()
        {
            consider(at(&s, &t));
        }
    }
    for s in [BigRational::zero(), BigRational::one()] {
        // Closest point on q to the fixed endpoint of p.
        let t = clamp((&v.dot(&w.add(&u.scale(&s)))) / &c);
        consider(at(&s, &t));
    }
    for t in [BigRational::zero(), BigRational::one()] {
        let s = clamp((&v.scale(&t).sub(&w).dot(&u)) / &a);
        consider(at(&s, &t));
    }
    best.expect("candidate set is never empty")
}
