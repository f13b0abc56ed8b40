//! Exact planar primitives: points, orientation, segment crossing, hulls.
//!
//! Point sets are validated eagerly: all points distinct and no three
//! collinear. Every predicate reduces to signs of exact determinants.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.x, &self.y).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (x, y) = <(Rational, Rational)>::deserialize(d)?;
        Ok(Point::new(x, y))
    }
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Rational::from_int(x), Rational::from_int(y))
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, k: &Rational) -> Point {
        Point::new(k * &self.x, k * &self.y)
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    /// Counter-clockwise perpendicular (-y, x).
    pub fn perp(&self) -> Point {
        Point::new(-&self.y, self.x.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn norm_squared(&self) -> Rational {
        self.dot(self)
    }
}

impl std::fmt::Debug for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Signed determinant of the triple `(a, b, c)`: `(b - a) x (c - a)`.
/// Twice the signed triangle area; positive iff the triple turns left.
pub fn det3(a: &Point, b: &Point, c: &Point) -> Rational {
    b.sub(a).cross(&c.sub(a))
}

/// Sign of [`det3`]: +1 counter-clockwise, -1 clockwise, 0 collinear.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> i8 {
    det3(a, b, c).signum()
}

/// True iff the open segments `ab` and `cd` intersect in a single interior
/// point. Segments sharing an endpoint never properly cross.
pub fn segments_properly_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && o1 != o2 && o3 != o4
}

/// Planar point set in general position.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Validates distinctness and general position (no three collinear).
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::TooFewPoints {
                need: 3,
                got: points.len(),
            });
        }
        let n = points.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint(i, j));
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if orientation(&points[i], &points[j], &points[k]) == 0 {
                        return Err(Error::CollinearTriple(i, j, k));
                    }
                }
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        PointSet::new(
            coords
                .iter()
                .map(|&(x, y)| Point::from_ints(x, y))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn centroid(&self) -> Point {
        let n = Rational::from_int(self.points.len() as i64);
        let mut sx = Rational::zero();
        let mut sy = Rational::zero();
        for p in &self.points {
            sx += &p.x;
            sy += &p.y;
        }
        Point::new(sx / &n, sy / n)
    }

    pub fn det3_idx(&self, i: usize, j: usize, k: usize) -> Rational {
        det3(&self.points[i], &self.points[j], &self.points[k])
    }

    pub fn orientation_idx(&self, i: usize, j: usize, k: usize) -> i8 {
        orientation(&self.points[i], &self.points[j], &self.points[k])
    }
}

impl std::fmt::Debug for PointSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.points.iter()).finish()
    }
}

/// Counter-clockwise convex hull as a cycle of indices; all remaining points
/// are strictly inside. Andrew's monotone chain over exact coordinates.
pub fn convex_hull(ps: &PointSet) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..ps.len()).collect();
    idx.sort_by(|&a, &b| {
        let pa = ps.point(a);
        let pb = ps.point(b);
        (&pa.x, &pa.y).cmp(&(&pb.x, &pb.y))
    });

    fn build(ps: &PointSet, order: impl Iterator<Item = usize>) -> Vec<usize> {
        let mut chain: Vec<usize> = Vec::new();
        for i in order {
            while chain.len() >= 2 {
                let a = chain[chain.len() - 2];
                let b = chain[chain.len() - 1];
                if ps.orientation_idx(a, b, i) <= 0 {
                    chain.pop();
                } else {
                    break;
                }
            }
            chain.push(i);
        }
        chain
    }

    let mut hull = build(ps, idx.iter().copied());
    hull.pop();
    let start = hull[0];
    for i in build(ps, idx.iter().rev().copied()) {
        if i == start {
            break;
        }
        hull.push(i);
    }
    hull
}
