use serde::{Deserialize, Serialize};

use super::{CurvePrimitive, Point, PolarBoundary};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Polygon given by its vertices and a polar center.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonSpec<T> {
    pub vertices: Vec<Point<T>>,
    pub center: Point<T>,
}

/// Per-side data: `r` is the distance from the center to the farther
/// endpoint, `d` the distance from the center to the supporting line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolygonSide<T> {
    pub r: T,
    pub d: T,
}

impl<T: Real> PolygonSpec<T> {
    /// Checks vertex count and simplicity. Vertices may be in either
    /// orientation; they are stored counter-clockwise.
    pub fn new(vertices: Vec<Point<T>>, center: Point<T>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::arg(format!("a polygon needs at least 3 vertices, got {}", vertices.len())));
        }
        let mut spec = Self { vertices, center };
        if spec.signed_area() < T::zero() {
            spec.vertices.reverse();
        }
        spec.check_simple()?;
        Ok(spec)
    }

    /// Polygon centered at its area centroid.
    pub fn with_centroid(vertices: Vec<Point<T>>) -> Result<Self> {
        let mut spec = Self::new(vertices, Point::default())?;
        spec.center = spec.centroid();
        Ok(spec)
    }

    pub fn signed_area(&self) -> T {
        let n = self.vertices.len();
        let twice = (0..n).fold(T::zero(), |acc, i| acc + self.vertices[i].cross(self.vertices[(i + 1) % n]));
        twice * T::lit(0.5)
    }

    /// Area centroid (barycenter of the region).
    pub fn centroid(&self) -> Point<T> {
        let n = self.vertices.len();
        let mut cx = T::zero();
        let mut cy = T::zero();
        for i in 0..n {
            let (p, q) = (self.vertices[i], self.vertices[(i + 1) % n]);
            let w = p.cross(q);
            cx = cx + (p.x + q.x) * w;
            cy = cy + (p.y + q.y) * w;
        }
        let k = T::one() / (T::lit(6.0) * self.signed_area());
        Point::new(cx * k, cy * k)
    }

    /// Incenter of a triangle (weighted by opposite side lengths).
    pub fn triangle_incenter(vertices: &[Point<T>]) -> Result<Point<T>> {
        if vertices.len() != 3 {
            return Err(Error::arg("the incenter is defined here for triangles only"));
        }
        let (a, b, c) = (vertices[0], vertices[1], vertices[2]);
        let (la, lb, lc) = ((b - c).norm(), (c - a).norm(), (a - b).norm());
        let p = la + lb + lc;
        Ok(Point::new(
            (a.x * la + b.x * lb + c.x * lc) / p,
            (a.y * la + b.y * lb + c.y * lc) / p,
        ))
    }

    fn check_simple(&self) -> Result<()> {
        let n = self.vertices.len();
        let seg = |i: usize| (self.vertices[i], self.vertices[(i + 1) % n]);
        for i in 0..n {
            for j in (i + 1)..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                let ((p1, p2), (q1, q2)) = (seg(i), seg(j));
                let o1 = (p2 - p1).cross(q1 - p1);
                let o2 = (p2 - p1).cross(q2 - p1);
                let o3 = (q2 - q1).cross(p1 - q1);
                let o4 = (q2 - q1).cross(p2 - q1);
                let straddles = |u: T, v: T| (u <= T::zero() && v >= T::zero()) || (u >= T::zero() && v <= T::zero());
                if straddles(o1, o2) && straddles(o3, o4) {
                    return Err(Error::arg(format!("polygon is not simple: sides {i} and {j} intersect")));
                }
            }
        }
        Ok(())
    }

    /// Side data in input units.
    pub fn sides(&self) -> Vec<PolygonSide<T>> {
        let n = self.vertices.len();
        (0..n)
            .map(|j| {
                let a = self.vertices[j] - self.center;
                let b = self.vertices[(j + 1) % n] - self.center;
                let len = (b - a).norm();
                PolygonSide {
                    r: a.norm().max(b.norm()),
                    d: a.cross(b) / len,
                }
            })
            .collect()
    }

    /// Side data scaled so that `max r_j = 1`. Fails if the center does not
    /// see every side from the inside (`d_j ≤ 0`).
    pub fn normalized_sides(&self) -> Result<Vec<PolygonSide<T>>> {
        let sides = self.sides();
        for (j, s) in sides.iter().enumerate() {
            if !(s.d > T::zero()) {
                return Err(Error::not_star(
                    (self.vertices[j] - self.center).angle().as_f64(),
                    format!("side {j} does not face the center (d = {})", s.d),
                ));
            }
        }
        let scale = sides.iter().fold(T::zero(), |m, s| m.max(s.r));
        Ok(sides.into_iter().map(|s| PolygonSide { r: s.r / scale, d: s.d / scale }).collect())
    }

    /// One `Segment` piece per side, starting at the vertex directions.
    pub fn to_boundary(&self) -> Result<PolarBoundary<T>> {
        self.normalized_sides()?;
        let n = self.vertices.len();
        let curve: Vec<_> = (0..n)
            .map(|j| CurvePrimitive::Line {
                from: self.vertices[j],
                to: self.vertices[(j + 1) % n],
            })
            .collect();
        PolarBoundary::from_curve(self.center, &curve)
    }
}
