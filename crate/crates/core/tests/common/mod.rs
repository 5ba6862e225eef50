#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use infsup::{Point, Polygon64};
use rand::Rng;

/// Polygon star-shaped with respect to the origin: vertices at increasing
/// angles with every angular gap below `π`.
pub fn star_polygon<R: Rng>(rng: &mut R) -> Polygon64 {
    loop {
        let n = rng.gen_range(3..=12);
        let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0.2..1.0)).collect();
        let total: f64 = weights.iter().sum();
        let gaps: Vec<f64> = weights.iter().map(|w| w / total * TAU).collect();
        if gaps.iter().any(|&g| g > 0.95 * PI) {
            continue;
        }
        let mut theta = rng.gen_range(0.0..TAU);
        let vertices = gaps
            .iter()
            .map(|g| {
                let v = Point::polar(rng.gen_range(0.2..1.0), theta);
                theta += g;
                v
            })
            .collect();
        if let Ok(p) = Polygon64::new(vertices, Point::default()) {
            return p;
        }
    }
}

/// Polygon inscribed in the unit circle, centered at the circumcenter.
pub fn cyclic_polygon<R: Rng>(rng: &mut R) -> Polygon64 {
    loop {
        let n = rng.gen_range(3..=10);
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let ok = (0..n).all(|i| {
            let next = if i + 1 < n { angles[i + 1] } else { angles[0] + TAU };
            let g = next - angles[i];
            g > 0.05 && g < 0.95 * PI
        });
        if ok {
            let v = angles.iter().map(|&a| Point::polar(1.0, a)).collect();
            return Polygon64::new(v, Point::default()).unwrap();
        }
    }
}

/// Polygon circumscribed about the unit circle, centered at the incenter.
pub fn circumscribed_polygon<R: Rng>(rng: &mut R) -> Polygon64 {
    loop {
        let n = rng.gen_range(3..=10);
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let gaps: Vec<f64> = (0..n)
            .map(|i| if i + 1 < n { angles[i + 1] - angles[i] } else { angles[0] + TAU - angles[i] })
            .collect();
        if gaps.iter().any(|&g| !(0.1..=0.8 * PI).contains(&g)) {
            continue;
        }
        // Consecutive tangent lines meet on the bisecting ray.
        let v = (0..n)
            .map(|i| Point::polar(1.0 / (gaps[i] / 2.0).cos(), angles[i] + gaps[i] / 2.0))
            .collect();
        return Polygon64::new(v, Point::default()).unwrap();
    }
}

/// Distance from `c` to the boundary of the polygon along direction `theta`,
/// by intersecting the ray with every side.
pub fn ray_distance(poly: &Polygon64, c: Point<f64>, theta: f64) -> f64 {
    let dir = Point::new(theta.cos(), theta.sin());
    let n = poly.vertices.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let a = poly.vertices[i] - c;
        let e = poly.vertices[(i + 1) % n] - poly.vertices[i];
        let denom = dir.cross(e);
        if denom.abs() < 1e-300 {
            continue;
        }
        let t = a.cross(e) / denom;
        let s = a.cross(dir) / denom;
        if t > 0.0 && (-1e-12..=1.0 + 1e-12).contains(&s) {
            best = best.min(t);
        }
    }
    best
}

pub fn shoelace(points: &[Point<f64>]) -> f64 {
    let n = points.len();
    0.5 * (0..n).map(|i| points[i].cross(points[(i + 1) % n])).sum::<f64>()
}

/// `P(α, θ)` written out from the definition.
pub fn p_direct(alpha: f64, f: f64, fp: f64) -> f64 {
    1.0 / (alpha * f * f) * (1.0 + fp * fp / (f * f - alpha * f.powi(4)))
}
