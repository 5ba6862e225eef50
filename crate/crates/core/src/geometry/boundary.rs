use serde::{Deserialize, Serialize};

use super::sweep::{extremum, Sense};
use super::{BoundaryPiece, Extremum, PieceKind, Point, SweepOptions};
use crate::error::{Error, Result};
use crate::scalar::{reduce_angle, structural_tol, Real};

/// Derivative of `f` at a direction: a single value inside a piece, or the two
/// one-sided limits at a joint between pieces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Derivative<T> {
    Smooth(T),
    Joint { left: T, right: T },
}

impl<T: Real> Derivative<T> {
    /// Largest absolute value among the available one-sided derivatives.
    pub fn max_abs(&self) -> T {
        match *self {
            Derivative::Smooth(d) => d.abs(),
            Derivative::Joint { left, right } => left.abs().max(right.abs()),
        }
    }
}

/// Cartesian boundary primitive, traversed counter-clockwise around the
/// polar center.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CurvePrimitive<T> {
    Line {
        from: Point<T>,
        to: Point<T>,
    },
    /// Arc of a circle from `from` to `to`; `ccw` is the direction of travel
    /// around the circle's own center.
    Arc {
        center: Point<T>,
        radius: T,
        from: Point<T>,
        to: Point<T>,
        ccw: bool,
    },
    /// A complete circle; must be the only primitive.
    Circle { center: Point<T>, radius: T },
}

/// Boundary of a star-shaped domain as `r = f(θ)` around `center`.
///
/// The stored pieces are normalized so that `max f = 1`; the factor removed is
/// kept in [`normalization_scale`](Self::normalization_scale).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolarBoundary<T> {
    pieces: Vec<BoundaryPiece<T>>,
    center: Point<T>,
    normalization_scale: T,
}

impl<T: Real> PolarBoundary<T> {
    /// Validates and normalizes a set of pieces.
    ///
    /// The pieces must tile `[0, 2π)` without gaps or overlaps, agree in radius
    /// at every joint, and describe a positive finite radius everywhere.
    pub fn new(center: Point<T>, mut pieces: Vec<BoundaryPiece<T>>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::Structural("no boundary pieces".into()));
        }
        let tol = structural_tol::<T>();
        for p in &pieces {
            if !(p.length > T::zero()) || p.length > T::TAU() + tol {
                return Err(Error::Structural(format!(
                    "piece starting at {} has invalid length {}",
                    p.start, p.length
                )));
            }
        }
        pieces.sort_by(|a, b| a.start.partial_cmp(&b.start).unwrap_or(std::cmp::Ordering::Equal));

        let total = pieces.iter().fold(T::zero(), |acc, p| acc + p.length);
        if (total - T::TAU()).abs() > tol {
            return Err(Error::Structural(format!(
                "pieces cover {total} radians instead of 2π"
            )));
        }
        let n = pieces.len();
        for i in 0..n {
            let (cur, next) = (&pieces[i], &pieces[(i + 1) % n]);
            let gap = reduce_angle(next.start - cur.end());
            let gap = gap.min(T::TAU() - gap);
            if gap > tol {
                return Err(Error::Structural(format!(
                    "gap or overlap of {gap} radians between pieces at {} and {}",
                    cur.end().as_f64(),
                    next.start.as_f64()
                )));
            }
            let (r_end, r_next) = (cur.f(cur.end()), next.f(next.start));
            if (r_end - r_next).abs() > tol * T::one().max(r_end.abs()) {
                return Err(Error::Structural(format!(
                    "radius jumps from {r_end} to {r_next} at theta = {}",
                    next.start
                )));
            }
        }
        validate_radius(&pieces)?;

        let scale = extremum(&pieces, &SweepOptions::default(), Sense::Max, |p, t| p.f(t)).value;
        if !scale.is_finite() || !(scale > T::zero()) {
            return Err(Error::Structural(format!("unbounded radius (max f = {scale})")));
        }
        let pieces = pieces.iter().map(|p| p.scaled(scale)).collect();
        Ok(Self {
            pieces,
            center,
            normalization_scale: scale,
        })
    }

    /// Converts a closed counter-clockwise chain of lines and circular arcs
    /// into polar pieces around `center`.
    pub fn from_curve(center: Point<T>, curve: &[CurvePrimitive<T>]) -> Result<Self> {
        let mut pieces = Vec::with_capacity(curve.len());
        for (i, prim) in curve.iter().enumerate() {
            match *prim {
                CurvePrimitive::Line { from, to } => pieces.push(line_piece(center, from, to, i)?),
                CurvePrimitive::Arc {
                    center: c,
                    radius,
                    from,
                    to,
                    ccw,
                } => pieces.push(arc_piece(center, c, radius, from, to, ccw, i)?),
                CurvePrimitive::Circle { center: c, radius } => {
                    if curve.len() != 1 {
                        return Err(Error::Structural("a full circle must be the only primitive".into()));
                    }
                    let offset = c - center;
                    if !(offset.norm() < radius) {
                        return Err(Error::not_star(
                            offset.angle().as_f64(),
                            "center lies outside the disk",
                        ));
                    }
                    pieces.push(BoundaryPiece::new(
                        PieceKind::CircularArc {
                            offset,
                            radius,
                            outer_root: true,
                        },
                        T::zero(),
                        T::TAU(),
                    ));
                }
            }
        }
        let total = pieces.iter().fold(T::zero(), |acc, p| acc + p.length);
        if (total - T::TAU()).abs() > structural_tol::<T>() {
            return Err(Error::not_star(
                0.0,
                format!("boundary winds {} times around the center", (total / T::TAU()).as_f64()),
            ));
        }
        Self::new(center, pieces)
    }

    pub fn pieces(&self) -> &[BoundaryPiece<T>] {
        &self.pieces
    }

    pub fn center(&self) -> Point<T> {
        self.center
    }

    /// Factor by which the input radii were divided.
    pub fn normalization_scale(&self) -> T {
        self.normalization_scale
    }

    /// Re-normalizes the boundary. The result equals `self`: pieces are
    /// already scaled to `max f = 1`.
    pub fn normalized(&self) -> Self {
        let sup = extremum(&self.pieces, &SweepOptions::default(), Sense::Max, |p, t| p.f(t)).value;
        if sup == T::one() {
            return self.clone();
        }
        Self {
            pieces: self.pieces.iter().map(|p| p.scaled(sup)).collect(),
            center: self.center,
            normalization_scale: self.normalization_scale * sup,
        }
    }

    /// Index of the piece whose half-open interval contains `theta`.
    pub fn piece_index(&self, theta: T) -> usize {
        let theta = reduce_angle(theta);
        self.pieces
            .iter()
            .position(|p| p.contains(theta))
            .unwrap_or_else(|| {
                // Rounding at the very end of the turn: pick the nearest start.
                self.pieces.len() - 1
            })
    }

    /// If `theta` sits on a joint, the indices of the pieces ending and
    /// starting there.
    pub fn joint_at(&self, theta: T) -> Option<(usize, usize)> {
        if self.pieces.len() < 2 {
            return None;
        }
        let theta = reduce_angle(theta);
        let tol = T::tol(1e-12);
        let n = self.pieces.len();
        (0..n).find_map(|i| {
            let d = reduce_angle(theta - self.pieces[i].start);
            (d.min(T::TAU() - d) <= tol).then(|| ((i + n - 1) % n, i))
        })
    }

    /// Normalized radius in direction `theta`.
    pub fn eval_f(&self, theta: T) -> T {
        let theta = reduce_angle(theta);
        self.pieces[self.piece_index(theta)].f(theta)
    }

    /// Derivative of `f`, with both one-sided values at joints.
    pub fn eval_fprime(&self, theta: T) -> Derivative<T> {
        let theta = reduce_angle(theta);
        match self.joint_at(theta) {
            Some((l, r)) => {
                let (left, right) = (&self.pieces[l], &self.pieces[r]);
                Derivative::Joint {
                    left: left.eval(left.start + left.length).1,
                    right: right.eval(right.start).1,
                }
            }
            None => Derivative::Smooth(self.pieces[self.piece_index(theta)].eval(theta).1),
        }
    }

    /// Angle between the ray and the outward normal, `arctan(|f'|/f)`; at a
    /// joint the larger one-sided value.
    pub fn gamma(&self, theta: T) -> T {
        let f = self.eval_f(theta);
        (self.eval_fprime(theta).max_abs() / f).atan()
    }

    /// Largest `|f'/f| = tan γ` over the boundary, including one-sided limits.
    pub fn max_tan_gamma(&self, opts: &SweepOptions<T>) -> Extremum<T> {
        extremum(&self.pieces, opts, Sense::Max, |p, t| p.log_derivative(t).abs())
    }

    /// Horgan-Payne angle `ω(Ω) = π/2 − sup γ`.
    pub fn horgan_payne_angle(&self, opts: &SweepOptions<T>) -> Result<T> {
        let e = self.max_tan_gamma(opts);
        if !e.value.is_finite() {
            return Err(Error::not_star(e.theta.as_f64(), "a boundary tangent passes through the center"));
        }
        Ok(T::FRAC_PI_2() - e.value.atan())
    }

    /// Radius of the largest disk around the center with respect to which the
    /// domain is star-shaped, `inf f·cos γ = inf f²/√(f² + f'²)`.
    pub fn rho_max_extremum(&self, opts: &SweepOptions<T>) -> Extremum<T> {
        let mut e = extremum(&self.pieces, opts, Sense::Min, |p, t| match p.kind {
            PieceKind::Segment { foot_distance, .. } => foot_distance,
            PieceKind::LogSpiral { rate, .. } => p.f(t) / (T::one() + rate * rate).sqrt(),
            _ => {
                let (f, df) = p.eval(t);
                f * f / f.hypot(df)
            }
        });
        if !(e.value > T::zero()) {
            e.value = T::zero();
        }
        e
    }

    pub fn rho_max(&self, opts: &SweepOptions<T>) -> T {
        self.rho_max_extremum(opts).value
    }

    /// `sup f`, which is 1 for a normalized boundary.
    pub fn r_min(&self, opts: &SweepOptions<T>) -> T {
        extremum(&self.pieces, opts, Sense::Max, |p, t| p.f(t)).value
    }

    /// Radius of the smallest centered disk containing the domain, in the
    /// input units.
    pub fn raw_r_min(&self, opts: &SweepOptions<T>) -> T {
        self.r_min(opts) * self.normalization_scale
    }

    /// Area swept by directions from `from` to `to` (counter-clockwise,
    /// spanning at most one turn), in normalized units.
    pub fn sector_area(&self, from: T, to: T, rel_tol: T) -> Result<T> {
        let two_pi = T::TAU();
        let lo = from;
        let hi = if to - from > two_pi { from + two_pi } else { to };
        if hi < lo {
            return Err(Error::arg("sector end precedes start"));
        }
        let mut area = T::zero();
        for p in &self.pieces {
            for k in -2..=2 {
                let shift = two_pi * T::lit(k as f64);
                let a = (p.start + shift).max(lo);
                let b = (p.end() + shift).min(hi);
                if b > a {
                    area = area + p.partial_area(a - shift, b - shift, rel_tol)?;
                }
            }
        }
        Ok(area)
    }

    /// Area of the normalized domain.
    pub fn area(&self, rel_tol: T) -> Result<T> {
        let mut area = T::zero();
        for p in &self.pieces {
            area = area + p.partial_area(p.start, p.end(), rel_tol)?;
        }
        Ok(area)
    }

    /// Area in the input units.
    pub fn raw_area(&self, rel_tol: T) -> Result<T> {
        let s = self.normalization_scale;
        Ok(self.area(rel_tol)? * s * s)
    }

    /// Directions of all joints, in increasing order.
    pub fn joints(&self) -> Vec<T> {
        if self.pieces.len() < 2 {
            return vec![];
        }
        self.pieces.iter().map(|p| p.start).collect()
    }
}

fn validate_radius<T: Real>(pieces: &[BoundaryPiece<T>]) -> Result<()> {
    const SAMPLES: usize = 64;
    for p in pieces {
        for i in 0..=SAMPLES {
            let t = p.start + p.length * T::lit(i as f64 / SAMPLES as f64);
            let (f, df) = p.eval(t);
            if !(f > T::zero()) || !f.is_finite() || !df.is_finite() {
                return Err(Error::not_star(
                    reduce_angle(t).as_f64(),
                    format!("radius {f} (derivative {df}) is not positive and finite"),
                ));
            }
        }
    }
    Ok(())
}

fn line_piece<T: Real>(center: Point<T>, from: Point<T>, to: Point<T>, index: usize) -> Result<BoundaryPiece<T>> {
    let (a, b) = (from - center, to - center);
    let cross = a.cross(b);
    let len = (to - from).norm();
    if !(len > T::zero()) {
        return Err(Error::Structural(format!("side {index} has zero length")));
    }
    let d = cross / len;
    if !(d > structural_tol::<T>() * a.norm().max(b.norm())) {
        return Err(Error::not_star(
            a.angle().as_f64(),
            format!("side {index} does not face the center (distance to its line {d})"),
        ));
    }
    let dir = (to - from) * (T::one() / len);
    let normal = Point::new(dir.y, -dir.x);
    let sweep = cross.atan2(a.dot(b));
    Ok(BoundaryPiece::new(
        PieceKind::Segment {
            foot_distance: d,
            foot_angle: normal.angle(),
        },
        a.angle(),
        sweep,
    ))
}

fn arc_piece<T: Real>(
    center: Point<T>,
    circle: Point<T>,
    radius: T,
    from: Point<T>,
    to: Point<T>,
    ccw: bool,
    index: usize,
) -> Result<BoundaryPiece<T>> {
    const SAMPLES: usize = 64;
    let tol = structural_tol::<T>() * T::one().max(radius);
    for p in [from, to] {
        if ((p - circle).norm() - radius).abs() > tol {
            return Err(Error::Structural(format!("arc {index} endpoint is not on its circle")));
        }
    }
    let (phi0, phi1) = ((from - circle).angle(), (to - circle).angle());
    let mut span = phi1 - phi0;
    if ccw {
        span = reduce_angle(span);
    } else {
        span = -reduce_angle(-span);
    }
    if span == T::zero() {
        return Err(Error::Structural(format!("arc {index} is empty")));
    }
    let at = |s: T| circle + Point::polar(radius, phi0 + span * s) - center;

    let mut sweep = T::zero();
    let mut prev = at(T::zero());
    for i in 1..=SAMPLES {
        let cur = at(T::lit(i as f64 / SAMPLES as f64));
        let step = prev.cross(cur).atan2(prev.dot(cur));
        if !(step > T::zero()) {
            return Err(Error::not_star(
                reduce_angle(cur.angle()).as_f64(),
                format!("arc {index} turns back as seen from the center"),
            ));
        }
        sweep = sweep + step;
        prev = cur;
    }

    let offset = circle - center;
    let mid = at(T::lit(0.5));
    let dir = mid * (T::one() / mid.norm());
    let p = dir.dot(offset);
    let root = (p * p - offset.dot(offset) + radius * radius).max(T::zero()).sqrt();
    let outer_root = (p + root - mid.norm()).abs() <= (p - root - mid.norm()).abs();
    let piece = BoundaryPiece::new(
        PieceKind::CircularArc {
            offset,
            radius,
            outer_root,
        },
        (from - center).angle(),
        sweep,
    );
    for (p, t) in [(from - center, piece.start), (to - center, piece.end())] {
        if (piece.f(t) - p.norm()).abs() > tol {
            return Err(Error::Structural(format!(
                "arc {index}: no root of the ray equation reproduces its endpoints"
            )));
        }
    }
    Ok(piece)
}
