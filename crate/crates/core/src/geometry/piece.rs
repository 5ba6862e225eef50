use serde::{Deserialize, Serialize};

use super::Point;
use crate::error::Result;
use crate::quadrature;
use crate::scalar::{reduce_angle, Real};

/// Closed-form family of one analytic boundary arc.
///
/// Angles are absolute polar angles around the domain center.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PieceKind<T> {
    /// Straight side: `f(θ) = d / cos(θ − θ̃)` where `d` is the distance from
    /// the center to the supporting line and `θ̃` the direction of its foot.
    Segment { foot_distance: T, foot_angle: T },
    /// Arc of the circle with center `offset` (relative to the polar center)
    /// and given radius. `outer_root` selects the larger root of the ray/circle
    /// quadratic.
    CircularArc {
        offset: Point<T>,
        radius: T,
        outer_root: bool,
    },
    /// Logarithmic spiral `f(θ) = A·exp(±c·(θ − θ_start))`; `|f'/f| = c`.
    LogSpiral {
        amplitude: T,
        rate: T,
        increasing: bool,
    },
    /// Arc of the ellipse `x²/a² + y²/b² = 1` centered at the polar center.
    EllipseArc { a: T, b: T },
}

/// One analytic piece covering the directions `[start, start + length]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryPiece<T> {
    pub kind: PieceKind<T>,
    /// Start direction in `[0, 2π)`.
    pub start: T,
    /// Angular extent in `(0, 2π]`.
    pub length: T,
}

impl<T: Real> BoundaryPiece<T> {
    pub fn new(kind: PieceKind<T>, start: T, length: T) -> Self {
        Self {
            kind,
            start: reduce_angle(start),
            length,
        }
    }

    pub fn end(&self) -> T {
        self.start + self.length
    }

    /// Offset of `theta` from the piece start, reduced to `[0, 2π)`.
    pub fn offset_of(&self, theta: T) -> T {
        reduce_angle(theta - self.start)
    }

    /// Whether `theta` lies in the half-open interval `[start, end)`.
    pub fn contains(&self, theta: T) -> bool {
        self.offset_of(theta) < self.length
    }

    /// Returns `(f, f')` at `theta`; the formula is taken on the closed interval.
    pub fn eval(&self, theta: T) -> (T, T) {
        match self.kind {
            PieceKind::Segment {
                foot_distance: d,
                foot_angle,
            } => {
                let (s, c) = (theta - foot_angle).sin_cos();
                (d / c, d * s / (c * c))
            }
            PieceKind::CircularArc {
                offset,
                radius,
                outer_root,
            } => {
                let (s, c) = theta.sin_cos();
                let p = c * offset.x + s * offset.y;
                let dp = -s * offset.x + c * offset.y;
                let disc = p * p - offset.dot(offset) + radius * radius;
                let root = disc.sqrt();
                let sign = if outer_root { T::one() } else { -T::one() };
                (p + sign * root, dp + sign * p * dp / root)
            }
            PieceKind::LogSpiral {
                amplitude,
                rate,
                increasing,
            } => {
                let k = if increasing { rate } else { -rate };
                let f = amplitude * (k * self.spiral_offset(theta)).exp();
                (f, k * f)
            }
            PieceKind::EllipseArc { a, b } => {
                let (s, c) = theta.sin_cos();
                let q = b * b * c * c + a * a * s * s;
                let f = a * b / q.sqrt();
                (f, a * b * (b * b - a * a) * s * c / (q * q.sqrt()))
            }
        }
    }

    pub fn f(&self, theta: T) -> T {
        self.eval(theta).0
    }

    /// `t(θ) = f'(θ)/f(θ) = ±tan γ`.
    pub fn log_derivative(&self, theta: T) -> T {
        match self.kind {
            PieceKind::Segment { foot_angle, .. } => (theta - foot_angle).tan(),
            PieceKind::LogSpiral { rate, increasing, .. } => {
                if increasing {
                    rate
                } else {
                    -rate
                }
            }
            _ => {
                let (f, df) = self.eval(theta);
                df / f
            }
        }
    }

    /// `1 − f(θ)²`, evaluated without cancellation near a smooth maximum of a
    /// normalized piece (where `f → 1` and `f' → 0` simultaneously).
    pub fn radius_defect(&self, theta: T) -> T {
        let one = T::one();
        match self.kind {
            PieceKind::EllipseArc { a, b } => {
                let (s, c) = theta.sin_cos();
                let q = b * b * c * c + a * a * s * s;
                (b * b * c * c * (one - a * a) + a * a * s * s * (one - b * b)) / q
            }
            PieceKind::CircularArc {
                offset,
                radius,
                outer_root: true,
            } => {
                let (s, c) = theta.sin_cos();
                let dist = offset.norm();
                let p = c * offset.x + s * offset.y;
                let root = (p * p - offset.dot(offset) + radius * radius).sqrt();
                // |c| − p = 2|c| sin²((θ − θ_c)/2) has no cancellation.
                let half = (theta - offset.angle()) * T::lit(0.5);
                let gap = T::lit(2.0) * dist * half.sin() * half.sin();
                let one_minus_f = gap * (one + (dist + p) / (radius + root)) + (one - (dist + radius));
                let f = p + root;
                one_minus_f * (one + f)
            }
            _ => {
                let f = self.f(theta);
                one - f * f
            }
        }
    }

    // Spiral formulas are not periodic, so the offset must be unwrapped.
    fn spiral_offset(&self, theta: T) -> T {
        let u = theta - self.start;
        let slack = T::lit(1e-6);
        if u < -slack || u > self.length + slack {
            reduce_angle(u)
        } else {
            u
        }
    }

    /// Absolute angles inside the piece where `f` has a stationary point.
    pub fn critical_angles(&self) -> Vec<T> {
        let pi = T::PI();
        let raw: Vec<T> = match self.kind {
            PieceKind::Segment { foot_angle, .. } => vec![foot_angle],
            PieceKind::CircularArc { offset, .. } => {
                if offset.x == T::zero() && offset.y == T::zero() {
                    vec![]
                } else {
                    let a = offset.angle();
                    vec![a, a + pi]
                }
            }
            PieceKind::LogSpiral { .. } => vec![],
            PieceKind::EllipseArc { .. } => (0..4).map(|k| pi * T::lit(0.5 * k as f64)).collect(),
        };
        raw.into_iter()
            .map(|a| self.offset_of(a))
            .filter(|&u| u > T::zero() && u < self.length)
            .map(|u| self.start + u)
            .collect()
    }

    /// Whether extrema of the bound integrands may lie strictly inside the
    /// piece away from [`critical_angles`](Self::critical_angles). Segment,
    /// spiral and centered-circle pieces attain them at the endpoints.
    pub fn needs_grid(&self) -> bool {
        match self.kind {
            PieceKind::Segment { .. } | PieceKind::LogSpiral { .. } => false,
            PieceKind::CircularArc { offset, .. } => {
                offset.x != T::zero() || offset.y != T::zero()
            }
            PieceKind::EllipseArc { a, b } => a != b,
        }
    }

    /// Area `∫ f²/2 dθ` swept between the absolute angles `lo ≤ hi`, both
    /// within the piece interval.
    pub fn partial_area(&self, lo: T, hi: T, rel_tol: T) -> Result<T> {
        let half = T::lit(0.5);
        match self.kind {
            PieceKind::Segment {
                foot_distance: d,
                foot_angle,
            } => Ok(half * d * d * ((hi - foot_angle).tan() - (lo - foot_angle).tan())),
            PieceKind::LogSpiral {
                amplitude,
                rate,
                increasing,
            } => {
                let k = if increasing { rate } else { -rate };
                let (u0, u1) = (lo - self.start, hi - self.start);
                if k == T::zero() {
                    Ok(half * amplitude * amplitude * (u1 - u0))
                } else {
                    let two_k = k + k;
                    Ok(amplitude * amplitude * ((two_k * u1).exp() - (two_k * u0).exp()) / (two_k + two_k))
                }
            }
            PieceKind::CircularArc { offset, radius, .. }
                if offset.x == T::zero() && offset.y == T::zero() =>
            {
                Ok(half * radius * radius * (hi - lo))
            }
            _ => quadrature::integrate(
                |t| {
                    let f = self.f(t);
                    half * f * f
                },
                lo,
                hi,
                rel_tol,
            ),
        }
    }

    /// Copy with every length divided by `scale`.
    pub fn scaled(&self, scale: T) -> Self {
        let kind = match self.kind {
            PieceKind::Segment {
                foot_distance,
                foot_angle,
            } => PieceKind::Segment {
                foot_distance: foot_distance / scale,
                foot_angle,
            },
            PieceKind::CircularArc {
                offset,
                radius,
                outer_root,
            } => PieceKind::CircularArc {
                offset: offset * (T::one() / scale),
                radius: radius / scale,
                outer_root,
            },
            PieceKind::LogSpiral {
                amplitude,
                rate,
                increasing,
            } => PieceKind::LogSpiral {
                amplitude: amplitude / scale,
                rate,
                increasing,
            },
            PieceKind::EllipseArc { a, b } => PieceKind::EllipseArc {
                a: a / scale,
                b: b / scale,
            },
        };
        Self { kind, ..*self }
    }
}
