//! Global extrema of a pointwise boundary quantity.
//!
//! Each piece contributes its closed-interval endpoints (the one-sided limits
//! at joints) and its critical angles. Pieces whose integrands can peak in the
//! interior are additionally sampled on a uniform grid, and the best cells are
//! polished by golden-section search.

use super::BoundaryPiece;
use crate::optimize::{golden_section_max, golden_section_min, GoldenOptions};
use crate::scalar::Real;

/// Grid and refinement settings for boundary sweeps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions<T> {
    /// Grid points per full turn; a piece of length `ℓ` gets `⌈N·ℓ/2π⌉`.
    pub grid: usize,
    /// Angular tolerance of the local refinement.
    pub tol: T,
    /// Number of best grid cells refined per piece.
    pub refine_cells: usize,
}

impl<T: Real> Default for SweepOptions<T> {
    fn default() -> Self {
        Self {
            grid: 4096,
            tol: T::tol(1e-10),
            refine_cells: 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Sense {
    Min,
    Max,
}

/// Extreme value of a boundary quantity and where it was found.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum<T> {
    pub value: T,
    pub theta: T,
    pub piece: usize,
}

impl Sense {
    fn better<T: Real>(self, a: T, b: T) -> bool {
        match self {
            Sense::Max => a > b,
            Sense::Min => a < b,
        }
    }

    // NaN signals a breakdown of the piece formula; treat it as the extreme.
    fn clean<T: Real>(self, v: T) -> T {
        if !v.is_nan() {
            v
        } else if self == Sense::Max {
            T::infinity()
        } else {
            T::neg_infinity()
        }
    }
}

pub(crate) fn extremum<T, G>(
    pieces: &[BoundaryPiece<T>],
    opts: &SweepOptions<T>,
    sense: Sense,
    g: G,
) -> Extremum<T>
where
    T: Real,
    G: Fn(&BoundaryPiece<T>, T) -> T,
{
    let mut best = Extremum {
        value: match sense {
            Sense::Max => T::neg_infinity(),
            Sense::Min => T::infinity(),
        },
        theta: T::zero(),
        piece: 0,
    };
    let mut offer = |value: T, theta: T, piece: usize| {
        let value = sense.clean(value);
        if sense.better(value, best.value) {
            best = Extremum { value, theta, piece };
        }
    };
    let golden = GoldenOptions {
        rel_tol: T::zero(),
        abs_tol: opts.tol,
        max_iter: 200,
    };

    for (idx, piece) in pieces.iter().enumerate() {
        let eval = |t: T| g(piece, t);
        let (a, b) = (piece.start, piece.end());
        offer(eval(a), a, idx);
        offer(eval(b), b, idx);
        for t in piece.critical_angles() {
            offer(eval(t), t, idx);
        }
        if !piece.needs_grid() {
            continue;
        }

        let frac = (piece.length / T::TAU()).as_f64();
        let n = ((opts.grid as f64 * frac).ceil() as usize).max(8);
        let step = piece.length / T::lit(n as f64);
        let values: Vec<T> = (0..=n)
            .map(|i| sense.clean(eval(a + step * T::lit(i as f64))))
            .collect();
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&i, &j| {
            let (vi, vj) = (values[i], values[j]);
            let ord = vi.partial_cmp(&vj).unwrap_or(std::cmp::Ordering::Equal);
            match sense {
                Sense::Max => ord.reverse(),
                Sense::Min => ord,
            }
        });
        for &i in order.iter().take(opts.refine_cells) {
            offer(values[i], a + step * T::lit(i as f64), idx);
            let lo = if i == 0 { a } else { a + step * T::lit((i - 1) as f64) };
            let hi = if i == n { b } else { a + step * T::lit((i + 1) as f64) };
            let m = match sense {
                Sense::Max => golden_section_max(eval, lo, hi, &golden),
                Sense::Min => golden_section_min(eval, lo, hi, &golden),
            };
            offer(m.value, m.x, idx);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::PieceKind;
    use std::f64::consts::PI;

    #[test]
    fn ellipse_extrema_of_f_are_exact() {
        let p = [BoundaryPiece::new(PieceKind::EllipseArc { a: 1.0, b: 2.0 }, 0.0, 2.0 * PI)];
        let max = extremum(&p, &SweepOptions::default(), Sense::Max, |q, t| q.f(t));
        let min = extremum(&p, &SweepOptions::default(), Sense::Min, |q, t| q.f(t));
        assert_eq!(max.value, 2.0);
        assert_eq!(min.value, 1.0);
    }

    #[test]
    fn interior_peak_is_refined() {
        // |t| on an ellipse peaks away from the axes; a coarse grid plus
        // refinement must match a very fine scan.
        let p = [BoundaryPiece::new(PieceKind::EllipseArc { a: 1.0, b: 3.0 }, 0.0, 2.0 * PI)];
        let opts = SweepOptions {
            grid: 64,
            ..Default::default()
        };
        let found = extremum(&p, &opts, Sense::Max, |q, t| q.log_derivative(t).abs());
        let brute = (0..2_000_000)
            .map(|i| p[0].log_derivative(2.0 * PI * i as f64 / 2e6).abs())
            .fold(0.0, f64::max);
        assert!(found.value >= brute - 1e-9);
        assert!((found.value - brute).abs() < 1e-6);
    }

    #[test]
    fn nan_counts_as_extreme() {
        let p = [BoundaryPiece::new(
            PieceKind::Segment {
                foot_distance: 1.0,
                foot_angle: 0.0,
            },
            0.0,
            1.0,
        )];
        let e = extremum(&p, &SweepOptions::default(), Sense::Max, |_, t| if t > 0.5 { f64::NAN } else { t });
        assert_eq!(e.value, f64::INFINITY);
    }
}
