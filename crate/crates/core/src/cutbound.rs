//! Upper bound for `β(Ω)` when a short straight cut `Σ` splits `Ω` into
//! `Ω₊` and `Ω₋`:
//!
//! ```text
//! β(Ω) ≤ c_d · (|Ω| L |Σ| / (|Ω₊| |Ω₋|))^{1/2}
//! ```
//!
//! In the plane `|Σ| = L` and `c₂ = √(8/3)`. No other `c_d` is known in
//! closed form, so higher dimensions require the caller to supply one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::PolarBoundary;
use crate::scalar::{structural_tol, Real};

/// Measures of a domain split by a straight cut.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutSpec<T> {
    pub area_plus: T,
    pub area_minus: T,
    pub area_total: T,
    /// Width `L` of the cut.
    pub width: T,
    /// `(d−1)`-dimensional measure `|Σ|`.
    pub sigma_measure: T,
    pub dim: u32,
    /// `c_d`; `None` selects the built-in `c₂` (planar cuts only).
    pub constant: Option<T>,
}

/// `c₂ = √8/√3`.
pub fn planar_constant<T: Real>() -> T {
    (T::lit(8.0) / T::lit(3.0)).sqrt()
}

impl<T: Real> CutSpec<T> {
    /// Planar cut by an interval of length `width`.
    pub fn planar(area_plus: T, area_minus: T, width: T) -> Result<Self> {
        Self::new(area_plus, area_minus, area_plus + area_minus, width, width, 2, None)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn new(
        area_plus: T,
        area_minus: T,
        area_total: T,
        width: T,
        sigma_measure: T,
        dim: u32,
        constant: Option<T>,
    ) -> Result<Self> {
        for (name, v) in [
            ("|Ω₊|", area_plus),
            ("|Ω₋|", area_minus),
            ("|Ω|", area_total),
            ("L", width),
            ("|Σ|", sigma_measure),
        ] {
            if !(v > T::zero()) || !v.is_finite() {
                return Err(Error::arg(format!("{name} must be positive and finite, got {v}")));
            }
        }
        if dim < 2 {
            return Err(Error::arg(format!("dimension must be at least 2, got {dim}")));
        }
        let tol = structural_tol::<T>() * area_total;
        if (area_plus + area_minus - area_total).abs() > tol {
            return Err(Error::arg("|Ω| must equal |Ω₊| + |Ω₋|"));
        }
        if dim == 2 && (sigma_measure - width).abs() > structural_tol::<T>() * width {
            return Err(Error::arg("a planar cut has |Σ| = L"));
        }
        if let Some(c) = constant {
            if !(c > T::zero()) {
                return Err(Error::arg(format!("c_d must be positive, got {c}")));
            }
        }
        Ok(Self {
            area_plus,
            area_minus,
            area_total,
            width,
            sigma_measure,
            dim,
            constant,
        })
    }

    /// Cut of a planar star-shaped domain along the full line through its
    /// center in direction `direction`; `Ω₊` lies to the right of the oriented
    /// line. Measures are in the boundary's input units.
    pub fn through_center(boundary: &PolarBoundary<T>, direction: T, rel_tol: T) -> Result<Self> {
        let pi = T::PI();
        let scale = boundary.normalization_scale();
        let width = (boundary.eval_f(direction) + boundary.eval_f(direction + pi)) * scale;
        let minus = boundary.sector_area(direction, direction + pi, rel_tol)? * scale * scale;
        let plus = boundary.sector_area(direction - pi, direction, rel_tol)? * scale * scale;
        Self::planar(plus, minus, width)
    }

    /// Cut along the vertical line through the center, `Ω₊ = {x > x₀}`.
    pub fn vertical_through_center(boundary: &PolarBoundary<T>, rel_tol: T) -> Result<Self> {
        Self::through_center(boundary, T::FRAC_PI_2(), rel_tol)
    }
}

/// Square of the upper bound, `c_d² |Ω| L |Σ| / (|Ω₊| |Ω₋|)`.
pub fn beta_upper_squared<T: Real>(cut: &CutSpec<T>) -> Result<T> {
    let ratio = cut.area_total / (cut.area_plus * cut.area_minus);
    match (cut.dim, cut.constant) {
        (2, None) => Ok(T::lit(8.0) / T::lit(3.0) * ratio * cut.width * cut.width),
        (_, Some(c)) => Ok(c * c * ratio * cut.width * cut.sigma_measure),
        (d, None) => Err(Error::arg(format!(
            "no built-in cut constant in dimension {d}; supply c_d"
        ))),
    }
}

/// Upper bound on `β(Ω)` from the cut. Values above 1 are vacuous but still
/// returned.
pub fn beta_upper<T: Real>(cut: &CutSpec<T>) -> Result<T> {
    beta_upper_squared(cut).map(|v| v.sqrt())
}

/// `claimed − proven`, both on the `β²` scale. Positive means the claimed
/// lower bound exceeds a proven upper bound, so the claim is false for this
/// domain.
pub fn refutation_margin<T: Real>(lower_claimed: T, upper: T) -> T {
    lower_claimed - upper
}
