//! Upper bounds for the Friedrichs constant from the radial function `f`, and
//! the exact conversions between `β`, `C`, `Γ` and the Korn constant.
//!
//! Everything here revolves around
//!
//! ```text
//! P(α, θ) = 1/(α f²) · (1 + f'² / (f² − α f⁴))
//! ```
//!
//! on a boundary normalized to `max f = 1`. Two min-max combinations of `P`
//! give the quantities reported by this crate:
//!
//! * `m(Ω) = sup_θ inf_α P`, the Horgan-Payne candidate, which equals
//!   `sup (1/cos γ + tan γ)²` and is *not* a valid bound in general;
//! * `M(Ω) = inf_α sup_θ P ≥ m(Ω)`, which does bound `Γ(Ω)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::sweep::{extremum, Sense};
use crate::geometry::{BoundaryPiece, PolarBoundary, PolygonSpec, SweepOptions};
use crate::optimize::{golden_section_min, GoldenOptions};
use crate::scalar::Real;

/// Numerical settings for the bound computations.
#[derive(Debug, Clone, Copy)]
pub struct BoundOptions<T> {
    pub sweep: SweepOptions<T>,
    pub golden: GoldenOptions<T>,
    /// The outer search over `α` runs on `[δ, 1 − δ]`.
    pub delta: T,
}

impl<T: Real> Default for BoundOptions<T> {
    fn default() -> Self {
        Self {
            sweep: SweepOptions::default(),
            golden: GoldenOptions::default(),
            delta: T::tol(1e-9),
        }
    }
}

/// `P` from the pointwise data `u = α f²`, `t = f'/f` and `1 − u`.
#[inline]
fn p_reduced<T: Real>(u: T, t: T, one_minus_u: T) -> T {
    if t == T::zero() {
        return T::one() / u;
    }
    if !(one_minus_u > T::zero()) {
        return T::infinity();
    }
    (T::one() + t * t / one_minus_u) / u
}

/// `P(α, θ)` from the values of `f` and `f'` at one direction.
///
/// Returns `+inf` when `α f² ≥ 1` and `f' ≠ 0`.
pub fn p_value<T: Real>(alpha: T, f: T, fprime: T) -> T {
    let u = alpha * f * f;
    p_reduced(u, fprime / f, T::one() - u)
}

fn p_on_piece<T: Real>(piece: &BoundaryPiece<T>, alpha: T, theta: T) -> T {
    let f = piece.f(theta);
    let u = alpha * f * f;
    // 1 − αf² = (1 − α) + α(1 − f²), accurate when α → 1 and f → 1.
    let one_minus_u = (T::one() - alpha) + alpha * piece.radius_defect(theta);
    p_reduced(u, piece.log_derivative(theta), one_minus_u)
}

fn check_alpha<T: Real>(alpha: T) -> Result<()> {
    if alpha > T::zero() && alpha < T::one() {
        Ok(())
    } else {
        Err(Error::arg(format!("alpha must lie in (0, 1), got {alpha}")))
    }
}

/// `P(α, θ)` on a normalized boundary. At a joint the piece starting there
/// is used; suprema elsewhere in this module take both one-sided limits.
pub fn p_at<T: Real>(boundary: &PolarBoundary<T>, alpha: T, theta: T) -> Result<T> {
    check_alpha(alpha)?;
    let piece = &boundary.pieces()[boundary.piece_index(theta)];
    Ok(p_on_piece(piece, alpha, crate::scalar::reduce_angle(theta)))
}

/// Minimizer of `α ↦ P(α, θ)` on `(0, 1/f²]` from `f` and `t = f'/f`:
/// `α f² = 1 + t² − |t|·√(1 + t²)`.
pub fn alpha_theta_from<T: Real>(f: T, t: T) -> T {
    let t2 = t * t;
    let zeta = T::one() + t2 - t.abs() * (T::one() + t2).sqrt();
    zeta / (f * f)
}

/// Pointwise minimizer `α(θ)` of `P(·, θ)`.
pub fn alpha_theta<T: Real>(boundary: &PolarBoundary<T>, theta: T) -> T {
    let theta = crate::scalar::reduce_angle(theta);
    let piece = &boundary.pieces()[boundary.piece_index(theta)];
    alpha_theta_from(piece.f(theta), piece.log_derivative(theta))
}

/// `min_α P(α, θ) = (√(1 + t²) + |t|)²` for `t = tan γ`.
pub fn pointwise_min_p<T: Real>(tan_gamma: T) -> T {
    if !tan_gamma.is_finite() {
        return T::infinity();
    }
    let t = tan_gamma.abs();
    let s = (T::one() + t * t).sqrt() + t;
    s * s
}

/// Horgan-Payne candidate `m(Ω) = sup_θ inf_α P(α, θ)`; `+inf` if a boundary
/// tangent passes through the center.
pub fn m_sup_inf<T: Real>(boundary: &PolarBoundary<T>, opts: &BoundOptions<T>) -> T {
    pointwise_min_p(boundary.max_tan_gamma(&opts.sweep).value)
}

/// `Q(α) = sup_θ P(α, θ)`, the objective of the outer minimization.
pub fn sup_p<T: Real>(boundary: &PolarBoundary<T>, alpha: T, sweep: &SweepOptions<T>) -> T {
    extremum(boundary.pieces(), sweep, Sense::Max, |p, t| p_on_piece(p, alpha, t)).value
}

/// Value and minimizer of an `inf_α` computation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InfSup<T> {
    pub value: T,
    pub alpha: T,
    /// The infimum is approached as `α → 1⁻` (disk-like domains); `value` is
    /// then `Q` at the closest admissible `α` that was evaluated.
    pub at_upper_limit: bool,
}

/// Golden-section search of a convex `Q` on `(0, 1)`, polishing minima that
/// run into the right end of the bracket.
fn minimize_convex<T: Real, Q: Fn(T) -> T>(q: Q, opts: &BoundOptions<T>) -> InfSup<T> {
    let delta = opts.delta.max(T::epsilon() * T::lit(4.0));
    let hi = T::one() - delta;
    let m = golden_section_min(&q, delta, hi, &opts.golden);
    let mut best = InfSup {
        value: m.value,
        alpha: m.x,
        at_upper_limit: false,
    };
    if hi - m.x <= T::lit(1e-6).max(T::epsilon().sqrt()) {
        best.at_upper_limit = true;
        let mut gap = delta;
        loop {
            gap = gap * T::lit(0.1);
            let alpha = T::one() - gap;
            if !(alpha < T::one()) || gap < T::epsilon() * T::lit(16.0) {
                break;
            }
            let v = q(alpha);
            if v < best.value {
                best.value = v;
                best.alpha = alpha;
            }
        }
    }
    best
}

/// `M(Ω) = inf_{α ∈ (0,1)} sup_θ P(α, θ)`, an upper bound for `Γ(Ω)`.
///
/// The reported value is always `Q(α*)` for an admissible `α*`, so it never
/// undercuts the infimum beyond the accuracy of the inner supremum.
pub fn m_inf_sup<T: Real>(boundary: &PolarBoundary<T>, opts: &BoundOptions<T>) -> InfSup<T> {
    if !(boundary.rho_max(&opts.sweep) > T::zero()) {
        return InfSup {
            value: T::infinity(),
            alpha: T::nan(),
            at_upper_limit: false,
        };
    }
    minimize_convex(|a| sup_p(boundary, a, &opts.sweep), opts)
}

/// `M(Ω)` for a polygon from its side data,
/// `inf_α max_j (1 − α d_j²) / (α d_j² (1 − α r_j²))`.
pub fn polygon_m_inf_sup<T: Real>(poly: &PolygonSpec<T>, opts: &BoundOptions<T>) -> Result<InfSup<T>> {
    let sides = poly.normalized_sides()?;
    let q = |alpha: T| {
        sides.iter().fold(T::neg_infinity(), |acc, s| {
            let ad2 = alpha * s.d * s.d;
            let ar2 = alpha * s.r * s.r;
            let v = if ar2 >= T::one() {
                if s.r == s.d {
                    T::one() / ad2
                } else {
                    T::infinity()
                }
            } else {
                (T::one() - ad2) / (ad2 * (T::one() - ar2))
            };
            acc.max(v)
        })
    };
    Ok(minimize_convex(q, opts))
}

/// `m(Ω)` for a polygon, `max_j (r_j/d_j + √(r_j²/d_j² − 1))²`.
pub fn polygon_m_sup_inf<T: Real>(poly: &PolygonSpec<T>) -> Result<T> {
    let sides = poly.normalized_sides()?;
    Ok(sides.iter().fold(T::neg_infinity(), |acc, s| {
        let k = s.r / s.d;
        let v = k + (k * k - T::one()).max(T::zero()).sqrt();
        acc.max(v * v)
    }))
}

/// Closed form for cyclic and circumscribed polygons with `d = min_j d_j`
/// (normalized): returns `(M, α₀)` with `M = (1/d + √(1/d² − 1))²` and
/// `α₀ = 1/d² − √(1/d⁴ − 1/d²)`.
///
/// `d ≥ 1` is the disk-like limit and yields `(1, 1)`.
pub fn closed_form_dm<T: Real>(d: T) -> Result<(T, T)> {
    if !(d > T::zero()) {
        return Err(Error::arg(format!("d must be positive, got {d}")));
    }
    if d >= T::one() {
        return Ok((T::one(), T::one()));
    }
    let inv = T::one() / d;
    let s = (inv * inv - T::one()).sqrt();
    let m = (inv + s) * (inv + s);
    let inv2 = inv * inv;
    // 1/d² − √(1/d⁴ − 1/d²), rewritten to avoid cancellation as d → 1.
    let alpha = T::one() / (T::one() + s * d);
    debug_assert!((alpha - (inv2 - (inv2 * inv2 - inv2).sqrt())).abs() <= T::tol(1e-9) * inv2);
    Ok((m, alpha))
}

/// Bounds driven by the ratio of the star-center disk radius `ρ_max` to the
/// enclosing disk radius `R_min`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiiRatio<T> {
    pub rho_max: T,
    pub r_min: T,
    /// `τ = arccos(ρ_max/R_min)`.
    pub tau: T,
    /// `ψ = π/2 − τ`.
    pub psi: T,
    /// `(R/ρ + √(R²/ρ² − 1))² ≥ M(Ω)`.
    pub m_tau: T,
    /// `ρ/(√2 R) (1 + √(1 − ρ²/R²))^{-1/2} = sin(ψ/2)`.
    pub beta_lower: T,
    /// `ρ_max = 0`: every quantity has degenerated to `0` or `+inf`.
    pub degenerate: bool,
}

pub fn radii_ratio_from<T: Real>(rho_max: T, r_min: T) -> RadiiRatio<T> {
    let x = (rho_max / r_min).min(T::one());
    if !(x > T::zero()) {
        return RadiiRatio {
            rho_max,
            r_min,
            tau: T::FRAC_PI_2(),
            psi: T::zero(),
            m_tau: T::infinity(),
            beta_lower: T::zero(),
            degenerate: true,
        };
    }
    let tau = x.acos();
    let psi = x.asin();
    let m_tau = pointwise_min_p((T::one() - x * x).sqrt() / x);
    let c = (T::one() - x * x).sqrt();
    let beta_lower = x / (T::SQRT_2() * (T::one() + c).sqrt());
    debug_assert!((beta_lower - (psi * T::lit(0.5)).sin()).abs() <= T::tol(1e-12));
    RadiiRatio {
        rho_max,
        r_min,
        tau,
        psi,
        m_tau,
        beta_lower,
        degenerate: false,
    }
}

pub fn radii_ratio_bounds<T: Real>(boundary: &PolarBoundary<T>, opts: &BoundOptions<T>) -> RadiiRatio<T> {
    radii_ratio_from(boundary.rho_max(&opts.sweep), boundary.r_min(&opts.sweep))
}

/// The Horgan-Payne lower bound `sin(ω(Ω)/2)` for `β(Ω)`. It is a claim, not
/// a theorem: it fails for some star-shaped domains.
pub fn hp_lower_bound<T: Real>(boundary: &PolarBoundary<T>, opts: &BoundOptions<T>) -> Result<T> {
    let e = boundary.rho_max_extremum(&opts.sweep);
    if !(e.value > T::zero()) {
        return Err(Error::not_star(
            e.theta.as_f64(),
            "rho_max = 0; Horgan-Payne type bounds are undefined",
        ));
    }
    let omega = boundary.horgan_payne_angle(&opts.sweep)?;
    Ok((omega * T::lit(0.5)).sin())
}

/// One of the four equivalent constants of a domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Constant<T> {
    /// inf-sup constant `β ∈ (0, 1]`.
    Beta(T),
    /// Babuška-Aziz constant `C ≥ 1`.
    BabuskaAziz(T),
    /// Friedrichs constant `Γ ≥ 0`.
    Friedrichs(T),
    /// Korn constant `K ≥ 2`, related to `C` only for smooth domains.
    Korn(T),
}

/// The four constants expressed through each other:
/// `C = 1/β²`, `C = Γ + 1`, and for smooth domains `K = 2C`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constants<T> {
    pub beta: T,
    pub babuska_aziz: T,
    pub friedrichs: T,
    /// Valid for smooth (at least C²) domains only.
    pub korn_smooth_only: T,
}

pub fn convert<T: Real>(value: Constant<T>) -> Result<Constants<T>> {
    let one = T::one();
    let c = match value {
        Constant::Beta(b) if b > T::zero() && b <= one => one / (b * b),
        Constant::BabuskaAziz(c) if c >= one => c,
        Constant::Friedrichs(g) if g >= T::zero() => g + one,
        Constant::Korn(k) if k >= T::lit(2.0) => k / T::lit(2.0),
        other => return Err(Error::arg(format!("constant out of range: {other:?}"))),
    };
    if !c.is_finite() {
        return Err(Error::arg("constant must be finite"));
    }
    let beta = match value {
        Constant::Beta(b) => b,
        _ => one / c.sqrt(),
    };
    Ok(Constants {
        beta,
        babuska_aziz: c,
        friedrichs: c - one,
        korn_smooth_only: c + c,
    })
}

/// `β ≥ (1 + M)^{-1/2}` from an upper bound on `Γ`.
pub fn beta_from_gamma_upper<T: Real>(gamma_upper: T) -> T {
    if gamma_upper.is_finite() {
        (T::one() + gamma_upper).sqrt().recip()
    } else {
        T::zero()
    }
}
