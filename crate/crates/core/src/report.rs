//! Aggregated bounds for one domain, each value tagged with how much it can
//! be trusted.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bounds::{
    beta_from_gamma_upper, m_inf_sup, m_sup_inf, radii_ratio_bounds, BoundOptions,
};
use crate::cutbound::{beta_upper, CutSpec};
use crate::error::Result;
use crate::geometry::PolarBoundary;
use crate::scalar::Real;
use crate::shapes::ReferenceConstants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Provenance {
    /// Follows from a theorem.
    Proven,
    /// The Horgan-Payne claim; false for some star-shaped domains.
    Claimed,
    /// Valid for smooth domains only.
    SmoothOnly,
    /// Geometric input data, not a bound.
    Geometry,
    /// The center lies on the kernel boundary and the value is meaningless.
    Degenerate,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::Proven => "PROVEN",
            Provenance::Claimed => "CLAIMED",
            Provenance::SmoothOnly => "SMOOTH_ONLY",
            Provenance::Geometry => "GEOMETRY",
            Provenance::Degenerate => "DEGENERATE",
        })
    }
}

/// A reported number and its provenance. Non-finite values serialize as the
/// strings `"inf"`, `"-inf"` and `"nan"`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Real", deserialize = "T: Real"))]
pub struct Tagged<T> {
    #[serde(serialize_with = "ser_real", deserialize_with = "de_real")]
    pub value: T,
    pub provenance: Provenance,
}

impl<T> Tagged<T> {
    pub fn new(value: T, provenance: Provenance) -> Self {
        Self { value, provenance }
    }
}

fn ser_real<T: Real, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    let x = v.as_f64();
    if x.is_finite() {
        s.serialize_f64(x)
    } else if x.is_nan() {
        s.serialize_str("nan")
    } else if x > 0.0 {
        s.serialize_str("inf")
    } else {
        s.serialize_str("-inf")
    }
}

fn de_real<'de, T: Real, D: Deserializer<'de>>(d: D) -> std::result::Result<T, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Str(String),
    }
    let x = match Repr::deserialize(d)? {
        Repr::Num(x) => x,
        Repr::Str(s) => match s.as_str() {
            "inf" => f64::INFINITY,
            "-inf" => f64::NEG_INFINITY,
            "nan" => f64::NAN,
            other => return Err(serde::de::Error::custom(format!("not a number: {other:?}"))),
        },
    };
    T::from_f64(x).ok_or_else(|| serde::de::Error::custom("value not representable"))
}

/// Every bound the crate computes for one star-shaped domain.
///
/// Ordering guaranteed by construction:
/// `beta_lower_rrho ≤ beta_lower_proven ≤ beta_lower_hp_claimed`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>"))]
pub struct BoundReport<T> {
    /// Horgan-Payne angle `ω(Ω)`.
    pub omega_hp: Tagged<T>,
    /// `m(Ω) = sup_θ inf_α P`.
    pub m: Tagged<T>,
    /// `M(Ω) = inf_α sup_θ P ≥ Γ(Ω)`.
    pub big_m: Tagged<T>,
    pub alpha_star: Tagged<T>,
    /// `M` was attained as `α → 1⁻`.
    pub alpha_at_upper_limit: bool,
    pub rho_max: Tagged<T>,
    pub r_min: Tagged<T>,
    pub tau: Tagged<T>,
    pub psi: Tagged<T>,
    /// `M_τ ≥ M`.
    pub m_tau: Tagged<T>,
    /// `(1 + M)^{-1/2}`.
    pub beta_lower_proven: Tagged<T>,
    /// `sin(ω/2) = (1 + m)^{-1/2}`.
    pub beta_lower_hp_claimed: Tagged<T>,
    /// `sin(ψ/2)`.
    pub beta_lower_rrho: Tagged<T>,
    /// Smallest cut bound over the tested directions through the center.
    pub beta_upper: Option<Tagged<T>>,
    /// Direction of the cut that gave `beta_upper`.
    pub beta_upper_direction: Option<T>,
    /// `1 + M`.
    pub c_upper_proven: Tagged<T>,
    /// `M`.
    pub gamma_upper_proven: Tagged<T>,
    /// `2(1 + M)`.
    pub k_upper_smooth_only: Tagged<T>,
    pub normalization_scale: T,
    #[serde(default)]
    pub reference: ReferenceConstants<T>,
}

/// Settings for [`BoundReport::compute`].
#[derive(Debug, Clone, Copy)]
pub struct ReportOptions<T> {
    pub bounds: BoundOptions<T>,
    /// Number of equally spaced cut directions in `[0, π)`; `0` disables the
    /// upper bound.
    pub cut_directions: usize,
    pub area_tol: T,
}

impl<T: Real> Default for ReportOptions<T> {
    fn default() -> Self {
        Self {
            bounds: BoundOptions::default(),
            cut_directions: 8,
            area_tol: T::tol(1e-10),
        }
    }
}

impl<T: Real> BoundReport<T> {
    pub fn compute(boundary: &PolarBoundary<T>, opts: &ReportOptions<T>) -> Result<Self> {
        let b = &opts.bounds;
        let rr = radii_ratio_bounds(boundary, b);
        let degenerate = rr.degenerate;
        let tag = |v: T, p: Provenance| Tagged::new(v, if degenerate { Provenance::Degenerate } else { p });
        let geo = |v: T| Tagged::new(v, Provenance::Geometry);

        let m = m_sup_inf(boundary, b);
        let big = m_inf_sup(boundary, b);
        let omega = if degenerate {
            T::zero()
        } else {
            boundary.horgan_payne_angle(&b.sweep)?
        };
        let c_upper = T::one() + big.value;

        let mut beta_up: Option<(T, T)> = None;
        if !degenerate {
            for k in 0..opts.cut_directions {
                let dir = T::PI() * T::lit(k as f64) / T::lit(opts.cut_directions as f64);
                let cut = CutSpec::through_center(boundary, dir, opts.area_tol)?;
                let v = beta_upper(&cut)?;
                if beta_up.is_none_or(|(best, _)| v < best) {
                    beta_up = Some((v, dir));
                }
            }
        }

        Ok(Self {
            omega_hp: geo(omega),
            m: tag(m, Provenance::Claimed),
            big_m: tag(big.value, Provenance::Proven),
            alpha_star: tag(big.alpha, Provenance::Proven),
            alpha_at_upper_limit: big.at_upper_limit,
            rho_max: geo(rr.rho_max),
            r_min: geo(rr.r_min),
            tau: geo(rr.tau),
            psi: geo(rr.psi),
            m_tau: tag(rr.m_tau, Provenance::Proven),
            beta_lower_proven: tag(beta_from_gamma_upper(big.value), Provenance::Proven),
            beta_lower_hp_claimed: tag(beta_from_gamma_upper(m), Provenance::Claimed),
            beta_lower_rrho: tag(rr.beta_lower, Provenance::Proven),
            beta_upper: beta_up.map(|(v, _)| Tagged::new(v, Provenance::Proven)),
            beta_upper_direction: beta_up.map(|(_, d)| d),
            c_upper_proven: tag(c_upper, Provenance::Proven),
            gamma_upper_proven: tag(big.value, Provenance::Proven),
            k_upper_smooth_only: tag(c_upper + c_upper, Provenance::SmoothOnly),
            normalization_scale: boundary.normalization_scale(),
            reference: ReferenceConstants::default(),
        })
    }

    pub fn with_reference(mut self, reference: ReferenceConstants<T>) -> Self {
        self.reference = reference;
        self
    }

    /// `[beta_lower_proven, beta_upper]`, or `None` when the two bounds
    /// contradict each other.
    pub fn beta_interval(&self) -> Option<(T, T)> {
        let lo = self.beta_lower_proven.value;
        let hi = self.beta_upper.map_or(T::one(), |u| u.value.min(T::one()));
        (lo <= hi).then_some((lo, hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::ShapeSpec;

    #[test]
    fn disk_report() {
        let b = ShapeSpec::Disk { radius: 2.0f64 }.build().unwrap();
        let r = BoundReport::compute(&b, &ReportOptions::default()).unwrap();
        assert!((r.big_m.value - 1.0).abs() < 1e-10);
        assert!((r.m.value - 1.0).abs() < 1e-15);
        assert!((r.beta_lower_proven.value - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-10);
        assert_eq!(r.m.provenance, Provenance::Claimed);
        assert_eq!(r.k_upper_smooth_only.provenance, Provenance::SmoothOnly);
        assert!(r.beta_upper.unwrap().value > 1.0);
        assert!(r.alpha_at_upper_limit);
    }

    #[test]
    fn ordering_of_lower_bounds() {
        let b = ShapeSpec::Rectangle { width: 3.0, height: 1.0 }.build().unwrap();
        let r = BoundReport::compute(&b, &ReportOptions::default()).unwrap();
        assert!(r.beta_lower_rrho.value <= r.beta_lower_proven.value + 1e-12);
        assert!(r.beta_lower_proven.value <= r.beta_lower_hp_claimed.value + 1e-12);
        let (lo, hi) = r.beta_interval().unwrap();
        assert!(lo < hi);
    }

    #[test]
    fn json_round_trip_with_infinities() {
        let b = ShapeSpec::RegularPolygon {
            sides: 5,
            circumradius: 1.0,
        }
        .build()
        .unwrap();
        let mut r = BoundReport::compute(&b, &ReportOptions::default()).unwrap();
        r.m_tau.value = f64::INFINITY;
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"inf\""));
        let back: BoundReport<f64> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
