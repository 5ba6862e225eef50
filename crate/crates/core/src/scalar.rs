//! Scalar abstraction shared by every numeric routine in the crate.
//!
//! All geometry and bound computations are written against [`Real`], so the
//! same code runs in `f64` (the reference precision, where the documented
//! tolerances apply) and in `f32`.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar usable by the bound computations.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`, rounding if needed.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// `Self::lit(x)` clamped from below to a small multiple of machine
    /// epsilon, so that tolerances written for `f64` stay meaningful in `f32`.
    #[inline]
    fn tol(x: f64) -> Self {
        let floor = Self::epsilon() * Self::lit(16.0);
        Self::lit(x).max(floor)
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Reduces an angle to the half-open interval `[0, 2π)`.
pub fn reduce_angle<T: Real>(theta: T) -> T {
    let two_pi = T::TAU();
    let r = theta % two_pi;
    let r = if r < T::zero() { r + two_pi } else { r };
    // `r + 2π` can round up to exactly 2π for tiny negative inputs.
    if r >= two_pi {
        T::zero()
    } else {
        r
    }
}

/// Tolerance used when comparing angles or radii of adjacent boundary pieces.
pub(crate) fn structural_tol<T: Real>() -> T {
    T::lit(1e-9).max(T::epsilon() * T::lit(1e3))
}
