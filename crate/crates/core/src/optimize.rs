//! One-dimensional minimization by golden-section search.

use crate::scalar::Real;

/// Stopping rules for [`golden_section_min`].
#[derive(Debug, Clone, Copy)]
pub struct GoldenOptions<T> {
    /// Relative bracket width at which the search stops.
    pub rel_tol: T,
    /// Absolute floor on the bracket width (guards brackets around zero).
    pub abs_tol: T,
    pub max_iter: usize,
}

impl<T: Real> Default for GoldenOptions<T> {
    fn default() -> Self {
        Self {
            rel_tol: T::tol(1e-10),
            abs_tol: T::tol(1e-14),
            max_iter: 200,
        }
    }
}

/// Result of a one-dimensional search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum<T> {
    pub x: T,
    pub value: T,
    pub iterations: usize,
    /// Whether the bracket shrank below tolerance before `max_iter`.
    pub converged: bool,
}

// NaN compares as +inf so that it never wins a minimization.
#[inline]
fn sanitize<T: Real>(v: T) -> T {
    if v.is_nan() {
        T::infinity()
    } else {
        v
    }
}

/// Minimizes a unimodal `f` on `[a, b]`.
///
/// `+inf` values are ordered above every finite value, so functions that blow
/// up at one end of the bracket are handled. The returned point is the best
/// evaluated point, including both bracket ends.
pub fn golden_section_min<T, F>(f: F, a: T, b: T, opts: &GoldenOptions<T>) -> Minimum<T>
where
    T: Real,
    F: Fn(T) -> T,
{
    let f = |x: T| sanitize(f(x));
    let (mut a, mut b) = if a <= b { (a, b) } else { (b, a) };
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) / T::lit(2.0);

    let fa = f(a);
    let fb = f(b);
    let mut best = if fa <= fb { (a, fa) } else { (b, fb) };

    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    let mut iterations = 0;
    let mut converged = false;
    while iterations < opts.max_iter {
        let width = b - a;
        let scale = a.abs().max(b.abs());
        if width <= opts.rel_tol * scale || width <= opts.abs_tol {
            converged = true;
            break;
        }
        iterations += 1;
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }

    for (x, v) in [(x1, f1), (x2, f2)] {
        if v < best.1 {
            best = (x, v);
        }
    }
    Minimum {
        x: best.0,
        value: best.1,
        iterations,
        converged,
    }
}

/// Maximizes a unimodal `f` on `[a, b]`.
pub fn golden_section_max<T, F>(f: F, a: T, b: T, opts: &GoldenOptions<T>) -> Minimum<T>
where
    T: Real,
    F: Fn(T) -> T,
{
    let m = golden_section_min(
        |x| {
            let v = f(x);
            if v.is_nan() {
                T::infinity()
            } else {
                -v
            }
        },
        a,
        b,
        opts,
    );
    Minimum { value: -m.value, ..m }
}
