//! Built-in domain families: the classes where `m(Ω) = M(Ω)` and the three
//! counterexample families to the Horgan-Payne inequality.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cutbound::{beta_upper_squared, refutation_margin, CutSpec};
use crate::error::{Error, Result};
use crate::geometry::{BoundaryPiece, CurvePrimitive, PieceKind, Point, PolarBoundary, PolygonSpec};
use crate::scalar::Real;

/// Polar center used for triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleCenter {
    #[default]
    Barycenter,
    Incenter,
}

/// A domain from one of the supported families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ShapeSpec<T> {
    Disk { radius: T },
    /// `x²/a² + y²/b² = 1`.
    Ellipse { a: T, b: T },
    /// Centered at the origin with one side parallel to the x-axis.
    RegularPolygon { sides: usize, circumradius: T },
    Rectangle { width: T, height: T },
    Triangle { vertices: [Point<T>; 3], center: TriangleCenter },
    /// Diagonals along the axes.
    Rhombus { diagonal_x: T, diagonal_y: T },
    /// Arbitrary simple polygon; the centroid is used when `center` is absent.
    Polygon { vertices: Vec<Point<T>>, center: Option<Point<T>> },
    /// Four logarithmic spirals `f(θ) = e^{−c(π/2 − |π/2 − |θ||)}`.
    CupidsBow { c: T },
    /// Two mirrored stadiums joined by a passage of width `2ε`.
    DoubleStadium { epsilon: T },
    /// Octagon with corner distances `1, q, q², q, 1, q, q², q`.
    OctagonCe { q: T },
}

/// Known exact values or reference bounds for a domain.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ReferenceConstants<T> {
    pub friedrichs: Option<T>,
    pub beta: Option<T>,
    /// Lower bound on the Babuška-Aziz constant (known for the square).
    pub babuska_aziz_lower: Option<T>,
}

fn positive<T: Real>(name: &str, v: T) -> Result<T> {
    if v > T::zero() && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::arg(format!("{name} must be positive, got {v}")))
    }
}

fn unit_open<T: Real>(name: &str, v: T) -> Result<T> {
    if v > T::zero() && v < T::one() {
        Ok(v)
    } else {
        Err(Error::arg(format!("{name} must lie in (0, 1), got {v}")))
    }
}

impl<T: Real> ShapeSpec<T> {
    /// The polygon behind polygonal kinds, with their default center.
    pub fn polygon(&self) -> Result<Option<PolygonSpec<T>>> {
        let origin = Point::default();
        let p = |x: T, y: T| Point::new(x, y);
        let half = T::lit(0.5);
        Ok(Some(match self {
            ShapeSpec::RegularPolygon { sides, circumradius } => {
                if *sides < 3 {
                    return Err(Error::arg(format!("a regular polygon needs at least 3 sides, got {sides}")));
                }
                let r = positive("circumradius", *circumradius)?;
                let n = T::lit(*sides as f64);
                let offset = -T::FRAC_PI_2() + T::PI() / n;
                let v = (0..*sides)
                    .map(|k| Point::polar(r, offset + T::TAU() * T::lit(k as f64) / n))
                    .collect();
                PolygonSpec::new(v, origin)?
            }
            ShapeSpec::Rectangle { width, height } => {
                let (w, h) = (positive("width", *width)? * half, positive("height", *height)? * half);
                PolygonSpec::new(vec![p(w, -h), p(w, h), p(-w, h), p(-w, -h)], origin)?
            }
            ShapeSpec::Rhombus { diagonal_x, diagonal_y } => {
                let (a, b) = (positive("diagonal_x", *diagonal_x)? * half, positive("diagonal_y", *diagonal_y)? * half);
                let z = T::zero();
                PolygonSpec::new(vec![p(a, z), p(z, b), p(-a, z), p(z, -b)], origin)?
            }
            ShapeSpec::Triangle { vertices, center } => {
                let poly = PolygonSpec::with_centroid(vertices.to_vec())?;
                match center {
                    TriangleCenter::Barycenter => poly,
                    TriangleCenter::Incenter => {
                        let c = PolygonSpec::triangle_incenter(vertices)?;
                        PolygonSpec::new(poly.vertices, c)?
                    }
                }
            }
            ShapeSpec::Polygon { vertices, center } => match center {
                Some(c) => PolygonSpec::new(vertices.clone(), *c)?,
                None => PolygonSpec::with_centroid(vertices.clone())?,
            },
            ShapeSpec::OctagonCe { q } => {
                let q = unit_open("q", *q)?;
                let radii = [T::one(), q, q * q, q, T::one(), q, q * q, q];
                let v = radii
                    .iter()
                    .enumerate()
                    .map(|(k, &r)| Point::polar(r, T::FRAC_PI_4() * T::lit(k as f64)))
                    .collect();
                PolygonSpec::new(v, origin)?
            }
            _ => return Ok(None),
        }))
    }

    /// Builds the normalized polar boundary around the family's default center
    /// (barycenter, incenter for `Triangle { center: Incenter }`, or the
    /// symmetry center of the counterexamples).
    pub fn build(&self) -> Result<PolarBoundary<T>> {
        self.build_with_center(None)
    }

    /// Like [`build`](Self::build) with an explicit polar center, for the
    /// kinds whose boundary is made of lines and circular arcs.
    pub fn build_with_center(&self, center: Option<Point<T>>) -> Result<PolarBoundary<T>> {
        if let Some(mut poly) = self.polygon()? {
            if let Some(c) = center {
                poly.center = c;
            }
            return poly.to_boundary();
        }
        match *self {
            ShapeSpec::Disk { radius } => PolarBoundary::from_curve(
                center.unwrap_or_default(),
                &[CurvePrimitive::Circle {
                    center: Point::default(),
                    radius: positive("radius", radius)?,
                }],
            ),
            ShapeSpec::Ellipse { a, b } => {
                let (a, b) = (positive("a", a)?, positive("b", b)?);
                reject_center(center, "ellipse")?;
                PolarBoundary::new(
                    Point::default(),
                    vec![BoundaryPiece::new(PieceKind::EllipseArc { a, b }, T::zero(), T::TAU())],
                )
            }
            ShapeSpec::CupidsBow { c } => {
                let c = positive("c", c)?;
                reject_center(center, "Cupid's bow")?;
                let low = (-c * T::FRAC_PI_2()).exp();
                let quarter = T::FRAC_PI_2();
                let spiral = |k: usize, amplitude: T, increasing: bool| {
                    BoundaryPiece::new(
                        PieceKind::LogSpiral {
                            amplitude,
                            rate: c,
                            increasing,
                        },
                        quarter * T::lit(k as f64),
                        quarter,
                    )
                };
                PolarBoundary::new(
                    Point::default(),
                    vec![
                        spiral(0, T::one(), false),
                        spiral(1, low, true),
                        spiral(2, T::one(), false),
                        spiral(3, low, true),
                    ],
                )
            }
            ShapeSpec::DoubleStadium { epsilon } => {
                let eps = unit_open("epsilon", epsilon)?;
                PolarBoundary::from_curve(center.unwrap_or_default(), &stadium_curve(eps))
            }
            _ => unreachable!("polygonal kinds handled above"),
        }
    }

    /// Exact constants where they are known.
    pub fn reference_constants(&self) -> ReferenceConstants<T> {
        let one = T::one();
        match *self {
            ShapeSpec::Disk { .. } => ReferenceConstants {
                friedrichs: Some(one),
                beta: Some(T::FRAC_1_SQRT_2()),
                babuska_aziz_lower: None,
            },
            ShapeSpec::Ellipse { a, b } => {
                let ratio = a.max(b) / a.min(b);
                let gamma = ratio * ratio;
                ReferenceConstants {
                    friedrichs: Some(gamma),
                    beta: Some((one + gamma).sqrt().recip()),
                    babuska_aziz_lower: None,
                }
            }
            _ if self.is_square() => ReferenceConstants {
                friedrichs: None,
                beta: None,
                babuska_aziz_lower: Some((T::lit(0.5) - T::FRAC_1_PI()).recip()),
            },
            _ => ReferenceConstants::default(),
        }
    }

    fn is_square(&self) -> bool {
        match *self {
            ShapeSpec::Rectangle { width, height } => width == height,
            ShapeSpec::RegularPolygon { sides, .. } => sides == 4,
            ShapeSpec::Rhombus { diagonal_x, diagonal_y } => diagonal_x == diagonal_y,
            _ => false,
        }
    }

    pub fn family(&self) -> Option<(Family, T)> {
        match *self {
            ShapeSpec::CupidsBow { c } => Some((Family::CupidsBow, c)),
            ShapeSpec::DoubleStadium { epsilon } => Some((Family::DoubleStadium, epsilon)),
            ShapeSpec::OctagonCe { q } => Some((Family::Octagon, q)),
            _ => None,
        }
    }
}

fn reject_center<T: Real>(center: Option<Point<T>>, what: &str) -> Result<()> {
    match center {
        Some(c) if c != Point::default() => Err(Error::arg(format!("{what} is only supported around its symmetry center"))),
        _ => Ok(()),
    }
}

/// Counter-clockwise boundary of the double stadium: ten pieces, four straight
/// and six circular.
fn stadium_curve<T: Real>(eps: T) -> Vec<CurvePrimitive<T>> {
    let one = T::one();
    let s = (one - eps * eps).sqrt();
    let x = s / eps;
    let p = |a: T, b: T| Point::new(a, b);
    let arc = |cx: T, from: Point<T>, to: Point<T>| CurvePrimitive::Arc {
        center: p(cx, T::zero()),
        radius: one,
        from,
        to,
        ccw: true,
    };
    let line = |from, to| CurvePrimitive::Line { from, to };
    vec![
        arc(x, p(x, -one), p(x, one)),
        line(p(x, one), p(s, one)),
        arc(s, p(s, one), p(T::zero(), eps)),
        arc(-s, p(T::zero(), eps), p(-s, one)),
        line(p(-s, one), p(-x, one)),
        arc(-x, p(-x, one), p(-x, -one)),
        line(p(-x, -one), p(-s, -one)),
        arc(-s, p(-s, -one), p(T::zero(), -eps)),
        arc(s, p(T::zero(), -eps), p(s, -one)),
        line(p(s, -one), p(x, -one)),
    ]
}

/// The three counterexample families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    CupidsBow,
    DoubleStadium,
    Octagon,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::CupidsBow, Family::DoubleStadium, Family::Octagon];

    pub fn shape<T: Real>(self, parameter: T) -> ShapeSpec<T> {
        match self {
            Family::CupidsBow => ShapeSpec::CupidsBow { c: parameter },
            Family::DoubleStadium => ShapeSpec::DoubleStadium { epsilon: parameter },
            Family::Octagon => ShapeSpec::OctagonCe { q: parameter },
        }
    }

    /// Whether larger parameters make the passage narrower (`c` grows while
    /// `ε` and `q` shrink).
    pub fn refutes_upward(self) -> bool {
        matches!(self, Family::CupidsBow)
    }

    pub fn parameter_name(self) -> &'static str {
        match self {
            Family::CupidsBow => "c",
            Family::DoubleStadium => "epsilon",
            Family::Octagon => "q",
        }
    }

    fn check<T: Real>(self, parameter: T) -> Result<T> {
        match self {
            Family::CupidsBow => positive("c", parameter),
            Family::DoubleStadium => unit_open("epsilon", parameter),
            Family::Octagon => unit_open("q", parameter),
        }
    }

    /// Closed-form cut through the narrow passage, in native units.
    pub fn cut<T: Real>(self, parameter: T) -> Result<CutSpec<T>> {
        let p = self.check(parameter)?;
        let one = T::one();
        let two = T::lit(2.0);
        let (half_area, width) = match self {
            Family::CupidsBow => {
                let area = (one - (-p * T::PI()).exp()) / (two * p);
                (area, two * (-p * T::FRAC_PI_2()).exp())
            }
            Family::DoubleStadium => (stadium_half_area(p), two * p),
            Family::Octagon => (p * (one + p * p) / T::SQRT_2(), two * p * p),
        };
        CutSpec::planar(half_area, half_area, width)
    }

    /// `sin²(ω(Ω)/2)`, the square of the Horgan-Payne lower bound.
    pub fn claimed_beta_sq<T: Real>(self, parameter: T) -> Result<T> {
        let p = self.check(parameter)?;
        let one = T::one();
        let two = T::lit(2.0);
        Ok(match self {
            Family::CupidsBow => {
                let r = (p * p + one).sqrt();
                (r - p) / (two * r)
            }
            // sin ω = ε, so sin²(ω/2) = (1 − cos ω)/2 = ε²/(2(1 + √(1 − ε²))).
            Family::DoubleStadium => p * p / (two * (one + (one - p * p).sqrt())),
            Family::Octagon => {
                let h = p / T::SQRT_2();
                let omega = h.atan2(one - h);
                let s = (omega / two).sin();
                s * s
            }
        })
    }

    /// Horgan-Payne angle from its closed form.
    pub fn omega<T: Real>(self, parameter: T) -> Result<T> {
        let p = self.check(parameter)?;
        Ok(match self {
            Family::CupidsBow => p.recip().atan(),
            Family::DoubleStadium => p.asin(),
            Family::Octagon => {
                let h = p / T::SQRT_2();
                h.atan2(T::one() - h)
            }
        })
    }

    pub fn refutation_report<T: Real>(self, parameter: T) -> Result<RefutationReport<T>> {
        let claimed = self.claimed_beta_sq(parameter)?;
        let proven = beta_upper_squared(&self.cut(parameter)?)?;
        let margin = refutation_margin(claimed, proven);
        Ok(RefutationReport {
            family: self,
            parameter,
            claimed_beta_sq: claimed,
            proven_upper_beta_sq: proven,
            margin,
            verdict: if margin > T::zero() {
                Verdict::Refuted
            } else {
                Verdict::NotRefuted
            },
        })
    }

    /// Parameter at which the refutation margin changes sign inside `[lo, hi]`,
    /// located by bisection to relative width `rel_tol`.
    pub fn refutation_threshold<T: Real>(self, lo: T, hi: T, rel_tol: T) -> Result<T> {
        let margin = |p: T| self.refutation_report(p).map(|r| r.margin);
        let (mut a, mut b) = (lo.min(hi), lo.max(hi));
        let (ma, mb) = (margin(a)?, margin(b)?);
        if (ma > T::zero()) == (mb > T::zero()) {
            return Err(Error::arg(format!(
                "the refutation margin does not change sign on [{a}, {b}]"
            )));
        }
        let a_refutes = ma > T::zero();
        for _ in 0..200 {
            if b - a <= rel_tol * a.abs().max(b.abs()) {
                break;
            }
            let m = (a + b) * T::lit(0.5);
            if (margin(m)? > T::zero()) == a_refutes {
                a = m;
            } else {
                b = m;
            }
        }
        Ok((a + b) * T::lit(0.5))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::CupidsBow => "cupid",
            Family::DoubleStadium => "stadium",
            Family::Octagon => "octagon",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cupid" | "cupids_bow" => Ok(Family::CupidsBow),
            "stadium" | "double_stadium" => Ok(Family::DoubleStadium),
            "octagon" | "octagon_ce" => Ok(Family::Octagon),
            other => Err(Error::arg(format!("unknown family {other:?} (expected cupid, stadium or octagon)"))),
        }
    }
}

/// `|Ω₊|` of the double stadium: the right stadium minus the circular segment
/// of its inner disk that crosses the cut.
fn stadium_half_area<T: Real>(eps: T) -> T {
    let one = T::one();
    let s = (one - eps * eps).sqrt();
    let stadium = T::lit(2.0) * s * (eps.recip() - one) + T::PI();
    let lens = eps.asin() - eps * s;
    stadium - lens
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Refuted,
    NotRefuted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Refuted => "REFUTED",
            Verdict::NotRefuted => "NOT-REFUTED",
        })
    }
}

/// Claimed lower and proven upper bound for `β²` on one domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RefutationReport<T> {
    pub family: Family,
    pub parameter: T,
    pub claimed_beta_sq: T,
    pub proven_upper_beta_sq: T,
    pub margin: T,
    pub verdict: Verdict,
}
