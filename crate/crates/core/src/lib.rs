//! Bounds for the inf-sup constant `β(Ω)`, the Babuška-Aziz constant `C(Ω)`
//! and the Friedrichs constant `Γ(Ω)` of bounded plane domains that are
//! star-shaped with respect to a point.
//!
//! A domain is described by the radial function of its boundary
//! ([`geometry::PolarBoundary`]). From it, [`bounds`] computes
//!
//! * the proven upper bound `M(Ω) ≥ Γ(Ω)`, hence `β ≥ (1 + M)^{-1/2}`;
//! * the Horgan-Payne quantity `m(Ω) ≤ M(Ω)`, reported as a claim only;
//! * the cruder radii-ratio bound `M_τ ≥ M(Ω)`;
//!
//! and [`cutbound`] gives upper bounds on `β` from a short straight cut.
//! [`shapes`] builds the classical test domains and the three families on
//! which the Horgan-Payne claim fails.
//!
//! ```
//! use infsup::{BoundReport64, ShapeSpec};
//!
//! let square = ShapeSpec::Rectangle { width: 1.0, height: 1.0 }.build().unwrap();
//! let report = BoundReport64::compute(&square, &Default::default()).unwrap();
//! assert!((report.big_m.value - (3.0 + 8f64.sqrt())).abs() < 1e-8);
//! ```
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); documented
//! tolerances refer to `f64`.

// `!(x > 0)` is how inputs reject NaN along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cutbound;
pub mod error;
pub mod geometry;
pub mod optimize;
pub mod quadrature;
pub mod report;
pub mod scalar;
pub mod shapes;

pub use bounds::{BoundOptions, Constant, Constants, InfSup, RadiiRatio};
pub use cutbound::CutSpec;
pub use error::{Error, Result};
pub use geometry::{BoundaryPiece, CurvePrimitive, PieceKind, Point, PolarBoundary, PolygonSpec, SweepOptions};
pub use report::{BoundReport, Provenance, ReportOptions, Tagged};
pub use scalar::Real;
pub use shapes::{Family, ReferenceConstants, RefutationReport, ShapeSpec, TriangleCenter, Verdict};

pub type Boundary64 = PolarBoundary<f64>;
pub type Polygon64 = PolygonSpec<f64>;
pub type Shape64 = ShapeSpec<f64>;
pub type BoundReport64 = BoundReport<f64>;
pub type Cut64 = CutSpec<f64>;

pub type Boundary32 = PolarBoundary<f32>;
pub type Polygon32 = PolygonSpec<f32>;
pub type Shape32 = ShapeSpec<f32>;
pub type BoundReport32 = BoundReport<f32>;
