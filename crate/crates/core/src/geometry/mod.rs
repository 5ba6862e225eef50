//! Polar description of star-shaped plane domains.
//!
//! A domain is stored as the radial function `r = f(θ)` of its boundary,
//! seen from a chosen center and split into analytic pieces. Every global
//! quantity (Horgan-Payne angle, largest star-center disk, area) is derived
//! from the piece formulas for `f` and `f'`.

mod boundary;
mod piece;
mod point;
mod polygon;
pub(crate) mod sweep;

pub use boundary::{CurvePrimitive, Derivative, PolarBoundary};
pub use piece::{BoundaryPiece, PieceKind};
pub use point::Point;
pub use polygon::{PolygonSide, PolygonSpec};
pub use sweep::{Extremum, SweepOptions};
