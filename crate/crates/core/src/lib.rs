//! Planar maps that send lines to translates of a single curve.
//!
//! The crate is organised bottom-up:
//!
//! - [`projective`]: 3×3 matrix algebra, cross-ratios, closed-form real
//!   eigen-analysis, projective fitting from four correspondences and the
//!   base change that puts a commuting pair into `aff(2, R)`.
//! - [`actions`]: the six affine actions of the translation group on the
//!   plane, their generators and the recovered conjugating maps φ.
//! - [`curves`]: the five line-to-curve-translate maps, the four base curves
//!   and closed-form translate offsets.
//! - [`arrangements`]: Cartesian-product point/line arrangements, exact
//!   incidence counting and mapping through the curve maps.
//! - [`unit_distance`]: the parabola-lens norm and exact unit-distance counts
//!   on scaled grids.
//! - [`io`]: CSV and SVG formats shared with the command-line tool.
//!
//! Counting and verification sweeps run on rayon when the `parallel` feature
//! is enabled (the default); see [`exec`].

// `!(x <= tol)` style comparisons are used on purpose so that NaN fails.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod actions;
pub mod arrangements;
pub mod curves;
pub mod exec;
pub mod io;
pub mod projective;
pub mod sampling;
pub mod unit_distance;

pub use nalgebra::{Point2, Vector2, Vector3};

/// A point of the plane.
pub type Point = Point2<f64>;

pub use actions::{ActionCase, PlanarMap, TranslationVec};
pub use arrangements::{IncidenceReport, IntArrangement, MappedArrangement};
pub use curves::{CurveFamily, CurveTranslate, Line, MapId};

pub use exec::Exec;
pub use projective::{CollinearQuad, Mat3, ProjMat};
pub use unit_distance::{ScaledGrid, UnitBall};
