//! Projective-plane machinery: 3×3 matrices, their scalar quotient, cross
//! ratios, real eigen-analysis and the invariant-plane base change.

mod base_change;
mod commuting;
mod cross_ratio;
mod eigen;
mod homography;

pub use base_change::{aff_residual, commuting_to_aff, pgl_commutator_norm};
pub use commuting::{sample_commuting_pairs, CommutingPair, PairKind};
pub use cross_ratio::{
    cross_ratio, cross_ratio_points, verify_cross_ratio_preservation, CollinearQuad,
};
pub use eigen::{eigen_real_3x3, ComplexEigenPair, Eigen3, RealEigen};
pub use homography::projective_from_correspondences;

use crate::Point;
use nalgebra::Vector3;
use thiserror::Error;

/// A real 3×3 matrix. `Mat3::new` takes entries in row-major order.
pub type Mat3 = nalgebra::Matrix3<f64>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProjectiveError {
    #[error("degenerate quadruple: a cross-ratio denominator vanishes")]
    DegenerateQuad,
    #[error("points are not collinear (off-line distance {distance:e}, tolerance {tol:e})")]
    NonCollinear { distance: f64, tol: f64 },
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("matrix is singular (|det| = {det:e})")]
    Singular { det: f64 },
    #[error("correspondences are degenerate: points {0:?} are collinear")]
    DegenerateConfiguration([usize; 3]),
    #[error("matrices do not commute in pgl(3): adjusted commutator norm {norm:e}")]
    NonCommuting { norm: f64 },
    #[error("map is undefined at quad {quad}, point {point}")]
    MapUndefined { quad: usize, point: usize },
}

/// Largest absolute entry.
pub fn max_abs(m: &Mat3) -> f64 {
    m.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
}

pub fn is_finite(m: &Mat3) -> bool {
    m.iter().all(|x| x.is_finite())
}

/// Invertibility with the relative threshold |det| > 1e-12 · (max |entry|)³.
pub fn is_invertible(m: &Mat3) -> bool {
    let s = max_abs(m);
    s > 0.0 && m.determinant().abs() > 1e-12 * s * s * s
}

pub fn commutator(a: &Mat3, b: &Mat3) -> Mat3 {
    a * b - b * a
}

/// Homogeneous lift `(x, y, 1)`.
pub fn lift(p: Point) -> Vector3<f64> {
    Vector3::new(p.x, p.y, 1.0)
}

/// An element of PGL(3, R): an invertible matrix up to a non-zero scalar.
///
/// The stored representative has unit Frobenius norm and its first entry
/// (row-major) with absolute value above 1e-12 is positive. Equality compares
/// representatives entrywise within 1e-10.
#[derive(Debug, Clone, Copy)]
pub struct ProjMat {
    rep: Mat3,
}

impl ProjMat {
    pub const EQ_TOL: f64 = 1e-10;

    pub fn new(m: Mat3) -> Result<Self, ProjectiveError> {
        if !is_finite(&m) {
            return Err(ProjectiveError::NonFinite);
        }
        if !is_invertible(&m) {
            return Err(ProjectiveError::Singular {
                det: m.determinant(),
            });
        }
        let mut rep = m / m.norm();
        let lead = (0..3)
            .flat_map(|r| (0..3).map(move |c| (r, c)))
            .map(|(r, c)| rep[(r, c)])
            .find(|x| x.abs() > 1e-12)
            .unwrap_or(1.0);
        if lead < 0.0 {
            rep = -rep;
        }
        Ok(ProjMat { rep })
    }

    pub fn identity() -> Self {
        ProjMat::new(Mat3::identity()).expect("identity is invertible")
    }

    pub fn rep(&self) -> &Mat3 {
        &self.rep
    }

    /// Largest entrywise difference between canonical representatives.
    pub fn distance(&self, other: &ProjMat) -> f64 {
        max_abs(&(self.rep - other.rep))
    }

    /// Applies the map to an affine point; `None` when the image is at infinity.
    pub fn apply(&self, p: Point) -> Option<Point> {
        let h = self.rep * lift(p);
        if h.z.abs() <= 1e-300 {
            return None;
        }
        Some(Point::new(h.x / h.z, h.y / h.z))
    }

    pub fn compose(&self, other: &ProjMat) -> ProjMat {
        ProjMat::new(self.rep * other.rep).expect("product of invertible matrices")
    }
}

impl PartialEq for ProjMat {
    fn eq(&self, other: &Self) -> bool {
        self.distance(other) <= Self::EQ_TOL
    }
}
