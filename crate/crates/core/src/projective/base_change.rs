//! Base change putting a pgl-commuting pair into `aff(2, R)`.
//!
//! Both matrices preserve a common plane `V ⊂ R³`; taking a basis whose first
//! two vectors span `V` zeroes the (3,1) and (3,2) entries of both.

use super::eigen::{canonical_sign, smallest_right_singular, spectrum, Spectrum};
use super::{commutator, max_abs, Mat3, ProjectiveError};
use nalgebra::Vector3;

const SCALAR_TOL: f64 = 1e-10;
const COMMUTE_TOL: f64 = 1e-8;
const NEAR_DOUBLE: f64 = 1e-4;

/// Frobenius norm of `[a, b] - (tr[a, b] / 3)·I`, the commutator of the
/// images in pgl(3).
pub fn pgl_commutator_norm(a: &Mat3, b: &Mat3) -> f64 {
    let c = commutator(a, b);
    (c - Mat3::identity() * (c.trace() / 3.0)).norm()
}

/// The larger of |(3,1)| and |(3,2)| of `p⁻¹ m p`, or `∞` for singular `p`.
pub fn aff_residual(p: &Mat3, m: &Mat3) -> f64 {
    match p.try_inverse() {
        Some(inv) => {
            let c = inv * m * p;
            c[(2, 0)].abs().max(c[(2, 1)].abs())
        }
        None => f64::INFINITY,
    }
}

/// Orthogonal `p` such that `p⁻¹·a·p` and `p⁻¹·b·p` both have zero (3,1) and
/// (3,2) entries.
///
/// The invariant plane comes from the first non-scalar matrix of the pair:
/// the real span of a complex eigenpair, the span of the eigenspaces of the
/// two smallest real eigenvalues (or of a nearly coincident pair), the generalized eigenspace of a double
/// eigenvalue, or for a triple eigenvalue `λ` the two-dimensional one of
/// `ker (A − λI)` and `ker (A − λI)²`. Two scalar matrices keep the
/// coordinate plane of `e₁, e₂`.
pub fn commuting_to_aff(a: &Mat3, b: &Mat3) -> Result<Mat3, ProjectiveError> {
    let scale = max_abs(a).max(max_abs(b));
    let norm = pgl_commutator_norm(a, b);
    if !(norm <= COMMUTE_TOL * scale * scale) {
        return Err(ProjectiveError::NonCommuting { norm });
    }
    let plane = invariant_plane(a)
        .or_else(|| invariant_plane(b))
        .unwrap_or([Vector3::x(), Vector3::y()]);
    Ok(basis_from_plane(plane))
}

fn invariant_plane(m: &Mat3) -> Option<[Vector3<f64>; 2]> {
    let (kind, scale) = spectrum(m);
    let mn = m / scale;
    let id = Mat3::identity();
    let mean = mn.trace() / 3.0;
    if max_abs(&(mn - id * mean)) <= SCALAR_TOL {
        return None;
    }
    let kernel_source = match kind {
        Spectrum::Complex { re, im, .. } => {
            let s = mn - id * re;
            s * s + id * (im * im)
        }
        Spectrum::Distinct(r) => {
            // The lower pair, unless the upper pair is a near-double that the
            // cluster tolerance missed.
            let (i, j) = if r[2] - r[1] < NEAR_DOUBLE && r[2] - r[1] < r[1] - r[0] {
                (1, 2)
            } else {
                (0, 1)
            };
            (mn - id * r[i]) * (mn - id * r[j])
        }
        Spectrum::Double { double, .. } => {
            let s = mn - id * double;
            s * s
        }
        Spectrum::Triple(lambda) => {
            let n = mn - id * lambda;
            let n2 = n * n;
            if n2.norm() <= 1e-8 * n.norm_squared() {
                n
            } else {
                n2
            }
        }
    };
    let v = smallest_right_singular(&kernel_source, 2);
    Some([v[0], v[1]])
}

/// Orthonormal basis `(v₁, v₂, n)` with `v₁, v₂` spanning the plane.
///
/// `n` is the canonical-sign unit normal and `v₁` the normalized projection of
/// the standard basis vector closest to the plane (lowest index on ties), so a
/// coordinate-aligned `e₁e₂` plane yields the identity.
fn basis_from_plane(plane: [Vector3<f64>; 2]) -> Mat3 {
    let n = canonical_sign(plane[0].cross(&plane[1]).normalize());
    let mut k = 0;
    for i in 1..3 {
        if n[i].abs() < n[k].abs() - 1e-12 {
            k = i;
        }
    }
    let e = Vector3::ith(k, 1.0);
    let v1 = (e - n * n.dot(&e)).normalize();
    let v2 = n.cross(&v1);
    Mat3::from_columns(&[v1, v2, n])
}
