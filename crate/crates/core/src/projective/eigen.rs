//! Closed-form eigen-analysis of real 3×3 matrices.
//!
//! Eigenvalues come from the characteristic cubic (Cardano, trigonometric
//! branch for three real roots). Eigenvectors and invariant planes are
//! read off the smallest right singular vectors of shifted matrices.

use super::{max_abs, Mat3};
use nalgebra::Vector3;
use std::f64::consts::PI;

/// Roots closer than this (relative to the largest matrix entry) are merged.
const CLUSTER_TOL: f64 = 1e-7;
/// Depressed-cubic coefficient bounds (normalized matrix) for a triple root.
const TRIPLE_P_TOL: f64 = 1e-12;
const TRIPLE_Q_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct RealEigen {
    pub value: f64,
    /// Algebraic multiplicity.
    pub multiplicity: usize,
    /// Unit eigenvector; largest-magnitude component positive.
    pub vector: Vector3<f64>,
}

/// A conjugate pair `re ± i·im` (with `im > 0`) and the real and imaginary
/// parts of an eigenvector for `re + i·im`, jointly of unit length.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexEigenPair {
    pub re: f64,
    pub im: f64,
    pub vector_re: Vector3<f64>,
    pub vector_im: Vector3<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigen3 {
    /// Distinct real eigenvalues in ascending order.
    pub real: Vec<RealEigen>,
    pub complex: Option<ComplexEigenPair>,
}

/// Root structure of the characteristic polynomial of a normalized matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Spectrum {
    /// Three distinct real roots, ascending.
    Distinct([f64; 3]),
    Double {
        double: f64,
        simple: f64,
    },
    Triple(f64),
    Complex {
        real: f64,
        re: f64,
        im: f64,
    },
}

/// Spectrum of `m / scale`, where `scale` is its largest absolute entry.
pub(crate) fn spectrum(m: &Mat3) -> (Spectrum, f64) {
    let scale = max_abs(m);
    if scale == 0.0 {
        return (Spectrum::Triple(0.0), 1.0);
    }
    (normalized_spectrum(&(m / scale)), scale)
}

fn normalized_spectrum(m: &Mat3) -> Spectrum {
    let tr = m.trace();
    let minors = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)] + m[(0, 0)] * m[(2, 2)]
        - m[(0, 2)] * m[(2, 0)]
        + m[(1, 1)] * m[(2, 2)]
        - m[(1, 2)] * m[(2, 1)];
    let det = m.determinant();
    // λ³ + bλ² + cλ + d with λ = x + tr/3 gives x³ + px + q.
    let (b, c, d) = (-tr, minors, -det);
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let shift = tr / 3.0;

    if p.abs() <= TRIPLE_P_TOL && q.abs() <= TRIPLE_Q_TOL {
        return Spectrum::Triple(shift);
    }

    let disc = q * q / 4.0 + p * p * p / 27.0;
    if disc > 0.0 {
        // One real root; choose the cube root without cancellation.
        let sq = disc.sqrt();
        let u = (-q / 2.0 - q.signum() * sq).cbrt();
        let r = if u == 0.0 { 0.0 } else { u - p / (3.0 * u) };
        let re = -r / 2.0;
        let im = (p + 0.75 * r * r).max(0.0).sqrt();
        if im <= CLUSTER_TOL {
            return Spectrum::Double {
                double: re + shift,
                simple: r + shift,
            };
        }
        return Spectrum::Complex {
            real: r + shift,
            re: re + shift,
            im,
        };
    }

    let amp = 2.0 * (-p / 3.0).sqrt();
    let arg = (3.0 * q / (p * amp)).clamp(-1.0, 1.0);
    let theta = arg.acos() / 3.0;
    let mut x = [0, 1, 2].map(|k| amp * (theta - 2.0 * PI * k as f64 / 3.0).cos());
    x.sort_by(|a, b| a.total_cmp(b));
    let low = x[1] - x[0] <= CLUSTER_TOL;
    let high = x[2] - x[1] <= CLUSTER_TOL;
    match (low, high) {
        (true, true) => Spectrum::Triple(shift),
        // Depressed roots sum to zero, so the pair sits at -simple/2.
        (true, false) => Spectrum::Double {
            double: -x[2] / 2.0 + shift,
            simple: x[2] + shift,
        },
        (false, true) => Spectrum::Double {
            double: -x[0] / 2.0 + shift,
            simple: x[0] + shift,
        },
        (false, false) => Spectrum::Distinct(x.map(|v| v + shift)),
    }
}

/// Right singular vectors for the `k` smallest singular values, ascending.
pub(crate) fn smallest_right_singular(m: &Mat3, k: usize) -> Vec<Vector3<f64>> {
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]));
    order[..k]
        .iter()
        .map(|&i| v_t.row(i).transpose().normalize())
        .collect()
}

/// Flips `v` so that its largest-magnitude component is positive.
pub(crate) fn canonical_sign(v: Vector3<f64>) -> Vector3<f64> {
    let mut idx = 0;
    for i in 1..3 {
        if v[i].abs() > v[idx].abs() + 1e-12 {
            idx = i;
        }
    }
    if v[idx] < 0.0 {
        -v
    } else {
        v
    }
}

fn null_vector(m: &Mat3, lambda: f64) -> Vector3<f64> {
    let shifted = m - Mat3::identity() * lambda;
    canonical_sign(smallest_right_singular(&shifted, 1)[0])
}

/// Real eigen-decomposition with an optional conjugate complex pair.
pub fn eigen_real_3x3(m: &Mat3) -> Eigen3 {
    let (kind, scale) = spectrum(m);
    let mn = m / scale;
    let real_entry = |value: f64, multiplicity: usize| RealEigen {
        value: value * scale,
        multiplicity,
        vector: null_vector(&mn, value),
    };
    match kind {
        Spectrum::Distinct(r) => Eigen3 {
            real: r.iter().map(|&v| real_entry(v, 1)).collect(),
            complex: None,
        },
        Spectrum::Double { double, simple } => {
            let mut real = vec![real_entry(double, 2), real_entry(simple, 1)];
            real.sort_by(|a, b| a.value.total_cmp(&b.value));
            Eigen3 {
                real,
                complex: None,
            }
        }
        Spectrum::Triple(v) => Eigen3 {
            real: vec![real_entry(v, 3)],
            complex: None,
        },
        Spectrum::Complex { real, re, im } => {
            let id = Mat3::identity();
            let shifted = mn - id * re;
            let q = shifted * shifted + id * (im * im);
            let u = smallest_right_singular(&q, 1)[0];
            // M(u + iv) = (re + i·im)(u + iv)  ⇒  v = (re·u − M u) / im.
            let v = (u * re - mn * u) / im;
            let norm = (u.norm_squared() + v.norm_squared()).sqrt();
            Eigen3 {
                real: vec![real_entry(real, 1)],
                complex: Some(ComplexEigenPair {
                    re: re * scale,
                    im: im * scale,
                    vector_re: u / norm,
                    vector_im: v / norm,
                }),
            }
        }
    }
}
