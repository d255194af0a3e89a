//! The six affine actions of the translation group `T ≅ R²` on the plane.
//!
//! Each action is a homomorphism `(s, t) ↦ A(s, t) ∈ Aff(2, R)`. The
//! conjugating map φ is recovered from the orbit of the origin,
//! `φ⁻¹(s, t) = A(s, t)·(0, 0, 1)ᵀ`, and inverted in closed form, so that
//! `φ⁻¹(φ(p) + (s, t)) = A*(s, t)·(p, 1)ᵀ` on φ's domain.
//!
//! For the rotation case the linear part is `eˢ·R(−t)`; with that sign the
//! matrices compose as a homomorphism and are conjugate through
//! `φ(x, y) = ln(1 − x + iy)`.

use crate::exec::{self, Exec};
use crate::projective::{max_abs, Mat3};
use crate::sampling::{self, SampleRng};
use crate::Point;
use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionCase {
    A1,
    A2,
    A3Rotation,
    A4Parabola,
    A5Identity,
    A6Log,
}

impl ActionCase {
    pub const ALL: [ActionCase; 6] = [
        ActionCase::A1,
        ActionCase::A2,
        ActionCase::A3Rotation,
        ActionCase::A4Parabola,
        ActionCase::A5Identity,
        ActionCase::A6Log,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ActionCase::A1 => "A1",
            ActionCase::A2 => "A2",
            ActionCase::A3Rotation => "A3",
            ActionCase::A4Parabola => "A4",
            ActionCase::A5Identity => "A5",
            ActionCase::A6Log => "A6",
        }
    }
}

impl fmt::Display for ActionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ActionCase {
    type Err = ActionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_uppercase();
        ActionCase::ALL
            .into_iter()
            .find(|c| c.label() == key)
            .ok_or_else(|| ActionError::UnknownCase(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ActionError {
    #[error("unknown action case {0:?} (expected A1..A6)")]
    UnknownCase(String),
    #[error("{case}: point ({x}, {y}) is outside the domain of φ")]
    OutsideDomain { case: ActionCase, x: f64, y: f64 },
    #[error("{case}: point ({x}, {y}) is outside the domain of φ⁻¹")]
    OutsideInverseDomain { case: ActionCase, x: f64, y: f64 },
    #[error("{case}: sample {index} is outside the valid range: {reason}")]
    SampleOutOfRange {
        case: ActionCase,
        index: usize,
        reason: Box<ActionError>,
    },
}

/// Translation parameters `(s, t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslationVec {
    pub s: f64,
    pub t: f64,
}

impl TranslationVec {
    pub fn new(s: f64, t: f64) -> Self {
        TranslationVec { s, t }
    }
}

impl std::ops::Add for TranslationVec {
    type Output = TranslationVec;

    fn add(self, o: TranslationVec) -> TranslationVec {
        TranslationVec::new(self.s + o.s, self.t + o.t)
    }
}

/// `A(s, t)`; the bottom row is always `(0, 0, 1)`.
pub fn action_matrix(case: ActionCase, v: TranslationVec) -> Mat3 {
    let TranslationVec { s, t } = v;
    match case {
        ActionCase::A1 => {
            let es = s.exp();
            let em1 = t.exp_m1();
            Mat3::new(
                es,
                0.0,
                s.exp_m1(),
                es * em1,
                es * t.exp(),
                es * em1,
                0.0,
                0.0,
                1.0,
            )
        }
        ActionCase::A2 => {
            let es = s.exp();
            Mat3::new(es, 0.0, s.exp_m1(), es * t, es, es * t, 0.0, 0.0, 1.0)
        }
        ActionCase::A3Rotation => {
            let es = s.exp();
            let (sin, cos) = t.sin_cos();
            Mat3::new(
                es * cos,
                es * sin,
                1.0 - es * cos,
                -es * sin,
                es * cos,
                es * sin,
                0.0,
                0.0,
                1.0,
            )
        }
        ActionCase::A4Parabola => Mat3::new(1.0, 0.0, s, s, 1.0, t + s * s / 2.0, 0.0, 0.0, 1.0),
        ActionCase::A5Identity => Mat3::new(1.0, 0.0, s, 0.0, 1.0, t, 0.0, 0.0, 1.0),
        ActionCase::A6Log => {
            let es = s.exp();
            Mat3::new(es, 0.0, s.exp_m1(), 0.0, 1.0, t, 0.0, 0.0, 1.0)
        }
    }
}

/// First two rows of `A(s, t)` applied to `(x, y, 1)`.
pub fn action_apply(case: ActionCase, v: TranslationVec, p: Point) -> Point {
    let m = action_matrix(case, v);
    Point::new(
        m[(0, 0)] * p.x + m[(0, 1)] * p.y + m[(0, 2)],
        m[(1, 0)] * p.x + m[(1, 1)] * p.y + m[(1, 2)],
    )
}

/// `(∂A/∂s, ∂A/∂t)` at the origin, in closed form.
pub fn generators(case: ActionCase) -> (Mat3, Mat3) {
    #[rustfmt::skip]
    let (xs, xt) = match case {
        ActionCase::A1 => (
            Mat3::new(1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0),
            Mat3::new(0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0),
        ),
        ActionCase::A2 => (
            Mat3::new(1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0),
            Mat3::new(0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0),
        ),
        ActionCase::A3Rotation => (
            Mat3::new(1.0, 0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0),
            Mat3::new(0.0, 1.0, 0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0),
        ),
        ActionCase::A4Parabola => (
            Mat3::new(0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0),
            Mat3::new(0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0),
        ),
        ActionCase::A5Identity => (
            Mat3::new(0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
            Mat3::new(0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0),
        ),
        ActionCase::A6Log => (
            Mat3::new(1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
            Mat3::new(0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0),
        ),
    };
    (xs, xt)
}

/// `φ⁻¹(s, t)`: the first two entries of the last column of `A(s, t)`.
pub fn phi_inverse_from_action(case: ActionCase, v: TranslationVec) -> Point {
    action_apply(case, v, Point::origin())
}

/// The conjugating diffeomorphism φ of an action and its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarMap {
    case: ActionCase,
}

/// Builds φ for `case` by inverting the origin orbit.
pub fn build_phi(case: ActionCase) -> PlanarMap {
    PlanarMap { case }
}

impl PlanarMap {
    pub fn case(&self) -> ActionCase {
        self.case
    }

    pub fn in_domain(&self, p: Point) -> bool {
        let finite = p.x.is_finite() && p.y.is_finite();
        finite
            && match self.case {
                ActionCase::A1 => p.x > -1.0 && 1.0 + p.y / (p.x + 1.0) > 0.0,
                ActionCase::A2 | ActionCase::A6Log => p.x > -1.0,
                ActionCase::A3Rotation => p.x < 1.0,
                ActionCase::A4Parabola | ActionCase::A5Identity => true,
            }
    }

    /// Rotation case: the principal arctan branch, `|t| < π/2`.
    pub fn in_inverse_domain(&self, q: Point) -> bool {
        let finite = q.x.is_finite() && q.y.is_finite();
        finite
            && match self.case {
                ActionCase::A3Rotation => q.y.abs() < FRAC_PI_2,
                _ => true,
            }
    }

    pub fn forward(&self, p: Point) -> Result<Point, ActionError> {
        if !self.in_domain(p) {
            return Err(ActionError::OutsideDomain {
                case: self.case,
                x: p.x,
                y: p.y,
            });
        }
        let (x, y) = (p.x, p.y);
        Ok(match self.case {
            ActionCase::A1 => Point::new(x.ln_1p(), (y / (x + 1.0)).ln_1p()),
            ActionCase::A2 => Point::new(x.ln_1p(), y / (x + 1.0)),
            ActionCase::A3Rotation => {
                let u = 1.0 - x;
                Point::new(0.5 * (u * u + y * y).ln(), (y / u).atan())
            }
            ActionCase::A4Parabola => Point::new(x, y - x * x / 2.0),
            ActionCase::A5Identity => p,
            ActionCase::A6Log => Point::new(x.ln_1p(), y),
        })
    }

    pub fn inverse(&self, q: Point) -> Result<Point, ActionError> {
        if !self.in_inverse_domain(q) {
            return Err(ActionError::OutsideInverseDomain {
                case: self.case,
                x: q.x,
                y: q.y,
            });
        }
        Ok(phi_inverse_from_action(
            self.case,
            TranslationVec::new(q.x, q.y),
        ))
    }
}

/// Result of a residual sweep: the largest residual and where it occurred.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepReport {
    pub max_residual: f64,
    /// Index of the first sample attaining the maximum; `None` when empty.
    pub worst: Option<usize>,
    pub samples: usize,
}

impl SweepReport {
    fn from_residuals(residuals: &[f64]) -> Self {
        let mut worst = None;
        let mut max = 0.0;
        for (i, &r) in residuals.iter().enumerate() {
            if worst.is_none() || r > max || r.is_nan() {
                max = r;
                worst = Some(i);
                if r.is_nan() {
                    break;
                }
            }
        }
        SweepReport {
            max_residual: max,
            worst,
            samples: residuals.len(),
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_residual <= tol
    }
}

/// Sweeps `‖φ⁻¹(φ(p) + v) − A*(v)·(p, 1)ᵀ‖` over `samples`.
///
/// Every sample must have `p` in φ's domain and `φ(p) + v` in φ⁻¹'s domain
/// (for the rotation case that keeps all angles inside `(−π/2, π/2)`);
/// the first violating sample is reported as an error.
pub fn verify_conjugation(
    case: ActionCase,
    samples: &[(Point, TranslationVec)],
    exec: Exec,
) -> Result<SweepReport, ActionError> {
    let phi = build_phi(case);
    let residuals: Vec<Result<f64, ActionError>> = exec::map_collect(exec, samples, |&(p, v)| {
        let q = phi.forward(p)?;
        let back = phi.inverse(Point::new(q.x + v.s, q.y + v.t))?;
        Ok((back - action_apply(case, v, p)).norm())
    });
    let mut values = Vec::with_capacity(residuals.len());
    for (index, r) in residuals.into_iter().enumerate() {
        match r {
            Ok(v) => values.push(v),
            Err(reason) => {
                return Err(ActionError::SampleOutOfRange {
                    case,
                    index,
                    reason: Box::new(reason),
                })
            }
        }
    }
    Ok(SweepReport::from_residuals(&values))
}

/// Sweeps the relative homomorphism defect
/// `‖A(v)A(w) − A(v + w)‖_F / scale`, with `scale` the largest absolute entry
/// among the three matrices (at least 1).
pub fn verify_homomorphism(
    case: ActionCase,
    samples: &[(TranslationVec, TranslationVec)],
    exec: Exec,
) -> SweepReport {
    let residuals = exec::map_collect(exec, samples, |&(v, w)| {
        let (av, aw, avw) = (
            action_matrix(case, v),
            action_matrix(case, w),
            action_matrix(case, v + w),
        );
        let scale = max_abs(&av).max(max_abs(&aw)).max(max_abs(&avw)).max(1.0);
        (av * aw - avw).norm() / scale
    });
    SweepReport::from_residuals(&residuals)
}

/// Frobenius norm of the trace-adjusted commutator of the two generators.
pub fn generator_commutator_norm(case: ActionCase) -> f64 {
    let (xs, xt) = generators(case);
    crate::projective::pgl_commutator_norm(&xs, &xt)
}

/// `count` seeded pairs `(v, w)` uniform in `[−2, 2]⁴`.
pub fn sample_homomorphism(
    rng: &mut SampleRng,
    count: usize,
) -> Vec<(TranslationVec, TranslationVec)> {
    (0..count)
        .map(|_| {
            let mut draw = || sampling::uniform(rng, -2.0, 2.0);
            let v = TranslationVec::new(draw(), draw());
            let w = TranslationVec::new(draw(), draw());
            (v, w)
        })
        .collect()
}

/// `count` seeded conjugation samples valid for `case`.
///
/// Points are drawn from `(−0.5, 0.5)²` and translations from `(−0.5, 0.5)²`;
/// draws that leave φ's domain or φ⁻¹'s domain are redrawn.
pub fn sample_conjugation(
    case: ActionCase,
    rng: &mut SampleRng,
    count: usize,
) -> Vec<(Point, TranslationVec)> {
    let phi = build_phi(case);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = Point::new(
            sampling::uniform(rng, -0.5, 0.5),
            sampling::uniform(rng, -0.5, 0.5),
        );
        let v = TranslationVec::new(
            sampling::uniform(rng, -0.5, 0.5),
            sampling::uniform(rng, -0.5, 0.5),
        );
        let Ok(q) = phi.forward(p) else { continue };
        if phi.in_inverse_domain(Point::new(q.x + v.s, q.y + v.t)) {
            out.push((p, v));
        }
    }
    out
}
