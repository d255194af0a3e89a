//! Unit distances in the norm whose unit ball is the parabola lens
//! `{(x, y) : (x² − 1)/2 ≤ y ≤ (1 − x²)/2}`.
//!
//! The lower boundary arc is `y = x²/2 − ½`, a translate of the parabola
//! `y = x²/2`. On the grid `(i/n, j/n²)` a difference `(Δi/n, Δj/n²)` has
//! norm 1 iff `|Δi| ≤ n` and `2Δj = ±(Δi² − n²)`, so unit pairs can be
//! counted in integers.

use crate::exec::{self, Exec};
use crate::{Point, Vector2};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum UnitDistanceError {
    #[error("grid size must be at least 1")]
    ZeroSize,
    #[error("integer overflow counting unit pairs for n={0}")]
    Overflow(u64),
    #[error("exponent fit needs at least 3 entries, got {0}")]
    TooFewEntries(usize),
    #[error("exponent fit needs strictly increasing N (entry {0})")]
    NotIncreasing(usize),
    #[error("exponent fit needs positive values (entry {0})")]
    NonPositive(usize),
}

/// The parabola-lens unit ball.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct UnitBall;

impl UnitBall {
    /// Minkowski functional: `|v_y| + |v|₂`.
    ///
    /// On the lower half the ray `λ·(x, (x² − 1)/2)` gives
    /// `λ² + 2v_yλ − v_x² = 0`; the upper half is its reflection.
    pub fn gauge(&self, v: Vector2<f64>) -> f64 {
        v.y.abs() + v.x.hypot(v.y)
    }

    pub fn lower_arc(&self, t: f64) -> Point {
        Point::new(t, (t * t - 1.0) / 2.0)
    }

    pub fn upper_arc(&self, t: f64) -> Point {
        Point::new(t, (1.0 - t * t) / 2.0)
    }

    pub fn on_boundary(&self, v: Vector2<f64>, tol: f64) -> bool {
        (self.gauge(v) - 1.0).abs() <= tol
    }
}

/// The `n × n²` grid `{(i/n, j/n²) : 0 ≤ i < n, 0 ≤ j < n²}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScaledGrid {
    n: u64,
}

impl ScaledGrid {
    pub fn new(n: u64) -> Result<Self, UnitDistanceError> {
        if n == 0 {
            return Err(UnitDistanceError::ZeroSize);
        }
        Ok(ScaledGrid { n })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> Result<u64, UnitDistanceError> {
        self.n
            .checked_pow(3)
            .ok_or(UnitDistanceError::Overflow(self.n))
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid points in `(i, j)` order.
    pub fn points(&self) -> Vec<Point> {
        let n = self.n;
        let (nf, n2f) = (n as f64, (n * n) as f64);
        (0..n)
            .flat_map(|i| (0..n * n).map(move |j| Point::new(i as f64 / nf, j as f64 / n2f)))
            .collect()
    }
}

/// One difference class `(Δi, Δj)` with `Δj > 0`, up to sign, and the number
/// of grid pairs it realises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VectorClass {
    pub di: i64,
    pub dj: i64,
    pub pairs: u64,
}

/// Unit difference classes of `grid`, one representative `(Δi, (n² − Δi²)/2)`
/// per `±` pair.
pub fn unit_vector_classes(grid: &ScaledGrid) -> Result<Vec<VectorClass>, UnitDistanceError> {
    let n = grid.n;
    let overflow = || UnitDistanceError::Overflow(n);
    let n_i = i64::try_from(n).map_err(|_| overflow())?;
    let n2 = n_i.checked_mul(n_i).ok_or_else(overflow)?;
    let mut classes = Vec::new();
    // Δi ≡ n (mod 2) keeps n² − Δi² even; |Δi| = n gives Δj = 0, outside
    // the grid's reach.
    for di in (-(n_i - 1)..n_i).filter(|d| (d - n_i).rem_euclid(2) == 0) {
        let dj = (n2 - di * di) / 2;
        let pairs = ((n_i - di.abs()) as u64)
            .checked_mul((n2 - dj) as u64)
            .ok_or_else(overflow)?;
        classes.push(VectorClass { di, dj, pairs });
    }
    Ok(classes)
}

/// Unordered unit pairs of `grid`, in exact integer arithmetic.
pub fn unit_pairs_exact(grid: &ScaledGrid) -> Result<u64, UnitDistanceError> {
    unit_vector_classes(grid)?
        .iter()
        .try_fold(0u64, |acc, c| acc.checked_add(c.pairs))
        .ok_or(UnitDistanceError::Overflow(grid.n))
}

/// Unordered pairs with `|gauge(q − p) − 1| ≤ tol`, by testing all pairs.
pub fn unit_pairs_bruteforce(points: &[Point], ball: &UnitBall, tol: f64, exec: Exec) -> u64 {
    exec::sum_range(exec, points.len(), |i| {
        points[i + 1..]
            .iter()
            .filter(|q| ball.on_boundary(*q - points[i], tol))
            .count() as u64
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCheck {
    pub unordered_pairs: u64,
    /// `Σ_p #{q ≠ p : q ∈ p + ∂B}`
    pub incidences: u64,
}

impl IdentityCheck {
    pub fn pass(&self) -> bool {
        self.unordered_pairs.checked_mul(2) == Some(self.incidences)
    }
}

/// Counts unit pairs and point/translated-boundary incidences independently.
pub fn translate_incidence_identity(
    points: &[Point],
    ball: &UnitBall,
    tol: f64,
    exec: Exec,
) -> IdentityCheck {
    let unordered_pairs = unit_pairs_bruteforce(points, ball, tol, exec);
    let incidences = exec::sum_u64(exec, points, |p| {
        points
            .iter()
            .filter(|q| *q != p && ball.on_boundary(*q - p, tol))
            .count() as u64
    });
    IdentityCheck {
        unordered_pairs,
        incidences,
    }
}

/// Least-squares slope of `ln(count)` against `ln(N)`.
pub fn exponent_fit(counts: &[(u64, u64)]) -> Result<f64, UnitDistanceError> {
    if counts.len() < 3 {
        return Err(UnitDistanceError::TooFewEntries(counts.len()));
    }
    for (k, &(n, c)) in counts.iter().enumerate() {
        if n == 0 || c == 0 {
            return Err(UnitDistanceError::NonPositive(k));
        }
        if k > 0 && n <= counts[k - 1].0 {
            return Err(UnitDistanceError::NotIncreasing(k));
        }
    }
    let pts: Vec<(f64, f64)> = counts
        .iter()
        .map(|&(n, c)| ((n as f64).ln(), (c as f64).ln()))
        .collect();
    let len = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}
