//! Integer point/line arrangements, exact incidence counting, and the
//! point/curve arrangements obtained by pushing them through a curve map.

use crate::curves::{self, CurveError, LineImage, MapId};
use crate::exec::{self, Exec};
use crate::Point;
use std::collections::{HashMap, HashSet};
use thiserror::Error;

/// Largest point count [`elekes`] will build.
pub const MAX_POINTS: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ArrangementError {
    #[error("construction size must be at least 1")]
    ZeroSize,
    #[error("construction with n={n} would have {points} points (limit {MAX_POINTS})")]
    TooLarge { n: u64, points: u64 },
    #[error("duplicate point ({0}, {1})")]
    DuplicatePoint(i64, i64),
    #[error("duplicate line a={0}, b={1}")]
    DuplicateLine(i64, i64),
    #[error("point #{index} ({x}, {y}): {source}")]
    PointDomain {
        index: usize,
        x: i64,
        y: i64,
        source: CurveError,
    },
    #[error("line #{index} (a={a}, b={b}): {source}")]
    LineDomain {
        index: usize,
        a: i64,
        b: i64,
        source: CurveError,
    },
    #[error("pullback count {pullback} differs from residual count {residual}; {} differing (point, curve) pairs, first {:?}", pairs.len(), pairs.first())]
    CountMismatch {
        pullback: u64,
        residual: u64,
        pairs: Vec<(usize, usize)>,
    },
}

/// Integer points and lines `y = a·x + b`, each without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntArrangement {
    points: Vec<(i64, i64)>,
    lines: Vec<(i64, i64)>,
}

impl IntArrangement {
    pub fn new(points: Vec<(i64, i64)>, lines: Vec<(i64, i64)>) -> Result<Self, ArrangementError> {
        let mut seen = HashSet::with_capacity(points.len());
        if let Some(&(x, y)) = points.iter().find(|p| !seen.insert(**p)) {
            return Err(ArrangementError::DuplicatePoint(x, y));
        }
        let mut seen = HashSet::with_capacity(lines.len());
        if let Some(&(a, b)) = lines.iter().find(|l| !seen.insert(**l)) {
            return Err(ArrangementError::DuplicateLine(a, b));
        }
        Ok(IntArrangement { points, lines })
    }

    pub fn empty() -> Self {
        IntArrangement {
            points: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    pub fn lines(&self) -> &[(i64, i64)] {
        &self.lines
    }
}

#[inline]
fn on_line((x, y): (i64, i64), (a, b): (i64, i64)) -> bool {
    i128::from(y) == i128::from(a) * i128::from(x) + i128::from(b)
}

/// Points `[1..n]×[1..2n²]` and lines `a ∈ [1..n]`, `b ∈ [1..n²]`.
///
/// Each line passes through exactly `n` grid points, giving `n⁴` incidences
/// between `2n³` points and `n³` lines.
pub fn elekes(n: u64) -> Result<IntArrangement, ArrangementError> {
    if n == 0 {
        return Err(ArrangementError::ZeroSize);
    }
    let points_len = n
        .checked_pow(3)
        .and_then(|c| c.checked_mul(2))
        .filter(|&p| p <= MAX_POINTS)
        .ok_or(ArrangementError::TooLarge {
            n,
            points: n.saturating_pow(3).saturating_mul(2),
        })?;
    let n = n as i64;
    let mut points = Vec::with_capacity(points_len as usize);
    for i in 1..=n {
        points.extend((1..=2 * n * n).map(|j| (i, j)));
    }
    let mut lines = Vec::with_capacity((points_len / 2) as usize);
    for a in 1..=n {
        lines.extend((1..=n * n).map(|b| (a, b)));
    }
    Ok(IntArrangement { points, lines })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IncidenceReport {
    pub n_points: usize,
    pub n_curves: usize,
    pub incidences: u64,
    /// `I / (N^{2/3}·M^{2/3} + N + M)`, 0 for an empty arrangement.
    pub st_ratio: f64,
}

impl IncidenceReport {
    pub fn new(n_points: usize, n_curves: usize, incidences: u64) -> Self {
        let denom = st_denominator(n_points, n_curves);
        let st_ratio = if denom > 0.0 {
            incidences as f64 / denom
        } else {
            0.0
        };
        IncidenceReport {
            n_points,
            n_curves,
            incidences,
            st_ratio,
        }
    }

    /// `I / (N^{2/3}·M^{2/3})`.
    pub fn leading_ratio(&self) -> f64 {
        let nm = self.n_points as f64 * self.n_curves as f64;
        self.incidences as f64 / nm.cbrt().powi(2)
    }
}

fn st_denominator(n: usize, m: usize) -> f64 {
    let (n, m) = (n as f64, m as f64);
    (n * m).cbrt().powi(2) + n + m
}

/// Incidences by column lookup: `O(M · #columns)`.
pub fn count_incidences_exact(arr: &IntArrangement, exec: Exec) -> IncidenceReport {
    let mut columns: HashMap<i64, HashSet<i64>> = HashMap::new();
    for &(x, y) in &arr.points {
        columns.entry(x).or_default().insert(y);
    }
    let mut columns: Vec<(i64, HashSet<i64>)> = columns.into_iter().collect();
    columns.sort_unstable_by_key(|c| c.0);
    let incidences = exec::sum_u64(exec, &arr.lines, |&(a, b)| {
        columns
            .iter()
            .filter(|(x, ys)| {
                let y = i128::from(a) * i128::from(*x) + i128::from(b);
                i64::try_from(y).is_ok_and(|y| ys.contains(&y))
            })
            .count() as u64
    });
    IncidenceReport::new(arr.points.len(), arr.lines.len(), incidences)
}

/// Incidences by testing every (point, line) pair.
pub fn count_incidences_bruteforce(arr: &IntArrangement, exec: Exec) -> IncidenceReport {
    let incidences = exec::sum_u64(exec, &arr.lines, |&l| {
        arr.points.iter().filter(|&&p| on_line(p, l)).count() as u64
    });
    IncidenceReport::new(arr.points.len(), arr.lines.len(), incidences)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StBound {
    pub pass: bool,
    /// `c·(N^{2/3}M^{2/3} + N + M)`
    pub bound: f64,
    /// `bound − I`; negative on failure.
    pub margin: f64,
}

pub fn st_bound_check(report: &IncidenceReport, c: f64) -> StBound {
    let bound = c * st_denominator(report.n_points, report.n_curves);
    let margin = bound - report.incidences as f64;
    StBound {
        pass: margin >= 0.0,
        bound,
        margin,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MappedArrangement {
    pub map: MapId,
    pub source: IntArrangement,
    pub points: Vec<Point>,
    pub curves: Vec<LineImage>,
}

impl MappedArrangement {
    /// Residual of image point `i` against curve `j`.
    pub fn residual(&self, i: usize, j: usize) -> f64 {
        let p = self.points[i];
        match self.curves[j] {
            LineImage::Translate(c) => c.residual(p),
            LineImage::Horizontal { height } => p.y - height,
        }
    }
}

pub fn map_arrangement(
    arr: &IntArrangement,
    id: MapId,
) -> Result<MappedArrangement, ArrangementError> {
    let points = arr
        .points
        .iter()
        .enumerate()
        .map(|(index, &(x, y))| {
            curves::map_point(id, Point::new(x as f64, y as f64)).map_err(|source| {
                ArrangementError::PointDomain {
                    index,
                    x,
                    y,
                    source,
                }
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let curves = arr
        .lines
        .iter()
        .enumerate()
        .map(|(index, &(a, b))| {
            curves::line_image(id, curves::Line::new(a as f64, b as f64)).map_err(|source| {
                ArrangementError::LineDomain {
                    index,
                    a,
                    b,
                    source,
                }
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MappedArrangement {
        map: id,
        source: arr.clone(),
        points,
        curves,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveIncidences {
    pub report: IncidenceReport,
    pub pullback: u64,
    pub residual: u64,
}

/// Counts incidences twice, exactly on the source arrangement and by image
/// residual `|R| ≤ tol`, and fails unless the two agree.
pub fn count_curve_incidences(
    m: &MappedArrangement,
    tol: f64,
    exec: Exec,
) -> Result<CurveIncidences, ArrangementError> {
    let pullback = count_incidences_exact(&m.source, exec).incidences;
    let n = m.points.len();
    let residual = exec::sum_range(exec, m.curves.len(), |j| {
        (0..n).filter(|&i| m.residual(i, j).abs() <= tol).count() as u64
    });
    if pullback != residual {
        let src = &m.source;
        let pairs = (0..m.curves.len())
            .flat_map(|j| (0..n).map(move |i| (i, j)))
            .filter(|&(i, j)| {
                on_line(src.points[i], src.lines[j]) != (m.residual(i, j).abs() <= tol)
            })
            .collect();
        return Err(ArrangementError::CountMismatch {
            pullback,
            residual,
            pairs,
        });
    }
    Ok(CurveIncidences {
        report: IncidenceReport::new(n, m.curves.len(), pullback),
        pullback,
        residual,
    })
}
