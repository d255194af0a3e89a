//! Maps of the plane under which every line image is a translate of one
//! fixed curve.
//!
//! | map        | formula                               | base curve            |
//! |------------|---------------------------------------|-----------------------|
//! | parabola   | `(x, y + x²)`                         | `y = x²`              |
//! | log        | `(x, ln y)`                           | `y = ln x`            |
//! | softplus   | `(ln x, ln(y / x))`                   | `y = ln(1 + e^{−x})`  |
//! | negexp     | `(ln x, y / x)`                       | `y = e^{−x}`          |
//! | complexlog | `(Re, Im) ln(1 − x + iy)`             | `eˣ·sin y = 1`        |
//!
//! The complex-log base curve is the image of `u ↦ ln(u + i)`. Lines on the
//! other side of the singular point `(1, 0)` land on `ln(u − i)`, which is the
//! same curve shifted by `(0, −π)`; [`CurveTranslate::branch`] records that.

use crate::actions::{ActionCase, ActionError};
use crate::sampling::{self, SampleRng};
use crate::{Point, Vector2};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapId {
    Parabola,
    Log,
    Softplus,
    NegExp,
    ComplexLog,
}

impl MapId {
    pub const ALL: [MapId; 5] = [
        MapId::Parabola,
        MapId::Log,
        MapId::Softplus,
        MapId::NegExp,
        MapId::ComplexLog,
    ];

    /// Short name used on the command line.
    pub fn key(self) -> &'static str {
        match self {
            MapId::Parabola => "parabola",
            MapId::Log => "log",
            MapId::Softplus => "softplus",
            MapId::NegExp => "negexp",
            MapId::ComplexLog => "complexlog",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MapId::Parabola => "ParabolaMap",
            MapId::Log => "LogMap",
            MapId::Softplus => "SoftplusMap",
            MapId::NegExp => "NegExpMap",
            MapId::ComplexLog => "ComplexLogMap",
        }
    }

    pub fn family(self) -> CurveFamily {
        match self {
            MapId::Parabola => CurveFamily::Parabola(1.0),
            MapId::Log => CurveFamily::LogCurve,
            MapId::Softplus => CurveFamily::SoftplusNegCurve,
            MapId::NegExp => CurveFamily::NegExpCurve,
            MapId::ComplexLog => CurveFamily::ComplexLogCurve,
        }
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapId {
    type Err = CurveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim();
        MapId::ALL
            .into_iter()
            .find(|m| m.key().eq_ignore_ascii_case(key) || m.name().eq_ignore_ascii_case(key))
            .ok_or_else(|| CurveError::UnknownName(s.to_string()))
    }
}

/// A base curve, given by an implicit residual `R(x, y)` that vanishes on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurveFamily {
    /// `y = c·x²`
    Parabola(f64),
    /// `y = ln x`, `x > 0`
    LogCurve,
    /// `y = e^{−x}`
    NegExpCurve,
    /// `y = ln(1 + e^{−x})`, i.e. `(eʸ − 1)·eˣ = 1`
    SoftplusNegCurve,
    /// `eˣ·sin y = 1`, `0 < y < π`
    ComplexLogCurve,
}

impl CurveFamily {
    /// Implicit residual. For the complex-log curve it is evaluated without
    /// restricting `y`, so it is `2π`-periodic in `y` and matches images
    /// taken on the principal branch.
    pub fn residual(&self, p: Point) -> f64 {
        let (x, y) = (p.x, p.y);
        match *self {
            CurveFamily::Parabola(c) => y - c * x * x,
            CurveFamily::LogCurve => {
                if x > 0.0 {
                    y - x.ln()
                } else {
                    f64::INFINITY
                }
            }
            CurveFamily::NegExpCurve => y - (-x).exp(),
            CurveFamily::SoftplusNegCurve => y.exp_m1() * x.exp() - 1.0,
            CurveFamily::ComplexLogCurve => x.exp() * y.sin() - 1.0,
        }
    }

    /// Recovers the translation `(u, v)` placing two distinct sample points on
    /// `(u, v) + curve`. For the complex-log curve `v` is defined modulo `2π`.
    pub fn fit_offset(&self, p1: Point, p2: Point) -> Option<Vector2<f64>> {
        let (x1, y1, x2, y2) = (p1.x, p1.y, p2.x, p2.y);
        let out = match *self {
            CurveFamily::Parabola(c) => {
                let u = (x1 + x2) / 2.0 - (y1 - y2) / (2.0 * c * (x1 - x2));
                Vector2::new(u, y1 - c * (x1 - u) * (x1 - u))
            }
            CurveFamily::LogCurve => {
                // e^{y−v} = x − u
                let emv = (x1 - x2) / (y1.exp() - y2.exp());
                let v = -emv.ln();
                Vector2::new(x1 - (y1 - v).exp(), v)
            }
            CurveFamily::NegExpCurve => {
                // y − v = eᵘ·e^{−x}
                let eu = (y1 - y2) / ((-x1).exp() - (-x2).exp());
                Vector2::new(eu.ln(), y1 - eu * (-x1).exp())
            }
            CurveFamily::SoftplusNegCurve => {
                // e^{−v}·eʸ − eᵘ·e^{−x} = 1, linear in (e^{−v}, eᵘ)
                let (a11, a12, a21, a22) = (y1.exp(), -(-x1).exp(), y2.exp(), -(-x2).exp());
                let det = a11 * a22 - a12 * a21;
                let emv = (a22 - a12) / det;
                let eu = (a11 - a21) / det;
                Vector2::new(eu.ln(), -emv.ln())
            }
            CurveFamily::ComplexLogCurve => {
                // e^{x−u}·sin(y − v) = 1, linear in P = e^{−u}cos v, Q = e^{−u}sin v
                let (a11, a12) = (x1.exp() * y1.sin(), -x1.exp() * y1.cos());
                let (a21, a22) = (x2.exp() * y2.sin(), -x2.exp() * y2.cos());
                let det = a11 * a22 - a12 * a21;
                let p = (a22 - a12) / det;
                let q = (a11 - a21) / det;
                Vector2::new(-p.hypot(q).ln(), q.atan2(p))
            }
        };
        (out.x.is_finite() && out.y.is_finite()).then_some(out)
    }
}

impl fmt::Display for CurveFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveFamily::Parabola(c) => write!(f, "Parabola({c})"),
            CurveFamily::LogCurve => f.write_str("LogCurve"),
            CurveFamily::NegExpCurve => f.write_str("NegExpCurve"),
            CurveFamily::SoftplusNegCurve => f.write_str("SoftplusNegCurve"),
            CurveFamily::ComplexLogCurve => f.write_str("ComplexLogCurve"),
        }
    }
}

impl FromStr for CurveFamily {
    type Err = CurveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let unknown = || CurveError::UnknownName(s.to_string());
        match s {
            "LogCurve" => Ok(CurveFamily::LogCurve),
            "NegExpCurve" => Ok(CurveFamily::NegExpCurve),
            "SoftplusNegCurve" => Ok(CurveFamily::SoftplusNegCurve),
            "ComplexLogCurve" => Ok(CurveFamily::ComplexLogCurve),
            _ => {
                let c = s
                    .strip_prefix("Parabola(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(unknown)?;
                c.parse::<f64>()
                    .map(CurveFamily::Parabola)
                    .map_err(|_| unknown())
            }
        }
    }
}

/// The non-vertical line `y = a·x + b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub a: f64,
    pub b: f64,
}

impl Line {
    pub fn new(a: f64, b: f64) -> Self {
        Line { a, b }
    }

    pub fn at(&self, t: f64) -> Point {
        Point::new(t, self.a * t + self.b)
    }
}

/// `offset + (0, branch·π) + base curve`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveTranslate {
    pub family: CurveFamily,
    pub offset: Vector2<f64>,
    /// 0 or −1; only the complex-log family uses −1.
    pub branch: i32,
}

impl CurveTranslate {
    pub fn new(family: CurveFamily, offset: Vector2<f64>) -> Self {
        CurveTranslate {
            family,
            offset,
            branch: 0,
        }
    }

    pub fn shift(&self) -> Vector2<f64> {
        self.offset + Vector2::new(0.0, f64::from(self.branch) * PI)
    }

    pub fn residual(&self, p: Point) -> f64 {
        self.family.residual(p - self.shift())
    }
}

/// What a line becomes under a map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LineImage {
    Translate(CurveTranslate),
    /// Lines through the distinguished point of the map collapse onto a
    /// horizontal line `y = height`.
    Horizontal {
        height: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("unknown map or curve name {0:?}")]
    UnknownName(String),
    #[error("{map}: point ({x}, {y}) is outside the domain")]
    OutsideDomain { map: MapId, x: f64, y: f64 },
    #[error("{map}: point ({x}, {y}) is outside the image of the map")]
    OutsideRange { map: MapId, x: f64, y: f64 },
    #[error("{map} requires {constraint} (line a={a}, b={b})")]
    Inadmissible {
        map: MapId,
        constraint: &'static str,
        a: f64,
        b: f64,
    },
    #[error("{source_map}: line a={a}, b={b} maps to the horizontal line y={height}")]
    HorizontalImage {
        source_map: String,
        a: f64,
        b: f64,
        height: f64,
    },
    #[error("{map}: parameter range [{lo}, {hi}] leaves the domain at t={t}")]
    RangeOutsideDomain {
        map: MapId,
        lo: f64,
        hi: f64,
        t: f64,
    },
    #[error("at least 2 samples are required, got {0}")]
    TooFewSamples(usize),
    #[error("translate residual {residual:e} exceeds tolerance {tol:e}")]
    ResidualExceeded { residual: f64, tol: f64 },
    #[error("{0}: lines map to lines, not to translates of a curve")]
    NoCurveFamily(ActionCase),
    #[error(transparent)]
    Action(#[from] ActionError),
}

fn outside(map: MapId, p: Point) -> CurveError {
    CurveError::OutsideDomain {
        map,
        x: p.x,
        y: p.y,
    }
}

pub fn map_point(id: MapId, p: Point) -> Result<Point, CurveError> {
    let (x, y) = (p.x, p.y);
    if !(x.is_finite() && y.is_finite()) {
        return Err(outside(id, p));
    }
    match id {
        MapId::Parabola => Ok(Point::new(x, y + x * x)),
        MapId::Log if y > 0.0 => Ok(Point::new(x, y.ln())),
        MapId::Softplus if x > 0.0 && y > 0.0 => Ok(Point::new(x.ln(), (y / x).ln())),
        MapId::NegExp if x > 0.0 => Ok(Point::new(x.ln(), y / x)),
        MapId::ComplexLog if !(x == 1.0 && y == 0.0) => {
            let u = 1.0 - x;
            // +0.0 keeps the branch cut value at +π.
            Ok(Point::new(u.hypot(y).ln(), (y + 0.0).atan2(u)))
        }
        _ => Err(outside(id, p)),
    }
}

pub fn map_point_inverse(id: MapId, q: Point) -> Result<Point, CurveError> {
    let (x, y) = (q.x, q.y);
    let out_of_range = || CurveError::OutsideRange { map: id, x, y };
    if !(x.is_finite() && y.is_finite()) {
        return Err(out_of_range());
    }
    match id {
        MapId::Parabola => Ok(Point::new(x, y - x * x)),
        MapId::Log => Ok(Point::new(x, y.exp())),
        MapId::Softplus => {
            let ex = x.exp();
            Ok(Point::new(ex, ex * y.exp()))
        }
        MapId::NegExp => {
            let ex = x.exp();
            Ok(Point::new(ex, y * ex))
        }
        MapId::ComplexLog if y > -PI && y <= PI => {
            let (s, c) = y.sin_cos();
            let r = x.exp();
            Ok(Point::new(1.0 - r * c, r * s))
        }
        MapId::ComplexLog => Err(out_of_range()),
    }
}

fn inadmissible(map: MapId, constraint: &'static str, line: Line) -> CurveError {
    CurveError::Inadmissible {
        map,
        constraint,
        a: line.a,
        b: line.b,
    }
}

/// Image of `line` under `id`: a curve translate, or a horizontal line for
/// the lines through the map's distinguished point.
pub fn line_image(id: MapId, line: Line) -> Result<LineImage, CurveError> {
    let Line { a, b } = line;
    if !(a.is_finite() && b.is_finite()) {
        return Err(inadmissible(id, "finite a and b", line));
    }
    let translate = |family, u: f64, v: f64| {
        Ok(LineImage::Translate(CurveTranslate::new(
            family,
            Vector2::new(u, v),
        )))
    };
    match id {
        // (t, (t + a/2)² − a²/4 + b)
        MapId::Parabola => translate(id.family(), -a / 2.0, b - a * a / 4.0),
        // ln(a·x + b) = ln(x + b/a) + ln a
        MapId::Log => {
            if a == 0.0 && b > 0.0 {
                Ok(LineImage::Horizontal { height: b.ln() })
            } else if a > 0.0 {
                translate(id.family(), -b / a, a.ln())
            } else {
                Err(inadmissible(id, "a>0", line))
            }
        }
        // ln(a + b·e^{−X}) = ln a + ln(1 + e^{−(X − ln(b/a))})
        MapId::Softplus => {
            if !(a > 0.0) {
                Err(inadmissible(id, "a>0", line))
            } else if b == 0.0 {
                Ok(LineImage::Horizontal { height: a.ln() })
            } else if b > 0.0 {
                translate(id.family(), (b / a).ln(), a.ln())
            } else {
                Err(inadmissible(id, "b>0", line))
            }
        }
        // a + b·e^{−X} = a + e^{−(X − ln b)}
        MapId::NegExp => {
            if b == 0.0 {
                Ok(LineImage::Horizontal { height: a })
            } else if !(a > 0.0) {
                Err(inadmissible(id, "a>0", line))
            } else if b > 0.0 {
                translate(id.family(), b.ln(), a)
            } else {
                Err(inadmissible(id, "b>0", line))
            }
        }
        MapId::ComplexLog => complex_log_line_image(line),
    }
}

/// `1 − t + i(at + b) = (ia − 1)(t − z₀)` with `z₀ = (1 + ib)/(1 − ia)`.
///
/// Writing `t − z₀ = (t − Re z₀) + i·v₀` with `v₀ = −(a + b)/(1 + a²)`, the
/// factor `ln(t − z₀)` traces `ln|v₀| + ln(u ± i)` and `ln(ia − 1)` adds
/// `(½·ln(1 + a²), arg(ia − 1))`.
fn complex_log_line_image(line: Line) -> Result<LineImage, CurveError> {
    let Line { a, b } = line;
    let v0 = -(a + b) / (1.0 + a * a);
    if v0 == 0.0 {
        // y = a(x − 1): 1 − x + iy = (1 − x)(1 − ia)
        return Ok(LineImage::Horizontal {
            height: (-a).atan2(1.0),
        });
    }
    let offset = Vector2::new(v0.abs().ln() + 0.5 * a.mul_add(a, 1.0).ln(), a.atan2(-1.0));
    Ok(LineImage::Translate(CurveTranslate {
        family: CurveFamily::ComplexLogCurve,
        offset,
        branch: if v0 > 0.0 { 0 } else { -1 },
    }))
}

/// Like [`line_image`], but a horizontal image is an error.
pub fn line_image_translate(id: MapId, line: Line) -> Result<CurveTranslate, CurveError> {
    match line_image(id, line)? {
        LineImage::Translate(c) => Ok(c),
        LineImage::Horizontal { height } => Err(CurveError::HorizontalImage {
            source_map: id.name().to_string(),
            a: line.a,
            b: line.b,
            height,
        }),
    }
}

/// A parameter interval inside the part of `line` that `id` maps.
pub fn default_range(id: MapId, line: Line) -> (f64, f64) {
    match id {
        MapId::Parabola | MapId::ComplexLog => (-5.0, 5.0),
        MapId::Log => {
            let x0 = -line.b / line.a;
            (x0 + 0.01, x0 + 10.0)
        }
        MapId::Softplus | MapId::NegExp => (0.01, 10.0),
    }
}

/// `count` images of `(t, a·t + b)` for `t` equally spaced over `range`.
pub fn sample_line_image(
    id: MapId,
    line: Line,
    range: (f64, f64),
    count: usize,
) -> Result<Vec<Point>, CurveError> {
    if count < 2 {
        return Err(CurveError::TooFewSamples(count));
    }
    let (lo, hi) = range;
    let leaves = |t: f64| CurveError::RangeOutsideDomain { map: id, lo, hi, t };
    // Every domain meets a line in an interval, except the complex-log
    // domain which only loses the point (1, 0).
    for t in [lo, hi] {
        map_point(id, line.at(t)).map_err(|_| leaves(t))?;
    }
    if id == MapId::ComplexLog && line.a + line.b == 0.0 && lo.min(hi) <= 1.0 && 1.0 <= lo.max(hi) {
        return Err(leaves(1.0));
    }
    let step = (hi - lo) / (count - 1) as f64;
    (0..count)
        .map(|k| {
            let t = if k == count - 1 {
                hi
            } else {
                lo + step * k as f64
            };
            map_point(id, line.at(t))
        })
        .collect()
}

/// Largest `|R|` of `count` sampled line-image points against the closed-form
/// translate; an error if it exceeds `tol`.
pub fn verify_translate(id: MapId, line: Line, count: usize, tol: f64) -> Result<f64, CurveError> {
    let translate = line_image_translate(id, line)?;
    let pts = sample_line_image(id, line, default_range(id, line), count)?;
    let residual = pts
        .iter()
        .map(|p| translate.residual(*p).abs())
        .fold(
            0.0,
            |acc: f64, r| if r.is_nan() { f64::NAN } else { acc.max(r) },
        );
    if residual <= tol {
        Ok(residual)
    } else {
        Err(CurveError::ResidualExceeded { residual, tol })
    }
}

/// `count` seeded lines admissible for `id`, away from the horizontal-image
/// lines: slopes and intercepts in `[−3, 3]`, positive ones in `[0.1, 3]`,
/// and `|a + b| ≥ 0.1` for the complex-log map.
pub fn sample_lines(id: MapId, rng: &mut SampleRng, count: usize) -> Vec<Line> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (a, b) = match id {
            MapId::Parabola | MapId::ComplexLog => (
                sampling::uniform(rng, -3.0, 3.0),
                sampling::uniform(rng, -3.0, 3.0),
            ),
            MapId::Log => (
                sampling::uniform(rng, 0.1, 3.0),
                sampling::uniform(rng, -3.0, 3.0),
            ),
            MapId::Softplus | MapId::NegExp => (
                sampling::uniform(rng, 0.1, 3.0),
                sampling::uniform(rng, 0.1, 3.0),
            ),
        };
        if id != MapId::ComplexLog || (a + b).abs() >= 0.1 {
            out.push(Line::new(a, b));
        }
    }
    out
}

/// The translate traced by a line under an action's φ.
///
/// With `swap_axes` the curve contains `(y, x)` for each image point `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiLineImage {
    pub translate: CurveTranslate,
    pub swap_axes: bool,
}

impl PhiLineImage {
    pub fn residual(&self, p: Point) -> f64 {
        let q = if self.swap_axes {
            Point::new(p.y, p.x)
        } else {
            p
        };
        self.translate.residual(q)
    }
}

/// Closed-form image of `line` under the φ of `case`, in terms of the same
/// base curves as the [`MapId`] maps.
///
/// A1 ↦ softplus curve, A2 ↦ negative exponential, A3 ↦ complex-log curve,
/// A4 ↦ `y = −x²/2`, A6 ↦ log curve with axes swapped; A5 has no curve.
pub fn phi_line_image(case: ActionCase, line: Line) -> Result<PhiLineImage, CurveError> {
    let Line { a, b } = line;
    let horizontal = |height| CurveError::HorizontalImage {
        source_map: format!("φ of {case}"),
        a,
        b,
        height,
    };
    let plain = |family, u: f64, v: f64| {
        Ok(PhiLineImage {
            translate: CurveTranslate::new(family, Vector2::new(u, v)),
            swap_axes: false,
        })
    };
    let need = |constraint| CurveError::Inadmissible {
        map: MapId::ComplexLog,
        constraint,
        a,
        b,
    };
    match case {
        // ln(1 + a + (b − a)e^{−X})
        ActionCase::A1 => {
            if !(1.0 + a > 0.0) {
                Err(need("1+a>0 for the A1 image"))
            } else if b == a {
                Err(horizontal((1.0 + a).ln()))
            } else if b > a {
                plain(
                    CurveFamily::SoftplusNegCurve,
                    ((b - a) / (1.0 + a)).ln(),
                    (1.0 + a).ln(),
                )
            } else {
                Err(need("b>a for the A1 image"))
            }
        }
        // a + (b − a)e^{−X}
        ActionCase::A2 => {
            if b == a {
                Err(horizontal(a))
            } else if b > a {
                plain(CurveFamily::NegExpCurve, (b - a).ln(), a)
            } else {
                Err(need("b>a for the A2 image"))
            }
        }
        ActionCase::A3Rotation => match complex_log_line_image(line)? {
            LineImage::Translate(translate) => Ok(PhiLineImage {
                translate,
                swap_axes: false,
            }),
            LineImage::Horizontal { height } => Err(horizontal(height)),
        },
        // a·x + b − x²/2 = −(x − a)²/2 + a²/2 + b
        ActionCase::A4Parabola => plain(CurveFamily::Parabola(-0.5), a, b + a * a / 2.0),
        ActionCase::A5Identity => Err(CurveError::NoCurveFamily(case)),
        // X = ln(Y − (b − a)) − ln a
        ActionCase::A6Log => {
            if a == 0.0 {
                Err(horizontal(b))
            } else if a > 0.0 {
                Ok(PhiLineImage {
                    translate: CurveTranslate::new(
                        CurveFamily::LogCurve,
                        Vector2::new(b - a, -a.ln()),
                    ),
                    swap_axes: true,
                })
            } else {
                Err(need("a>0 for the A6 image"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{E, FRAC_PI_4, LN_2};

    #[test]
    fn map_point_examples() {
        assert_eq!(
            map_point(MapId::Parabola, Point::new(3.0, 1.0)).unwrap(),
            Point::new(3.0, 10.0)
        );
        assert_eq!(
            map_point(MapId::Log, Point::new(5.0, 1.0)).unwrap(),
            Point::new(5.0, 0.0)
        );
        let q = map_point(MapId::ComplexLog, Point::new(0.0, 1.0)).unwrap();
        assert_abs_diff_eq!(q.x, 0.5 * LN_2, epsilon = 1e-15);
        assert_abs_diff_eq!(q.y, FRAC_PI_4, epsilon = 1e-15);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            map_point_inverse(MapId::Parabola, Point::new(3.0, 10.0)).unwrap(),
            Point::new(3.0, 1.0)
        );
        assert_eq!(
            map_point_inverse(MapId::Log, Point::new(5.0, 0.0)).unwrap(),
            Point::new(5.0, 1.0)
        );
        let p = map_point_inverse(MapId::ComplexLog, Point::new(0.5 * LN_2, FRAC_PI_4)).unwrap();
        assert!((p - Point::new(0.0, 1.0)).norm() < 1e-15);
        assert!(map_point_inverse(MapId::ComplexLog, Point::new(0.0, 4.0)).is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(map_point(MapId::Log, Point::new(1.0, 0.0)).is_err());
        assert!(map_point(MapId::Softplus, Point::new(1.0, -1.0)).is_err());
        assert!(map_point(MapId::NegExp, Point::new(0.0, 1.0)).is_err());
        assert!(map_point(MapId::ComplexLog, Point::new(1.0, 0.0)).is_err());
        // branch cut is closed on the +π side
        let q = map_point(MapId::ComplexLog, Point::new(2.0, -0.0)).unwrap();
        assert_eq!(q.y, PI);
    }

    #[test]
    fn translate_offsets() {
        let c = line_image_translate(MapId::Log, Line::new(2.0, 4.0)).unwrap();
        assert_eq!(c.family, CurveFamily::LogCurve);
        assert_eq!(c.offset.x, -2.0);
        assert_abs_diff_eq!(c.offset.y, LN_2, epsilon = 1e-15);

        let c = line_image_translate(MapId::Parabola, Line::new(2.0, 1.0)).unwrap();
        assert_eq!(c.family, CurveFamily::Parabola(1.0));
        assert_eq!(c.offset, Vector2::new(-1.0, 0.0));

        let c = line_image_translate(MapId::NegExp, Line::new(1.0, E)).unwrap();
        assert_eq!(c.family, CurveFamily::NegExpCurve);
        assert!((c.offset - Vector2::new(1.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn inadmissible_and_horizontal_lines() {
        match line_image_translate(MapId::Log, Line::new(-1.0, 3.0)) {
            Err(CurveError::Inadmissible { constraint, .. }) => assert_eq!(constraint, "a>0"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            line_image(MapId::NegExp, Line::new(2.0, 0.0)),
            Ok(LineImage::Horizontal { height }) if height == 2.0
        ));
        assert!(matches!(
            line_image_translate(MapId::ComplexLog, Line::new(2.0, -2.0)),
            Err(CurveError::HorizontalImage { .. })
        ));
        assert!(matches!(
            line_image_translate(MapId::Softplus, Line::new(1.0, -1.0)),
            Err(CurveError::Inadmissible {
                constraint: "b>0",
                ..
            })
        ));
    }

    #[test]
    fn sampled_images() {
        let pts = sample_line_image(MapId::Parabola, Line::new(0.0, 0.0), (-1.0, 1.0), 3).unwrap();
        assert_eq!(
            pts,
            vec![
                Point::new(-1.0, 1.0),
                Point::new(0.0, 0.0),
                Point::new(1.0, 1.0)
            ]
        );
        let pts = sample_line_image(MapId::Log, Line::new(1.0, 0.0), (1.0, E), 2).unwrap();
        assert_eq!(pts[0], Point::new(1.0, 0.0));
        assert_abs_diff_eq!(pts[1].y, 1.0, epsilon = 1e-15);
        let pts = sample_line_image(MapId::ComplexLog, Line::new(0.0, 1.0), (0.0, 1.0), 2).unwrap();
        assert_abs_diff_eq!(pts[0].x, 0.5 * LN_2, epsilon = 1e-15);
        assert_abs_diff_eq!(pts[0].y, FRAC_PI_4, epsilon = 1e-15);

        assert!(matches!(
            sample_line_image(MapId::ComplexLog, Line::new(1.0, -1.0), (0.0, 2.0), 5),
            Err(CurveError::RangeOutsideDomain { t, .. }) if t == 1.0
        ));
        assert!(matches!(
            sample_line_image(MapId::Log, Line::new(1.0, 0.0), (-1.0, 1.0), 5),
            Err(CurveError::RangeOutsideDomain { .. })
        ));
        assert_eq!(
            sample_line_image(MapId::Log, Line::new(1.0, 0.0), (1.0, 2.0), 1),
            Err(CurveError::TooFewSamples(1))
        );
    }

    #[test]
    fn verify_examples() {
        assert!(verify_translate(MapId::Log, Line::new(2.0, 4.0), 100, 1e-12).is_ok());
        assert!(verify_translate(MapId::ComplexLog, Line::new(1.0, 1.0), 100, 1e-9).is_ok());
        assert!(verify_translate(MapId::Parabola, Line::new(-3.5, 0.25), 100, 1e-12).is_ok());
    }

    #[test]
    fn complex_log_branch_correction() {
        // a = b = 1 sits on the v₀ < 0 side.
        let c = line_image_translate(MapId::ComplexLog, Line::new(1.0, 1.0)).unwrap();
        assert_eq!(c.branch, -1);
        assert_abs_diff_eq!(c.offset.x, 0.5 * LN_2, epsilon = 1e-15);
        assert_abs_diff_eq!(c.offset.y, 3.0 * FRAC_PI_4, epsilon = 1e-15);
        let q = map_point(MapId::ComplexLog, Point::new(0.0, 1.0)).unwrap();
        let base = q - c.shift();
        assert_abs_diff_eq!(base.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(base.y, PI / 2.0, epsilon = 1e-15);
        // without the branch shift the point is on the reflected curve
        let unshifted = CurveTranslate { branch: 0, ..c };
        assert!(unshifted.residual(q).abs() > 1.0);
    }

    #[test]
    fn family_names_round_trip() {
        for fam in [
            CurveFamily::Parabola(1.0),
            CurveFamily::Parabola(-0.5),
            CurveFamily::LogCurve,
            CurveFamily::NegExpCurve,
            CurveFamily::SoftplusNegCurve,
            CurveFamily::ComplexLogCurve,
        ] {
            assert_eq!(fam.to_string().parse::<CurveFamily>().unwrap(), fam);
        }
        for id in MapId::ALL {
            assert_eq!(id.key().parse::<MapId>().unwrap(), id);
            assert_eq!(id.name().parse::<MapId>().unwrap(), id);
        }
    }
}
