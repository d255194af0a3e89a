//! CSV and SVG formats.
//!
//! Numbers are written losslessly: integral values below 2⁵³ without a
//! decimal point, everything else with 17 significant digits (scientific
//! notation outside `[1e-5, 1e15)`).
//!
//! | file         | header              | rows            |
//! |--------------|---------------------|-----------------|
//! | points       | `x,y`               | reals or ints   |
//! | lines        | `a,b`               | ints            |
//! | curves       | `family,u,v,branch` | name, reals, int|
//! | line samples | `# family,u,v,branch` then `x,y` | reals |
//!
//! Point files may hold several series separated by blank or `#` lines.

use crate::curves::{CurveTranslate, LineImage};
use crate::Point;
use std::fmt::Write as _;
use std::io::{self, BufRead, Write};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("expected header {expected:?}, found {found:?}")]
    Header {
        expected: &'static str,
        found: String,
    },
    #[error("no data points")]
    Empty,
    #[error("data extent has zero size")]
    ZeroExtent,
}

const EXACT_INT: f64 = 9_007_199_254_740_992.0;

/// Lossless decimal form of `x`.
pub fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == x.trunc() && x.abs() < EXACT_INT {
        return format!("{}", x as i64);
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let ax = x.abs();
    if !(1e-5..1e15).contains(&ax) {
        return format!("{}e{exp}", trim_zeros(mantissa));
    }
    let decimals = (16 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn write_rows<W: Write>(
    mut w: W,
    header: &str,
    rows: impl Iterator<Item = String>,
) -> io::Result<()> {
    writeln!(w, "{header}")?;
    for row in rows {
        writeln!(w, "{row}")?;
    }
    w.flush()
}

pub fn write_points<W: Write>(w: W, points: &[Point]) -> io::Result<()> {
    write_rows(
        w,
        "x,y",
        points
            .iter()
            .map(|p| format!("{},{}", format_real(p.x), format_real(p.y))),
    )
}

pub fn write_int_points<W: Write>(w: W, points: &[(i64, i64)]) -> io::Result<()> {
    write_rows(w, "x,y", points.iter().map(|(x, y)| format!("{x},{y}")))
}

pub fn write_lines<W: Write>(w: W, lines: &[(i64, i64)]) -> io::Result<()> {
    write_rows(w, "a,b", lines.iter().map(|(a, b)| format!("{a},{b}")))
}

fn curve_row(c: &LineImage) -> String {
    match c {
        LineImage::Translate(t) => translate_row(t),
        // A horizontal image y = h is written as the translate (0, h).
        LineImage::Horizontal { height } => format!("Horizontal,0,{},0", format_real(*height)),
    }
}

fn translate_row(t: &CurveTranslate) -> String {
    format!(
        "{},{},{},{}",
        t.family,
        format_real(t.offset.x),
        format_real(t.offset.y),
        t.branch
    )
}

pub fn write_curves<W: Write>(w: W, curves: &[LineImage]) -> io::Result<()> {
    write_rows(w, "family,u,v,branch", curves.iter().map(curve_row))
}

/// Sampled line image preceded by its translate as a comment row.
pub fn write_line_samples<W: Write>(
    mut w: W,
    translate: &CurveTranslate,
    samples: &[Point],
) -> io::Result<()> {
    writeln!(w, "# {}", translate_row(translate))?;
    write_points(w, samples)
}

fn parse_err(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair<T: std::str::FromStr>(text: &str, line: usize) -> Result<(T, T), IoError> {
    let fields: Vec<&str> = text.split(',').map(str::trim).collect();
    let [a, b] = fields[..] else {
        return Err(parse_err(
            line,
            format!("expected 2 fields, found {}", fields.len()),
        ));
    };
    let num = |s: &str| {
        s.parse::<T>()
            .map_err(|_| parse_err(line, format!("cannot parse {s:?}")))
    };
    Ok((num(a)?, num(b)?))
}

/// Reads a two-column integer table with the given header.
fn read_int_table<R: BufRead>(r: R, header: &'static str) -> Result<Vec<(i64, i64)>, IoError> {
    let mut rows = Vec::new();
    let mut seen_header = false;
    for (k, line) in r.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        if !seen_header {
            if text != header {
                return Err(IoError::Header {
                    expected: header,
                    found: text.to_string(),
                });
            }
            seen_header = true;
            continue;
        }
        rows.push(parse_pair::<i64>(text, k + 1)?);
    }
    Ok(rows)
}

pub fn read_int_points<R: BufRead>(r: R) -> Result<Vec<(i64, i64)>, IoError> {
    read_int_table(r, "x,y")
}

pub fn read_lines<R: BufRead>(r: R) -> Result<Vec<(i64, i64)>, IoError> {
    read_int_table(r, "a,b")
}

/// Reads point series; blank lines and `#` lines end a series, `x,y` header
/// lines are skipped. Empty series are dropped.
pub fn read_series<R: BufRead>(r: R) -> Result<Vec<Vec<Point>>, IoError> {
    let mut series = vec![Vec::new()];
    for (k, line) in r.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            if !series.last().is_some_and(Vec::is_empty) {
                series.push(Vec::new());
            }
            continue;
        }
        if text == "x,y" {
            continue;
        }
        let (x, y) = parse_pair::<f64>(text, k + 1)?;
        if !(x.is_finite() && y.is_finite()) {
            return Err(parse_err(k + 1, "non-finite coordinate"));
        }
        series.last_mut().expect("non-empty").push(Point::new(x, y));
    }
    series.retain(|s| !s.is_empty());
    Ok(series)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SvgStyle {
    /// Polylines only.
    #[default]
    Line,
    /// Polylines plus a dot at every sample.
    Markers,
}

impl std::str::FromStr for SvgStyle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "line" => Ok(SvgStyle::Line),
            "markers" => Ok(SvgStyle::Markers),
            _ => Err(format!("unknown style {s:?} (expected line or markers)")),
        }
    }
}

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

/// An 800×600 document with one polyline per series, y pointing up, and a
/// viewBox 5% larger than the data on each side.
pub fn render_svg(series: &[Vec<Point>], style: SvgStyle) -> Result<String, IoError> {
    let all = || series.iter().flatten();
    if all().next().is_none() {
        return Err(IoError::Empty);
    }
    let fold = |f: fn(f64, f64) -> f64, init: f64, g: fn(&Point) -> f64| all().map(g).fold(init, f);
    let (x0, x1) = (
        fold(f64::min, f64::INFINITY, |p| p.x),
        fold(f64::max, f64::NEG_INFINITY, |p| p.x),
    );
    let (y0, y1) = (
        fold(f64::min, f64::INFINITY, |p| p.y),
        fold(f64::max, f64::NEG_INFINITY, |p| p.y),
    );
    let (mut w, mut h) = (x1 - x0, y1 - y0);
    if w == 0.0 && h == 0.0 {
        return Err(IoError::ZeroExtent);
    }
    // A flat series borrows the other extent so it stays visible.
    if w == 0.0 {
        w = h;
    }
    if h == 0.0 {
        h = w;
    }
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let (vw, vh) = (w * 1.1, h * 1.1);
    let f = format_real;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="600" viewBox="{} {} {} {}" preserveAspectRatio="none">"#,
        f(cx - vw / 2.0),
        f(-cy - vh / 2.0),
        f(vw),
        f(vh)
    );
    for (k, s) in series.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let pts: Vec<String> = s
            .iter()
            .map(|p| format!("{},{}", f(p.x), f(-p.y)))
            .collect();
        let _ = writeln!(
            out,
            r#"  <polyline fill="none" stroke="{color}" stroke-width="1.5" vector-effect="non-scaling-stroke" points="{}"/>"#,
            pts.join(" ")
        );
        if style == SvgStyle::Markers {
            let r = f(vw.min(vh) * 0.004);
            for p in s {
                let _ = writeln!(
                    out,
                    r#"  <circle cx="{}" cy="{}" r="{r}" fill="{color}"/>"#,
                    f(p.x),
                    f(-p.y)
                );
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
