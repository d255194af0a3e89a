use crate::{Cli, Command, RunConfig};
use anyhow::{bail, Context, Result};
use curvelines::actions::{self, ActionCase};
use curvelines::arrangements::{self, IntArrangement};
use curvelines::curves::{self, Line, MapId};
use curvelines::io::{self, format_real, SvgStyle};
use curvelines::sampling;
use curvelines::unit_distance::{self, ScaledGrid, UnitBall};
use curvelines::Exec;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

/// Largest grid size the brute-force unit-distance check accepts.
const BRUTE_FORCE_MAX_N: u64 = 12;

pub fn run(cli: Cli) -> Result<Outcome> {
    let cfg = cli.config;
    let exec = executor(cfg.threads)?;
    match cli.command {
        Command::VerifyActions { case } => verify_actions(&cfg, case, exec),
        Command::MapLine {
            map,
            a,
            b,
            t_min,
            t_max,
        } => {
            let range = t_min.zip(t_max);
            map_line(&cfg, map, Line::new(a, b), range)
        }
        Command::Arrange {
            n,
            map,
            points,
            lines,
            check,
        } => arrange(&cfg, n, map, points.zip(lines), check, exec),
        Command::CountUnitDistances { n, check } => count_unit_distances(&cfg, &n, check, exec),
        Command::ExportSvg { input, style } => export_svg(&cfg, &input, style),
    }
}

#[cfg(feature = "parallel")]
fn executor(threads: Option<u64>) -> Result<Exec> {
    match threads {
        Some(1) => Ok(Exec::Sequential),
        Some(k) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(k as usize)
                .build_global()
                .context("configuring the thread pool")?;
            Ok(Exec::Parallel)
        }
        None => Ok(Exec::Parallel),
    }
}

#[cfg(not(feature = "parallel"))]
fn executor(_threads: Option<u64>) -> Result<Exec> {
    Ok(Exec::Sequential)
}

/// Standard output or the `--out` file.
fn output(cfg: &RunConfig) -> Result<Box<dyn Write>> {
    Ok(match &cfg.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(std::io::stdout().lock())),
    })
}

fn verify_actions(cfg: &RunConfig, case: Option<ActionCase>, exec: Exec) -> Result<Outcome> {
    let cases = match case {
        Some(c) => vec![c],
        None => ActionCase::ALL.to_vec(),
    };
    let count = cfg.samples as usize;
    let mut out = output(cfg)?;
    let mut outcome = Outcome::Pass;
    for case in cases {
        // One stream per case so a single-case run reproduces the full run.
        let stream = ActionCase::ALL
            .iter()
            .position(|&c| c == case)
            .expect("listed") as u64;
        let mut rng = sampling::rng_stream(cfg.seed, stream);
        let hom_samples = actions::sample_homomorphism(&mut rng, count);
        let conj_samples = actions::sample_conjugation(case, &mut rng, count);
        let hom = actions::verify_homomorphism(case, &hom_samples, exec);
        let conj = actions::verify_conjugation(case, &conj_samples, exec)
            .with_context(|| format!("sampling conjugation identity for {case}"))?;
        let comm = actions::generator_commutator_norm(case);
        let ok = hom.passes(cfg.tol) && conj.passes(cfg.tol) && comm <= cfg.tol;
        writeln!(
            out,
            "{case} homomorphism={:.3e} conjugation={:.3e} commutator={:.3e} samples={count} {}",
            hom.max_residual,
            conj.max_residual,
            comm,
            if ok { "ok" } else { "FAIL" }
        )?;
        if !ok {
            outcome = Outcome::Fail;
            if let Some(k) = hom.worst.filter(|_| !hom.passes(cfg.tol)) {
                let (v, w) = hom_samples[k];
                writeln!(
                    out,
                    "  homomorphism sample #{k}: v=({}, {}) w=({}, {})",
                    v.s, v.t, w.s, w.t
                )?;
            }
            if let Some(k) = conj.worst.filter(|_| !conj.passes(cfg.tol)) {
                let (p, v) = conj_samples[k];
                writeln!(
                    out,
                    "  conjugation sample #{k}: p=({}, {}) v=({}, {})",
                    p.x, p.y, v.s, v.t
                )?;
            }
        }
    }
    out.flush()?;
    Ok(outcome)
}

fn map_line(cfg: &RunConfig, map: MapId, line: Line, range: Option<(f64, f64)>) -> Result<Outcome> {
    let translate = curves::line_image_translate(map, line)?;
    let range = range.unwrap_or_else(|| curves::default_range(map, line));
    let count = usize::try_from(cfg.samples).context("sample count")?;
    let samples = curves::sample_line_image(map, line, range, count)?;
    let worst = samples
        .iter()
        .map(|p| translate.residual(*p).abs())
        .fold(0.0, f64::max);
    if !(worst <= cfg.tol) {
        eprintln!(
            "translate residual {worst:e} exceeds tolerance {:e}",
            cfg.tol
        );
        return Ok(Outcome::Fail);
    }
    let mut out = output(cfg)?;
    io::write_line_samples(&mut out, &translate, &samples)?;
    Ok(Outcome::Pass)
}

fn read_file<T>(
    path: &Path,
    parse: impl FnOnce(BufReader<File>) -> Result<T, io::IoError>,
) -> Result<T> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    parse(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))
}

fn write_file(
    dir: &Path,
    name: &str,
    write: impl FnOnce(BufWriter<File>) -> std::io::Result<()>,
) -> Result<()> {
    let path = dir.join(name);
    let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
    write(BufWriter::new(file)).with_context(|| format!("writing {}", path.display()))
}

fn arrange(
    cfg: &RunConfig,
    n: Option<u64>,
    map: Option<MapId>,
    files: Option<(PathBuf, PathBuf)>,
    check: bool,
    exec: Exec,
) -> Result<Outcome> {
    let arr = match (files, n) {
        (Some((points, lines)), _) => IntArrangement::new(
            read_file(&points, io::read_int_points)?,
            read_file(&lines, io::read_lines)?,
        )?,
        (None, Some(n)) => arrangements::elekes(n)?,
        (None, None) => bail!("either --n or --points/--lines is required"),
    };
    let dir = cfg.out.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    write_file(&dir, "points.csv", |w| {
        io::write_int_points(w, arr.points())
    })?;
    write_file(&dir, "lines.csv", |w| io::write_lines(w, arr.lines()))?;

    let report = arrangements::count_incidences_exact(&arr, exec);
    println!(
        "N={}, M={}, I={}, st_ratio={}",
        report.n_points,
        report.n_curves,
        report.incidences,
        format_real(report.st_ratio)
    );
    let mut outcome = Outcome::Pass;
    if check {
        let brute = arrangements::count_incidences_bruteforce(&arr, exec).incidences;
        println!("brute-force I={brute}");
        if brute != report.incidences {
            outcome = Outcome::Fail;
        }
    }
    if let Some(map) = map {
        let mapped = arrangements::map_arrangement(&arr, map)?;
        write_file(&dir, "curves.csv", |w| io::write_curves(w, &mapped.curves))?;
        write_file(&dir, "image_points.csv", |w| {
            io::write_points(w, &mapped.points)
        })?;
        match arrangements::count_curve_incidences(&mapped, cfg.tol, exec) {
            Ok(c) => println!(
                "{map}: pullback I={}, residual I={}",
                c.pullback, c.residual
            ),
            Err(arrangements::ArrangementError::CountMismatch {
                pullback,
                residual,
                pairs,
            }) => {
                println!("{map}: pullback I={pullback}, residual I={residual} MISMATCH");
                for (i, j) in pairs.iter().take(20) {
                    println!(
                        "  point #{i} {:?} / line #{j} {:?}",
                        arr.points()[*i],
                        arr.lines()[*j]
                    );
                }
                outcome = Outcome::Fail;
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(outcome)
}

fn count_unit_distances(
    cfg: &RunConfig,
    sizes: &[u64],
    check: bool,
    exec: Exec,
) -> Result<Outcome> {
    let mut rows = Vec::with_capacity(sizes.len());
    let mut outcome = Outcome::Pass;
    for &n in sizes {
        let grid = ScaledGrid::new(n)?;
        let count = unit_distance::unit_pairs_exact(&grid)?;
        if check {
            if n > BRUTE_FORCE_MAX_N {
                bail!("--check supports n ≤ {BRUTE_FORCE_MAX_N}, got {n}");
            }
            let brute =
                unit_distance::unit_pairs_bruteforce(&grid.points(), &UnitBall, 1e-12, exec);
            if brute != count {
                eprintln!("n={n}: exact count {count} but brute force {brute}");
                outcome = Outcome::Fail;
            }
        }
        rows.push((grid.len()?, count));
    }
    let mut out = output(cfg)?;
    writeln!(out, "N,count")?;
    for (big_n, count) in &rows {
        writeln!(out, "{big_n},{count}")?;
    }
    out.flush()?;
    drop(out);
    match unit_distance::exponent_fit(&rows) {
        Ok(slope) => eprintln!("slope={}", format_real(slope)),
        Err(e) => eprintln!("slope not fitted: {e}"),
    }
    Ok(outcome)
}

fn export_svg(cfg: &RunConfig, input: &Path, style: SvgStyle) -> Result<Outcome> {
    let series = read_file(input, io::read_series)?;
    let svg =
        io::render_svg(&series, style).with_context(|| format!("rendering {}", input.display()))?;
    let mut out = output(cfg)?;
    out.write_all(svg.as_bytes())?;
    out.flush()?;
    Ok(Outcome::Pass)
}
