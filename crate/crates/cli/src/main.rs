#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use curvelines::io::SvgStyle;
use curvelines::sampling::GENERATOR_NAME;
use curvelines::{ActionCase, MapId};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "curvelines",
    version,
    about = "Line-to-curve-translate maps, incidence arrangements and unit distances"
)]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Residual tolerance
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = positive_f64)]
    pub tol: f64,
    /// Number of random or sampled points
    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Seed for the pseudo-random generator
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Output file (directory for `arrange`); standard output when omitted
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for counting; 1 runs sequentially
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the six affine actions: homomorphism, conjugation by φ and
    /// generator commutativity
    VerifyActions {
        /// Restrict to one case (A1..A6)
        #[arg(long)]
        case: Option<ActionCase>,
    },
    /// Sample the image of the line y = a·x + b and print it with its
    /// curve translate
    #[command(allow_negative_numbers = true)]
    MapLine {
        #[arg(long)]
        map: MapId,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        /// Start of the parameter range (default depends on the map)
        #[arg(long, requires = "t_max")]
        t_min: Option<f64>,
        /// End of the parameter range
        #[arg(long, requires = "t_min")]
        t_max: Option<f64>,
    },
    /// Build an integer point/line arrangement, count incidences and
    /// optionally push it through a curve map
    Arrange {
        /// Size of the Cartesian-product construction
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), required_unless_present = "points")]
        n: Option<u64>,
        #[arg(long)]
        map: Option<MapId>,
        /// Read points from a CSV file instead of building them
        #[arg(long, requires = "lines", conflicts_with = "n")]
        points: Option<PathBuf>,
        /// Read lines from a CSV file
        #[arg(long, requires = "points")]
        lines: Option<PathBuf>,
        /// Also count by brute force and compare
        #[arg(long)]
        check: bool,
    },
    /// Count unit distances on the scaled n × n² grids and fit the exponent
    CountUnitDistances {
        /// Grid sizes, e.g. --n 8,16,32,64
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
        n: Vec<u64>,
        /// Also count by brute force and compare (small n only)
        #[arg(long)]
        check: bool,
    },
    /// Render point series from a CSV file as SVG
    ExportSvg {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "line")]
        style: SvgStyle,
    },
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be a positive finite number".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let command = Cli::command().after_help(format!(
        "Random samples come from {GENERATOR_NAME}.\n\
         Exit status: 0 success, 1 verification failure, 2 usage or domain error."
    ));
    let cli = match Cli::from_arg_matches(&command.get_matches()) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match commands::run(cli) {
        Ok(commands::Outcome::Pass) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
