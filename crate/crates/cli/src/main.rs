//! `fatpoints`: bigraded Betti numbers, free resolutions, Hilbert functions
//! and the inverse interpolation problem for up to three fat points on an
//! ACI support in P¹×P¹.
//!
//! Exit codes: 0 for success (including an affirmative interpolation
//! verdict), 1 for a negative verdict or failed verification, 2 for usage
//! and input errors.

mod matrix_io;
mod render;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fatpoints_core::hilbert::{delta_table, hilbert_table};
use fatpoints_core::interp::{interpolate, Verdict};
use fatpoints_core::resolution::{betti_closed, res_recursive};
use fatpoints_core::types::{normalize, FatPointConfig};

#[derive(Parser)]
#[command(name = "fatpoints", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bigraded Betti numbers of the fat point ideal
    Betti(ConfigArgs),
    /// Twists of a minimal free resolution, level by level
    Resolution(ConfigArgs),
    /// Hilbert function table (row index a, column index b)
    Hilbert(TableArgs),
    /// First differences of the Hilbert function
    Delta(TableArgs),
    /// Decide whether a first-difference table comes from fat points
    Interpolate {
        /// CSV (one comma-separated row per line) or JSON `{"rows": [...]}`
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cross-check every computation path on all small configurations
    Verify {
        /// Largest multiplicity to enumerate (default 3)
        mmax: Option<u32>,
        /// Flag form of the same bound
        #[arg(long = "mmax", value_name = "N", conflicts_with = "mmax")]
        mmax_flag: Option<u32>,
        /// Include the Taylor-complex oracle checks
        #[arg(long, value_enum, default_value_t)]
        oracle: Switch,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Args)]
struct ConfigArgs {
    m11: u32,
    m12: u32,
    m21: u32,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    m11: u32,
    m12: u32,
    m21: u32,
    /// Largest row index (default m11 + m12 + m21)
    #[arg(long)]
    amax: Option<i64>,
    /// Largest column index (default m11 + m12 + m21)
    #[arg(long)]
    bmax: Option<i64>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Switch {
    #[default]
    On,
    Off,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn config_of(m11: u32, m12: u32, m21: u32) -> anyhow::Result<FatPointConfig> {
    let config = FatPointConfig::new(m11, m12, m21)?;
    if config.is_zero() {
        eprintln!("warning: empty configuration (unit ideal)");
    }
    Ok(config)
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Betti(args) => {
            let config = config_of(args.m11, args.m12, args.m21)?;
            let table = betti_closed(config);
            println!("{}", render::betti(config, &table, args.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Resolution(args) => {
            let config = config_of(args.m11, args.m12, args.m21)?;
            let (norm, transposed) = normalize(config);
            let mut resolution = res_recursive(norm)?;
            if transposed {
                resolution = resolution.transposed();
            }
            println!("{}", render::resolution(config, &resolution, args.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Hilbert(args) => {
            let config = config_of(args.m11, args.m12, args.m21)?;
            let bound = config.stabilization_bound();
            let table = hilbert_table(
                config,
                args.amax.unwrap_or(bound),
                args.bmax.unwrap_or(bound),
            );
            println!("{}", render::hilbert(config, &table, args.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Delta(args) => {
            let config = config_of(args.m11, args.m12, args.m21)?;
            let bound = config.stabilization_bound();
            let table = delta_table(
                config,
                args.amax.unwrap_or(bound),
                args.bmax.unwrap_or(bound),
            )
            .map_err(|e| {
                anyhow::anyhow!(e).context(format!(
                    "the window must cover the support of the first difference \
                     (amax and bmax at least {bound})"
                ))
            })?;
            println!("{}", render::delta(config, &table, args.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Interpolate { input, format } => {
            let matrix = matrix_io::read_delta_matrix(&input)?;
            let report = interpolate(&matrix);
            println!("{}", render::interp(&report, format));
            let code = match report.verdict {
                Verdict::IsHilbertFunction(_) => ExitCode::SUCCESS,
                Verdict::NotHilbertFunction | Verdict::NotCaseOne => ExitCode::from(1),
            };
            Ok(code)
        }
        Command::Verify {
            mmax,
            mmax_flag,
            oracle,
            format,
        } => {
            let mmax = mmax_flag.or(mmax).unwrap_or(3);
            let summary = verify::run(mmax, oracle == Switch::On);
            println!("{}", render::verify(&summary, format));
            let code = if summary.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            Ok(code)
        }
    }
}
