mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dyncharge::constants::ConstantsTable;

use commands::{OscillatorArgs, ProtonRadius};
use report::Report;

const EXIT_USAGE: u8 = 2;
const EXIT_COMPUTE: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "dyncharge",
    version,
    about = "Dynamic-charge model calculations and checks"
)]
struct Cli {
    /// File of `key=value` constant overrides.
    #[arg(long, global = true)]
    constants: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the payload here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hydrogen energy ledger and the 4π/η estimate of ħ.
    Hydrogen {
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Proton radius in fm, or `from-woods-saxon`.
        #[arg(long = "rp-fm", default_value = "1.4")]
        rp_fm: ProtonRadius,
    },
    /// Gravity frequency band and solar gravity flux at the Earth.
    Gravity {
        #[arg(long, default_value_t = 1.0)]
        ku: f64,
        /// Source mass for the lower ratio bound, kg (default: proton mass).
        #[arg(long)]
        mass: Option<f64>,
        /// Electromagnetic frequency to scale, Hz (default: hydrogen frequency).
        #[arg(long = "nu-e")]
        nu_e: Option<f64>,
    },
    /// Dimensional check of a named equation.
    UnitsCheck { equation: String },
    /// Dynamic charge and exterior field over one period.
    Oscillator {
        #[arg(long = "rp-fm", default_value_t = 1.4)]
        rp_fm: f64,
        /// Displacement relative to the proton radius (default: x(1)/3).
        #[arg(long = "d-over-rp")]
        d_over_rp: Option<f64>,
        /// Oscillation frequency, Hz (default: hydrogen frequency).
        #[arg(long = "nu-hz")]
        nu_hz: Option<f64>,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        /// Probe radius in proton radii.
        #[arg(long = "r-probe", default_value_t = 10.0)]
        r_probe: f64,
    },
    /// Finite-difference Poisson check of the exterior field.
    PoissonVerify {
        #[arg(long = "grid-points", default_value_t = 1024)]
        grid_points: usize,
        #[arg(long = "rp-fm", default_value_t = 1.4)]
        rp_fm: f64,
    },
    /// Effective constants table with provenance.
    Constants,
}

fn load_constants(path: &Option<PathBuf>) -> Result<ConstantsTable, CliError> {
    match path {
        None => Ok(ConstantsTable::default()),
        Some(p) => ConstantsTable::load_file(p)
            .map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
    }
}

fn meta(report: &Report, table: &ConstantsTable) -> serde_json::Value {
    json!({
        "tool": "dyncharge",
        "version": env!("CARGO_PKG_VERSION"),
        "command": report.command,
        "overridden_constants": table.overridden_keys(),
    })
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let table = load_constants(&cli.constants)?;
    let mut status = 0;
    let report = match &cli.command {
        Command::Hydrogen { n, rp_fm } => commands::hydrogen(&table, *n, *rp_fm)?,
        Command::Gravity { ku, mass, nu_e } => commands::gravity(&table, *ku, *mass, *nu_e)?,
        Command::UnitsCheck { equation } => {
            let (report, matches) = commands::units_check(equation)?;
            if !matches {
                status = EXIT_COMPUTE;
            }
            report
        }
        Command::Oscillator {
            rp_fm,
            d_over_rp,
            nu_hz,
            samples,
            r_probe,
        } => commands::oscillator(
            &table,
            &OscillatorArgs {
                rp_fm: *rp_fm,
                d_over_rp: *d_over_rp,
                nu_hz: *nu_hz,
                samples: *samples,
                r_probe: *r_probe,
            },
        )?,
        Command::PoissonVerify { grid_points, rp_fm } => {
            commands::poisson_verify(&table, *grid_points, *rp_fm)?
        }
        Command::Constants => commands::constants(&table),
    };

    let payload = match cli.format {
        Format::Text => report.to_text(),
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(meta(&report, &table)),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{payload}"),
    }
    Ok(status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_COMPUTE)
        }
    }
}
