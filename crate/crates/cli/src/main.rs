use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use limspec::NearbyVariant;
use limspec_cli::{cmd_check, cmd_nearby, cmd_sp, CliError, Report};

/// Exact spectra and nearby-fiber classes of singularities.
#[derive(Parser)]
#[command(name = "limspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, Milnor number and monodromy of a weighted-homogeneous polynomial
    Sp {
        /// Polynomial, e.g. "x^2 + y^3"
        polynomial: String,
        /// Variables in exponent-vector order, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// Weights such as 1/2,1/3; inferred when omitted
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Nearby-fiber class of a simple-normal-crossing model file
    Nearby {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Total)]
        variant: Variant,
        /// Dimension used for the spectrum twist (default: `n` from the file)
        #[arg(long, allow_negative_numbers = true)]
        dim: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in cross-validation corpus
    Check {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Total,
    Open,
    Local,
}

impl From<Variant> for NearbyVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Total => NearbyVariant::TotalSpace,
            Variant::Open => NearbyVariant::OpenComplement,
            Variant::Local => NearbyVariant::Local,
        }
    }
}

fn run(command: Command) -> Result<(Report, bool), CliError> {
    Ok(match command {
        Command::Sp { polynomial, vars, weights, json } => {
            (Report::Sp(cmd_sp(&polynomial, &vars, weights.as_deref())?), json)
        }
        Command::Nearby { file, variant, dim, json } => {
            let report = cmd_nearby(&file, variant.into(), dim)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            (Report::Nearby(report), json)
        }
        Command::Check { json } => (Report::Check(cmd_check()), json),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((report, json)) => {
            let out = if json { report.to_json() } else { report.to_text() };
            print!("{out}");
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
