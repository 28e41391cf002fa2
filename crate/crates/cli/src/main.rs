//! `punctured-plane`: deficiency indices, bound states, densities and oracle checks
//! for a free particle on the punctured plane.

mod commands;
mod error;
mod output;
mod parse;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use commands::Status;
use error::{EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION};
use output::Format;

#[derive(Parser)]
#[command(
    name = "punctured-plane",
    version,
    about = "Self-adjoint extensions and bound states on the punctured plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Deficiency indices per channel and in total.
    Classify(ClassifyArgs),
    /// Bound-state energies of one extension.
    Spectrum(SpectrumArgs),
    /// E/kappa over a grid of the extension phase.
    Scan(ScanArgs),
    /// Radial probability density of a bound state.
    Density(DensityArgs),
    /// Run oracle suites: specfun, energies, norms, domains or all.
    Verify(VerifyArgs),
    /// Write the full run record as JSON.
    Export(ExportArgs),
}

#[derive(Args)]
pub struct PhysArgs {
    /// Deficiency scale kappa (energy units).
    #[arg(long, default_value_t = 1.0)]
    pub kappa: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    #[arg(long, default_value_t = 0.5)]
    pub mass: f64,
}

#[derive(Args)]
pub struct ExtArgs {
    /// Quasi-periodicity in [0, 1), decimal or p/q.
    #[arg(long)]
    pub theta: Option<String>,
    /// Phase on the m = -1 channel (or the single phase at theta = 0), e.g. 0.3, -pi, 3pi/4.
    #[arg(long, allow_hyphen_values = true)]
    pub eta: Option<String>,
    /// Phase on the m = 0 channel.
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<String>,
    /// Restrict to time-reversal-invariant extensions.
    #[arg(long)]
    pub time_reversal: bool,
}

#[derive(Args)]
pub struct OutArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; defaults to out/<command>-<config hash>.<ext>.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub theta: String,
    /// Single channel; without it m = -3..3 is tabulated.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[command(flatten)]
    pub phys: PhysArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub ext: ExtArgs,
    #[command(flatten)]
    pub phys: PhysArgs,
    /// Re-run the configuration stored in an exported JSON file.
    #[arg(long, conflicts_with_all = ["theta", "eta", "rho", "time_reversal"])]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub theta: Option<String>,
    /// Channel to scan (0 or -1) for theta in (0, 1).
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long)]
    pub time_reversal: bool,
    /// Grid start; without a range the grid is the cell midpoints of [-pi, pi).
    #[arg(long, allow_hyphen_values = true)]
    pub param_min: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub param_max: Option<String>,
    #[arg(long, default_value_t = 1000)]
    pub points: usize,
    #[command(flatten)]
    pub phys: PhysArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args)]
pub struct DensityArgs {
    #[command(flatten)]
    pub ext: ExtArgs,
    /// Channel of the state when there are two levels (default: the lowest).
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long, default_value_t = 1e-8)]
    pub r_min: f64,
    #[arg(long, default_value_t = 20.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 2001)]
    pub points: usize,
    #[command(flatten)]
    pub phys: PhysArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_parser = ["specfun", "energies", "norms", "domains", "all"])]
    pub scope: String,
    #[command(flatten)]
    pub phys: PhysArgs,
    #[command(flatten)]
    pub out: OutArgs,
    /// Relative error added to closed-form energies (self-test of the checker).
    #[arg(long, hide = true)]
    pub inject_energy_fault: Option<f64>,
}

#[derive(Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub ext: ExtArgs,
    #[command(flatten)]
    pub phys: PhysArgs,
    #[arg(long, conflicts_with_all = ["theta", "eta", "rho", "time_reversal"])]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn main() {
    let code = match Cli::try_parse() {
        Ok(cli) => {
            let result = match &cli.command {
                Command::Classify(a) => commands::classify(a),
                Command::Spectrum(a) => commands::spectrum(a),
                Command::Scan(a) => commands::scan(a),
                Command::Density(a) => commands::density(a),
                Command::Verify(a) => commands::verify(a),
                Command::Export(a) => commands::export(a),
            };
            match result {
                Ok(Status::Ok) => EXIT_OK,
                Ok(Status::VerificationFailed) => EXIT_VERIFICATION,
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            }
        }
    };
    std::process::exit(code);
}
