//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
//! or truncation error.

mod commands;
pub mod spec;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::fock::ModelParams;
use crate::Error;

pub use spec::{AxisSpec, BuiltState, GridSpec, StateSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

pub const DEFAULT_CUTOFF: usize = 40;

#[derive(Debug, Parser)]
#[command(name = "landau-husimi", version, about = "Husimi and Wigner distributions for an electron in a magnetic field")]
pub struct Cli {
    /// TOML file with `cutoff`, `m_omega` and `kappa` keys
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Fock cutoff per mode
    #[arg(long, global = true)]
    pub cutoff: Option<usize>,

    #[arg(long, global = true, allow_negative_numbers = true)]
    pub m_omega: Option<f64>,

    /// Husimi width parameter
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub kappa: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a distribution on a phase-space grid
    Grid(GridArgs),
    /// Compare one-sided Husimi integrals with broadened wavefunction densities
    Marginal(MarginalArgs),
    /// Run the built-in consistency suites
    Verify(VerifyArgs),
    /// Print position and momentum spreads of a state
    Uncertainty(UncertaintyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dist {
    Husimi,
    Wigner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MarginalAxis {
    /// integrate over γ at fixed ε
    Gamma,
    /// integrate over ε at fixed γ
    Epsilon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hermite,
    Closedform,
    Smoothing,
    Marginals,
    Squeeze,
    All,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long)]
    pub state: StateSpec,

    #[arg(long, value_enum, default_value = "husimi")]
    pub dist: Dist,

    /// e.g. `eps1=-3:3:7,eps2=0,gamma1=0,gamma2=0`
    #[arg(long, alias = "grid", allow_hyphen_values = true)]
    pub slice: GridSpec,

    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,

    /// Output file; standard output when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MarginalArgs {
    #[arg(long)]
    pub state: StateSpec,

    #[arg(long, value_enum)]
    pub axis: MarginalAxis,

    /// Fixed complex coordinate `re,im`; repeat for several points
    #[arg(long = "fixed", required = true, allow_hyphen_values = true, value_parser = spec::parse_complex)]
    pub fixed: Vec<crate::C64>,

    #[arg(long)]
    pub half_width: Option<f64>,

    /// Odd number of quadrature nodes per axis
    #[arg(long)]
    pub points: Option<usize>,

    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
}

#[derive(Debug, Args)]
pub struct UncertaintyArgs {
    #[arg(long)]
    pub state: StateSpec,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    cutoff: Option<usize>,
    m_omega: Option<f64>,
    kappa: Option<f64>,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numeric(String),
    VerifyFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => EXIT_USAGE,
            Self::Numeric(_) => EXIT_NUMERIC,
            Self::VerifyFailed(_) => EXIT_VERIFY,
        }
    }

    /// Library errors raised while checking inputs.
    pub(crate) fn input(e: Error) -> Self {
        match e {
            Error::Config(_) | Error::Domain(_) | Error::Bounds { .. } | Error::Shape(..) => Self::Usage(e.to_string()),
            other => Self::Numeric(other.to_string()),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Usage(m) => write!(f, "usage error: {m}"),
            Self::Numeric(m) => write!(f, "{m}"),
            Self::VerifyFailed(n) => write!(f, "{n} check(s) failed"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::Numeric(e.to_string())
    }
}

fn load_config(path: &Path) -> Result<FileConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
}

impl Cli {
    /// Flags override the config file, which overrides the defaults.
    pub fn params(&self) -> Result<ModelParams, CliError> {
        let file = match &self.config {
            Some(p) => load_config(p)?,
            None => FileConfig::default(),
        };
        let cutoff = self.cutoff.or(file.cutoff).unwrap_or(DEFAULT_CUTOFF);
        let m_omega = self.m_omega.or(file.m_omega).unwrap_or(1.0);
        let kappa = self.kappa.or(file.kappa).unwrap_or(1.0);
        ModelParams::new(m_omega, kappa, cutoff, cutoff).map_err(CliError::input)
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // --help and --version come through here with exit code 0
            if e.exit_code() == 0 {
                let _ = write!(stdout, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(stderr, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    match dispatch(&cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let params = cli.params()?;
    match &cli.command {
        Command::Grid(a) => commands::grid(a, &params, stdout),
        Command::Marginal(a) => commands::marginal(a, &params, stdout),
        Command::Verify(a) => {
            let failed = verify::run_suite(a.suite, &params, stdout)?;
            if failed > 0 {
                Err(CliError::VerifyFailed(failed))
            } else {
                Ok(())
            }
        }
        Command::Uncertainty(a) => commands::uncertainty(a, &params, stdout),
    }
}
