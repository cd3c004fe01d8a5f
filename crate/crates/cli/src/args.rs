use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "dirac-yukawa", version, about = "Dirac-Yukawa bound states: tables, spectra, sweeps, wave functions")]
pub struct Cli {
    /// Unit system of all inputs and outputs (hbar = c = 1, fm^-1).
    #[arg(long, value_enum, default_value_t = Units::Natural, global = true)]
    pub units: Units,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Natural,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute one of the benchmark tables.
    Table(TableArgs),
    /// Both energy roots of one state.
    Spectrum(SpectrumArgs),
    /// Energies over a grid of one parameter.
    Sweep(SweepArgs),
    /// Radial spinor components on a logarithmic grid.
    Wavefunction(WavefunctionArgs),
    /// Numerov shooting eigenvalue of the radial Schrodinger equation.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableId {
    #[value(name = "2", alias = "table2")]
    Two,
    #[value(name = "3", alias = "table3")]
    Three,
    #[value(name = "4", alias = "table4")]
    Four,
    #[value(name = "5", alias = "table5")]
    Five,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub id: TableId,
    /// Add reference values and absolute differences.
    #[arg(long)]
    pub diff: bool,
    /// Mass M (tables 2, 4, 5) or m (table 3).
    #[arg(long = "M")]
    pub mass: Option<f64>,
    /// Coupling A.
    #[arg(long = "A")]
    pub coupling: Option<f64>,
    /// Screening alpha (tables 2, 4, 5).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Symmetry constant (tables 4, 5).
    #[arg(long = "C", allow_hyphen_values = true)]
    pub symmetry: Option<f64>,
    /// Shooting grid step for table 3.
    #[arg(long, default_value_t = dirac_yukawa::oracle::DEFAULT_STEP)]
    pub step: f64,
    /// Skip the shooting column of table 3.
    #[arg(long)]
    pub no_oracle: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Spin,
    Pseudospin,
}

#[derive(Debug, Clone, Args)]
pub struct PhysArgs {
    #[arg(long = "M", default_value_t = 5.0, allow_hyphen_values = true)]
    pub mass: f64,
    #[arg(long = "A", default_value_t = 1.0, allow_hyphen_values = true)]
    pub coupling: f64,
    #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
    pub alpha: f64,
    /// Spin symmetry constant; selects the spin branch.
    #[arg(long = "Cs", conflicts_with = "cps", allow_hyphen_values = true)]
    pub cs: Option<f64>,
    /// Pseudospin symmetry constant; selects the pseudospin branch.
    #[arg(long = "Cps", allow_hyphen_values = true)]
    pub cps: Option<f64>,
    /// Branch when neither constant is given (both then default to 0).
    #[arg(long, value_enum)]
    pub branch: Option<BranchArg>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub phys: PhysArgs,
    #[arg(long)]
    pub n: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: i32,
    /// Strength of an added D/r^2 term, solved self-consistently.
    #[arg(long = "D", default_value_t = 0.0)]
    pub strength: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    #[value(name = "A")]
    Coupling,
    #[value(name = "alpha")]
    Alpha,
    #[value(name = "Cs")]
    Cs,
    #[value(name = "Cps")]
    Cps,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub phys: PhysArgs,
    #[arg(long, value_enum)]
    pub param: SweepParam,
    #[arg(long, allow_hyphen_values = true, requires_all = ["to", "step"], conflicts_with = "values")]
    pub from: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<f64>,
    #[arg(long)]
    pub step: Option<f64>,
    /// Explicit comma-separated grid instead of --from/--to/--step.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub values: Option<Vec<f64>>,
    /// States as n:kappa, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0:1", value_parser = parse_state, allow_hyphen_values = true)]
    pub states: Vec<(u32, i32)>,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_state(s: &str) -> Result<(u32, i32), String> {
    let (n, k) = s
        .split_once(':')
        .ok_or_else(|| format!("expected n:kappa, got {s:?}"))?;
    let n = n.trim().parse().map_err(|e| format!("bad n in {s:?}: {e}"))?;
    let k = k.trim().parse().map_err(|e| format!("bad kappa in {s:?}: {e}"))?;
    Ok((n, k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RootArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub phys: PhysArgs,
    #[arg(long)]
    pub n: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: i32,
    /// Root to use; defaults to the first one that admits a wave function.
    #[arg(long, value_enum)]
    pub root: Option<RootArg>,
    #[arg(long, default_value_t = 512)]
    pub points: usize,
    #[arg(long, default_value_t = 1e-4)]
    pub r_min: f64,
    /// Grid end; defaults to 25/(2 alpha nu).
    #[arg(long)]
    pub r_max: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialArg {
    Yukawa,
    Approx,
    Coulomb,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub potential: PotentialArg,
    #[arg(long, default_value_t = 1.0)]
    pub m: f64,
    #[arg(long = "A", default_value_t = std::f64::consts::SQRT_2)]
    pub coupling: f64,
    /// Screening; overrides --g.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Screening as a fraction of A.
    #[arg(long, default_value_t = 0.01)]
    pub g: f64,
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    #[arg(long, default_value_t = dirac_yukawa::oracle::DEFAULT_STEP)]
    pub h: f64,
    #[arg(long)]
    pub r_max: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}
