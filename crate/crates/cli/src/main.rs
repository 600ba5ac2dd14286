mod commands;
mod target;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use target::FnArgs;

/// Exact analysis and simulation of one-(qu)bit limited-space computations.
#[derive(Parser, Debug)]
#[command(name = "limspace", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact classical approximation ratio, membership in Omega and a witness program.
    Classical(ClassicalArgs),
    /// Build a circuit for a function and verify it by exhaustive simulation.
    Synth(SynthArgs),
    /// Simulate a circuit file or builtin against a function, optionally with noise.
    Simulate(SimulateArgs),
    /// Fourier-based bounds on the classical ratio.
    Bounds(BoundsArgs),
    /// Smallest arity at which a noisy circuit family beats the classical bound.
    Crossover(CrossoverArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
    Qasm,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    /// Quantum signal processing followed by gate merging.
    Qsp,
    /// Hand-built construction (relative phase where available).
    Direct,
    /// Hand-built true implementation (SLSB only).
    True,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Builtin {
    Fig1,
    SlsbRelative,
    SlsbTrue,
    Ip,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyArg {
    Ip,
    Slsb,
    Both,
}

#[derive(Args, Debug)]
struct ClassicalArgs {
    #[command(flatten)]
    target: FnArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct SynthArgs {
    #[command(flatten)]
    target: FnArgs,
    #[arg(long, value_enum, default_value_t = Method::Qsp)]
    method: Method,
    /// Impose only the derivative conditions needed at each weight and search for a shorter sequence.
    #[arg(long)]
    relax: bool,
    /// Skip the gate-merging pass after QSP compilation.
    #[arg(long)]
    no_merge: bool,
    /// Where to write the circuit (JSON, or QASM with --format qasm).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest accepted deviation of the ASP from 1.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    /// Circuit JSON file.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    circuit: Option<PathBuf>,
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
    #[command(flatten)]
    target: FnArgs,
    /// Per-gate failure probability for the noise model.
    #[arg(long)]
    eps: Option<f64>,
    /// Monte Carlo shots (requires --eps).
    #[arg(long, requires = "eps")]
    shots: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Where to write the per-input CSV.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[command(flatten)]
    target: FnArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct CrossoverArgs {
    #[arg(long)]
    eps: f64,
    #[arg(long, value_enum, default_value_t = FamilyArg::Both)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Exit status and message of a failed command.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
}

impl From<limspace::Error> for CliError {
    fn from(e: limspace::Error) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classical(a) => commands::classical(a),
        Command::Synth(a) => commands::synth(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::Bounds(a) => commands::bounds(a),
        Command::Crossover(a) => commands::crossover(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
