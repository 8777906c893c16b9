mod commands;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use vlogic_core::{BasisSpec, Error};

#[derive(Parser, Debug)]
#[command(name = "vlogic", version, about = "Vector-matrix logic: operators, formulas, identities and counterfactuals")]
struct Cli {
    /// Truth basis: set1, set2 or random.
    #[arg(long, global = true, default_value = "set1")]
    basis: String,

    /// Dimension Q of the truth vectors (random basis only).
    #[arg(long, global = true)]
    dim: Option<usize>,

    /// Seed for the random basis.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Tolerance for identity checks.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tolerance: f64,

    #[arg(long, global = true, value_enum, default_value_t = Output::Pretty)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the operators I, N, A, B, L, D, C.
    Ops,
    /// Evaluate a formula under `id=value` bindings (`-` reads the formula from stdin).
    Eval {
        formula: String,
        bindings: Vec<String>,
    },
    /// Print the crisp truth table of a formula.
    Table { formula: String },
    /// Run the operator identity suite.
    Identities,
    /// Run a counterfactual scenario file.
    Cf { path: std::path::PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Pretty,
    Json,
}

pub struct Config {
    pub basis: BasisSpec,
    pub tolerance: f64,
    pub output: Output,
}

/// Failure categories, each with its own exit status.
#[derive(Debug)]
pub enum Failure {
    /// Identity suite ran but some checks failed; the report is already printed.
    Identities,
    Core(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Identities => 1,
            Failure::Core(e) if !e.is_input_error() => 2,
            Failure::Core(_) | Failure::Input(_) => 3,
        }
    }
}

fn config(cli: &Cli) -> Result<Config, Failure> {
    let basis = BasisSpec::from_parts(&cli.basis, cli.dim, cli.seed)?;
    if !(cli.tolerance >= 0.0 && cli.tolerance.is_finite()) {
        return Err(Failure::Input(format!(
            "tolerance must be a finite non-negative number, got {}",
            cli.tolerance
        )));
    }
    Ok(Config {
        basis,
        tolerance: cli.tolerance,
        output: cli.output,
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let config = config(&cli)?;
    match cli.command {
        Command::Ops => commands::ops(&config),
        Command::Eval { formula, bindings } => commands::eval(&formula, &bindings, &config),
        Command::Table { formula } => commands::table(&formula, &config),
        Command::Identities => commands::identities(&config),
        Command::Cf { path } => commands::cf(&path, &config),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Identities => {}
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Input(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
