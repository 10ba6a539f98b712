use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jfrieze::commands::{self, Method, Outcome, Transform};
use jfrieze::{json, render, CliError};

/// Juggler's friezes: construct, check, transform, solve and render.
#[derive(Parser)]
#[command(name = "jfrieze", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a juggling function given in siteswap notation.
    Siteswap {
        /// Digits, or comma-separated throws.
        pattern: String,
        /// Emit JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Check the prefrieze, frieze and tameness conditions.
    Check {
        /// Frieze JSON, or - for stdin.
        frieze: PathBuf,
    },
    /// Build F(A) from a unimodular matrix.
    Construct {
        /// Matrix JSON, or - for stdin.
        matrix: PathBuf,
        /// Juggling function of the matrix.
        #[arg(long)]
        siteswap: String,
        #[arg(long, value_enum, default_value = "det")]
        method: Method,
        /// Cross-check both methods and the frieze conditions.
        #[arg(long)]
        verify: bool,
    },
    /// Apply a twist, inverse twist, complement, dual or F^{-1}.
    Transform {
        /// Matrix or frieze JSON, or - for stdin.
        input: PathBuf,
        #[arg(long, value_enum)]
        op: Transform,
        /// Juggling function of an input matrix.
        #[arg(long)]
        siteswap: Option<String>,
    },
    /// Emit the solution window of a frieze.
    Solve {
        /// Frieze JSON, or - for stdin.
        frieze: PathBuf,
        /// Emit the basis indexed by the landing schedule at this index.
        #[arg(long, allow_negative_numbers = true)]
        basis: Option<i64>,
    },
    /// Draw a frieze as an ASCII diamond strip.
    Render {
        /// Frieze JSON, or - for stdin.
        frieze: PathBuf,
        #[arg(long, default_value_t = 1)]
        periods: usize,
    },
    /// Count positive integral SL(2)-friezes of a given height.
    Enumerate {
        #[arg(long)]
        height: usize,
        /// Largest quiddity entry tried (defaults to the height).
        #[arg(long)]
        bound: Option<u64>,
        /// Include every frieze found.
        #[arg(long)]
        dump: bool,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Siteswap { pattern, json } => commands::siteswap(&pattern, json),
        Command::Check { frieze } => Ok(commands::check(&json::frieze_from_json(&read(&frieze)?)?)),
        Command::Construct { matrix, siteswap, method, verify } => {
            commands::construct(&read(&matrix)?, &siteswap, method, verify)
        }
        Command::Transform { input, op, siteswap } => commands::transform(&read(&input)?, op, siteswap.as_deref()),
        Command::Solve { frieze, basis } => commands::solve(&json::frieze_from_json(&read(&frieze)?)?, basis),
        Command::Render { frieze, periods } => {
            if periods == 0 {
                return Err(CliError::Input("--periods must be at least 1".into()));
            }
            let c = json::frieze_from_json(&read(&frieze)?)?;
            Ok(Outcome { stdout: render::render(&c, periods), code: 0 })
        }
        Command::Enumerate { height, bound, dump } => commands::enumerate(height, bound, dump),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("jfrieze: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
