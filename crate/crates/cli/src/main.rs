//! `projew`: local obstructions for projective surfaces from the command line.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Failure;

#[derive(Parser)]
#[command(name = "projew", version, about = "Exact obstructions to projective Einstein-Weyl structures on surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Structure file (JSON).
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct PointArg {
    /// Evaluate at the point (X, Y); rational literals such as 1 or -3/2.
    #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
    at: Option<Vec<String>>,
}

#[derive(Subcommand)]
enum Command {
    /// Print rho, phi, ell, Y and W.
    Invariants {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        point: PointArg,
    },
    /// Compute the obstructions for the applicable branch.
    Obstruction {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        point: PointArg,
        /// Compute the determinants over Q(x, y). Can be slow and large.
        #[arg(long)]
        symbolic: bool,
        /// Largest number of terms allowed in a symbolic result.
        #[arg(long, default_value_t = 100_000)]
        max_terms: usize,
    },
    /// Evaluate the pEW residual for a candidate one-form alpha.
    CheckSolution {
        #[command(flatten)]
        common: Common,
        #[arg(long, num_args = 2, value_names = ["EXPR1", "EXPR2"], required = true, allow_hyphen_values = true)]
        alpha: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match &cli.command {
        Command::Invariants { common, point } => {
            (common, commands::invariants(&common.file, point.at.as_deref()))
        }
        Command::Obstruction {
            common,
            point,
            symbolic,
            max_terms,
        } => (
            common,
            commands::obstruction(&common.file, point.at.as_deref(), *symbolic, *max_terms),
        ),
        Command::CheckSolution { common, alpha } => {
            (common, commands::check_solution(&common.file, alpha))
        }
    };
    match result {
        Ok(outcome) => {
            let text = match common.format {
                Format::Text => outcome.report.to_text(),
                Format::Json => outcome.report.to_json() + "\n",
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(outcome.exit)
        }
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
