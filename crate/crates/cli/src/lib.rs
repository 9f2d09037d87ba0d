//! Command-line front end: argument parsing, dispatch and output.

mod commands;
mod error;
mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::CliError;
pub use verify::run_verification;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "ratell", version, about = "Exact computations for rationally elliptic spaces")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the exponent pairs of formal dimension N.
    Exponents { n: u32 },
    /// Test the strong arithmetic condition: `check-sac A.. -- B..`.
    CheckSac {
        a: Vec<u32>,
        #[arg(last = true)]
        b: Vec<u32>,
    },
    /// Betti numbers and duality diagnostics of a model file.
    Cohomology {
        file: String,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Decide whether homogeneous polynomials form a regular sequence.
    Regseq {
        #[arg(required = true)]
        polys: Vec<String>,
        /// Comma-separated variables; defaults to those appearing, sorted.
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Reduced Gröbner basis (weighted degree, then grevlex).
    Groebner {
        #[arg(required = true)]
        polys: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Binary and ternary cubic forms.
    Cubic {
        #[arg(value_enum)]
        action: CubicAction,
        expr: String,
        /// Number of variables (2 or 3); checked against the expression.
        #[arg(long)]
        b2: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Named models and quadric presentations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Classify a model of formal dimension 7.
    Classify7 { file: String },
    /// Classify a model of formal dimension 8.
    Classify8 { file: String },
    /// Classify a model of formal dimension 9.
    Classify9 { file: String },
    /// Run the reproduction checks.
    VerifyPaper {
        /// 3: dimension 6, 4: dimension 7, 5: dimensions 8 and 9.
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=5))]
        section: Option<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CubicAction {
    Classify,
    Elliptic,
    Associated,
    Sigma,
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Catalog entries and constructor families.
    List,
    /// Build a family member, e.g. `catalog build m-sigma 2`.
    Build {
        name: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(std::io::stderr(), "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match commands::dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "error: {e}");
            e.exit_code()
        }
    }
}
