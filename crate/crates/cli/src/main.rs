//! `invar`: invariance, regularity and projection reports for problem files.

mod commands;
mod problem;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::Outcome;

#[derive(Parser, Debug)]
#[command(name = "invar", version, about = "Vector fields on projective space: invariance, regularity, projections and degree bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Problem file; `-` or omitted reads standard input.
    #[arg(short = 'i', long = "input", value_name = "FILE")]
    pub input: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a field leaves the scheme of an ideal invariant.
    CheckInvariance {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        vfield: Option<String>,
    },
    /// Castelnuovo-Mumford regularity of an ACM ideal.
    Regularity {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Arithmetically Cohen-Macaulay test.
    Acm {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Project a field from a generic center.
    Project {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ideal: Option<String>,
        /// ACM scheme containing the variety; defaults to the variety itself.
        #[arg(long = "acm-ideal")]
        acm_ideal: Option<String>,
        #[arg(long)]
        vfield: Option<String>,
        #[arg(long = "center-dim", default_value_t = 0)]
        center_dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate a degree bound with its hypotheses.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = ["1", "1star", "2", "3", "18"])]
        theorem: String,
        #[arg(long)]
        ideal: Option<String>,
        /// Ambient ACM curve (18).
        #[arg(long = "acm-ideal")]
        acm_ideal: Option<String>,
        /// ACM surface containing the curve (3).
        #[arg(long)]
        surface: Option<String>,
        /// Equation cutting the curve out of the surface (3).
        #[arg(long)]
        hyperplane: Option<String>,
        /// Degrees of a complete intersection (2); defaults to the generator degrees.
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
        /// Dimension of the scheme (1star); defaults to its computed dimension.
        #[arg(long)]
        dimension: Option<u32>,
        #[arg(long)]
        vfield: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a built-in instance as a problem file.
    Corpus {
        family: String,
        #[arg(long, default_value_t = 3)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        p: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
    },
    /// Minimal degree of a field leaving a hypersurface invariant.
    QInvariant {
        #[command(flatten)]
        input: Input,
        /// Polynomial text, or the name of a principal ideal in the input.
        #[arg(long)]
        poly: String,
        /// Characteristic when no problem file is given.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Singular scheme of a field.
    SingularScheme {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vfield: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Outcome::InputError } else { Outcome::Affirmative };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let (report, outcome) = match commands::run(cli.command) {
        Ok(done) => done,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.outcome() as u8);
        }
    };
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(report.as_bytes());
    let _ = out.flush();
    ExitCode::from(outcome as u8)
}
