//! `lieyam` — verify Lie-Yamaguti algebras, representations, Nijenhuis and
//! Rota-Baxter structures, r-matrices and quadratic forms from JSON files.
//!
//! Exit codes: 0 all checks pass, 1 a check fails, 2 usage or input error,
//! 3 a derived consequence is violated on input that passed its defining
//! checks.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "lieyam", version, about = "Exact verification of Lie-Yamaguti structures")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for randomized commands; echoed in every report.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Highest cochain degree the complexes may be evaluated at.
    #[arg(long, global = true)]
    pub degree_cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of an algebra, a representation, or both.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        file: PathBuf,
    },
    /// Dimension of a cohomology group of a pair.
    Cohomology {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        degree: usize,
        /// Degree cap for this computation (overrides --degree-cap).
        #[arg(long)]
        cap: Option<usize>,
        /// Which complex to use.
        #[arg(long, value_enum, default_value_t = ComplexKind::Pair)]
        complex: ComplexKind,
    },
    /// Check that N is a Nijenhuis operator.
    VerifyNijenhuis {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long = "N")]
        n: PathBuf,
    },
    /// Check that (N, S) is a Nijenhuis structure on a pair.
    VerifyNijenhuisStructure {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long = "N")]
        n: PathBuf,
        #[arg(long = "S")]
        s: PathBuf,
    },
    /// Check that T is a relative Rota-Baxter operator.
    VerifyRbo {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long = "T")]
        t: PathBuf,
    },
    /// Check that (T, S, N) is a relative Rota-Baxter-Nijenhuis structure.
    VerifyRbn(RbnArgs),
    /// Check that two relative Rota-Baxter operators are compatible.
    VerifyCompatible {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long = "T1")]
        t1: PathBuf,
        #[arg(long = "T2")]
        t2: PathBuf,
    },
    /// Check the strong condition on (T, S); with N, also derive the
    /// compatible pair (T, T∘S).
    VerifyStrong {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long = "T")]
        t: PathBuf,
        #[arg(long = "S")]
        s: PathBuf,
        #[arg(long = "N")]
        n: Option<PathBuf>,
    },
    /// Emit the trivial deformation generated by a Nijenhuis structure.
    Deform {
        #[arg(long)]
        pair: PathBuf,
        /// Use the deformation generated by the Nijenhuis structure (N, S).
        #[arg(long, required = true)]
        from_nijenhuis: bool,
        #[arg(long = "N")]
        n: PathBuf,
        #[arg(long = "S")]
        s: PathBuf,
    },
    /// Quadratic forms, r-matrices and conversions.
    Quadratic {
        #[command(subcommand)]
        action: QuadraticCommand,
    },
    /// Grid searches used to build fixtures.
    Search {
        #[command(subcommand)]
        target: SearchCommand,
    },
}

#[derive(Args, Debug)]
pub struct RbnArgs {
    #[arg(long)]
    pub pair: PathBuf,
    #[arg(long = "T")]
    pub t: PathBuf,
    #[arg(long = "S")]
    pub s: PathBuf,
    #[arg(long = "N")]
    pub n: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Algebra,
    Rep,
    Pair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComplexKind {
    /// The three-component complex of the pair.
    Pair,
    /// The Yamaguti complex of the algebra with coefficients in V.
    Yamaguti,
}

#[derive(Subcommand, Debug)]
pub enum QuadraticCommand {
    /// Check that B is a nondegenerate invariant form, with transport identities.
    CheckForm {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long = "B")]
        b: PathBuf,
    },
    /// Check that the skew 2-tensor π is an r-matrix.
    RMatrix {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        pi: PathBuf,
    },
    /// Check that (N, S) is a dual Nijenhuis structure (both formulations).
    DualNijenhuis {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long = "N")]
        n: PathBuf,
        #[arg(long = "S")]
        s: PathBuf,
    },
    /// Rota-Baxter-Nijenhuis (R, N) → r-matrix-Nijenhuis (π, N).
    RbnToRmn {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long = "B")]
        b: PathBuf,
        #[arg(long = "R")]
        r: PathBuf,
        #[arg(long = "N")]
        n: PathBuf,
    },
    /// r-matrix-Nijenhuis (π, N) → Rota-Baxter-Nijenhuis (R, N).
    RmnToRbn {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long = "B")]
        b: PathBuf,
        #[arg(long)]
        pi: PathBuf,
        #[arg(long = "N")]
        n: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum SearchCommand {
    /// Relative Rota-Baxter operators on a pair.
    Rb {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = vec![-1i64, 0, 1])]
        values: Vec<i64>,
    },
    /// Nijenhuis operators on an algebra.
    Nijenhuis {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = vec![-1i64, 0, 1])]
        values: Vec<i64>,
    },
    /// Compatible pairs (T₁, T₂) with T₂ invertible.
    Compatible {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = vec![-1i64, 0, 1])]
        values: Vec<i64>,
    },
    /// Nondegenerate invariant symmetric forms on an algebra.
    Forms {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = vec![-1i64, 0, 1, 2])]
        values: Vec<i64>,
    },
    /// Rota-Baxter-Nijenhuis structures (R, N) over a quadratic algebra with
    /// R skew and N compatible with B, each converted to an r-matrix.
    Quadratic {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long = "B")]
        b: PathBuf,
        /// Entries for the r-matrix components.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = vec![-2i64, -1, 0, 1, 2])]
        pi_values: Vec<i64>,
        /// Entries for N.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = vec![-1i64, 0, 1])]
        n_values: Vec<i64>,
    },
    /// Seeded random valid pairs (uses --seed).
    Random {
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.format == Format::Json;
    match commands::run(&cli) {
        Ok(report) => {
            print!("{}", report.render(json));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::error_code(&e) as u8)
        }
    }
}
