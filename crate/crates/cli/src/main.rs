//! `wormhole`: evaluate diagram files, inspect TQFT data and run WRT checks.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::CliError;

#[derive(Parser, Debug)]
#[command(name = "wormhole", version, about = "Bracket invariants of colored graphs in connected sums of S1xS2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the bracket of a closed diagram file.
    Eval {
        file: PathBuf,
        /// Use the brute-force state expansion instead of the transfer sweep.
        #[arg(long)]
        oracle: bool,
        /// Print a JSON record instead of the bare value.
        #[arg(long)]
        json: bool,
        /// Also compare against the WRT ratio for these r (JSON only), e.g. 5..10.
        #[arg(long, value_name = "A..B")]
        r_range: Option<String>,
    },
    /// Dimension of the space of a sphere with colored points.
    Dim {
        /// Comma-separated colors, e.g. 1,1,1,1.
        #[arg(long, value_name = "C1,C2,...")]
        points: String,
    },
    /// Gram matrix of the Catalan basis on 2n points of color 1.
    Gram {
        #[arg(short = 'n', value_name = "N")]
        n: usize,
        /// Also print the determinant and its degree in d.
        #[arg(long)]
        det: bool,
    },
    /// Matrix and trace of a tangle file acting on boundary spaces.
    Matrix {
        file: PathBuf,
        /// Expected boundary colors (checked against the file).
        #[arg(long, value_name = "C1,C2,...")]
        points: Option<String>,
        #[arg(long, value_enum, default_value_t = BasisArg::Tree)]
        basis: BasisArg,
    },
    /// Compare the bracket at A_r with the WRT ratio over a range of r.
    WrtCheck {
        file: PathBuf,
        #[arg(long, value_name = "A..B", default_value = "5..10")]
        r_range: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Parse and validate a diagram file, printing its canonical form.
    Parse { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Tree,
    Catalan,
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Eval { file, oracle, json, r_range } => commands::eval(&file, oracle, json, r_range.as_deref()),
        Command::Dim { points } => commands::dim(&points),
        Command::Gram { n, det } => commands::gram(n, det),
        Command::Matrix { file, points, basis } => {
            let kind = match basis {
                BasisArg::Tree => wormhole_core::tqft::BasisKind::Tree,
                BasisArg::Catalan => wormhole_core::tqft::BasisKind::Catalan,
            };
            commands::matrix(&file, points.as_deref(), kind)
        }
        Command::WrtCheck { file, r_range, tol, json } => commands::wrt_check(&file, &r_range, tol, json),
        Command::Parse { file } => commands::parse(&file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::WrtFailed(out)) => {
            print!("{out}");
            eprintln!("error: WRT check failed");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
