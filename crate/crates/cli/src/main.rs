mod commands;
mod inputs;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use verlinde_core::Error;

#[derive(Parser)]
#[command(name = "verlinde", version, about = "Exact checks of Verlinde-type identities on small algebras and Drinfeld doubles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    inputs: Inputs,
}

#[derive(Args, Clone, Debug, Default)]
pub struct Inputs {
    /// Built-in group name (z<n>, s3, klein, d<n>, trivial) or a group file.
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Built-in algebra name or an algebra file.
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    /// Hopf algebra file, optionally with R-matrix and ribbon element.
    #[arg(long, global = true)]
    pub hopf: Option<String>,
    /// Ground field for built-in names: q, fp:<p> or cyc:<n>.
    #[arg(long, global = true, conflicts_with = "characteristic")]
    pub field: Option<String>,
    /// Characteristic shorthand: 0 picks the default field of the group, p picks fp:<p>.
    #[arg(long = "char", global = true)]
    pub characteristic: Option<u64>,
    /// Hochschild degree bound.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// S-matrix file.
    #[arg(long, global = true)]
    pub smatrix: Option<String>,
}

#[derive(Subcommand, Clone, Debug)]
enum Command {
    /// S, T, twists and dimensions of a double, with the modular relations.
    ModularData,
    /// Fusion multiplicities of simple modules from tensor-product decomposition.
    Fusion,
    /// Verlinde coefficients from an S-matrix, compared with the fusion oracle when a group is given.
    VerlindeCheck,
    /// S-conjugated fusion product is diagonal.
    Diagonalize,
    /// Star product table of a symmetric Frobenius algebra.
    StarProduct,
    /// Cartan matrix and handle traces.
    Cartan,
    /// Block partition and block diagonality of the star product.
    Blocks,
    /// Hochschild cohomology and homology dimensions up to the degree bound.
    Hochschild {
        /// Print cocycle representatives.
        #[arg(long)]
        cochains: bool,
    },
    /// Nonzero Gerstenhaber bracket on HH^1 of F_p[Z_p].
    Bracket,
    /// Homotopy and partial-composition sign identities on random cochains.
    HomotopyCheck {
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// SL(2,Z) action on conjugacy orbits of commuting pairs.
    Sl2z {
        /// Extra matrix `a,b,c,d` (row major) to act with.
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
    },
    /// K0 congruence mod [A,A] for a Drinfeld double.
    K0Check,
    /// Internal characters turn tensor products into S-conjugated products.
    CorgrvCheck,
}

/// Nonzero exit code for each error class; 1 is reserved for a failed check.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::Unsupported(_) => 3,
        Error::NonSplit(_) => 4,
        Error::CatalogGap(_) => 5,
        Error::Invalid(_) => 6,
        Error::DegreeOverflow { .. } => 7,
        Error::DimensionMismatch(_) => 8,
        Error::Singular(_) => 9,
        Error::UnknownName(_) => 10,
    }
}

/// Unreadable input files.
const EXIT_IO: u8 = 11;
/// Command-line usage errors.
const EXIT_USAGE: u8 = 64;

pub enum Failure {
    Core(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli.command, &cli.inputs) {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn error_classes_have_distinct_codes() {
        let errors = [
            Error::parse(1, ""),
            Error::Unsupported(String::new()),
            Error::NonSplit(String::new()),
            Error::CatalogGap(String::new()),
            Error::Invalid(String::new()),
            Error::DegreeOverflow { requested: 5, bound: 4 },
            Error::DimensionMismatch(String::new()),
            Error::Singular(String::new()),
            Error::UnknownName(String::new()),
        ];
        let mut codes: Vec<u8> = errors.iter().map(exit_code).chain([EXIT_IO, EXIT_USAGE]).collect();
        assert!(codes.iter().all(|&c| c > 1));
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), errors.len() + 2);
    }
}
