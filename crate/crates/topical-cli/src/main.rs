use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use topical_cli::{
    parse_probe_file, run_census, run_conjugate, run_eval, run_polar, run_support, run_verify,
    CliError,
};
use topical_core::{SemifieldKind, Vector};

/// Exact calculus over a top-enlarged idempotent semifield: evaluation,
/// Fenchel–Moreau conjugation, polar and support queries, and exhaustive
/// verification of the implemented laws on the Boolean model.
#[derive(Parser)]
#[command(name = "topical", version, max_term_width = 100)]
struct Cli {
    /// Base semifield: max-plus rationals or the Boolean chain.
    #[arg(long, global = true, value_enum, default_value_t = Semifield::Qmax)]
    semifield: Semifield,
    /// Expected dimension; inputs are validated against it.  Defaults to 2
    /// for verify/census.
    #[arg(long, global = true)]
    dim: Option<usize>,
    /// Seed for rational-mode probe sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// JSON input file (query envelope; schema depends on the subcommand).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Optional JSON file with extra probe vectors (array of vectors).
    #[arg(long, global = true)]
    probes: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Semifield {
    Qmax,
    Boolean,
}

impl From<Semifield> for SemifieldKind {
    fn from(s: Semifield) -> SemifieldKind {
        match s {
            Semifield::Qmax => SemifieldKind::RationalMaxPlus,
            Semifield::Boolean => SemifieldKind::Boolean,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function at a point.
    Eval,
    /// Compute a conjugate value with its exactness tag and witness.
    Conjugate,
    /// Polar, bar-polar, dual-polar, bipolar and support-function queries.
    Polar,
    /// Support-set membership, at-a-point forms, reconstruction,
    /// subdifferential membership.
    Support,
    /// Exhaustively verify one law (--theorem ID) or the whole catalog.
    Verify {
        /// Law identifier, or "all".
        #[arg(long)]
        theorem: Option<String>,
    },
    /// Classify every Boolean-model function of the given dimension.
    Census,
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    let path = path
        .as_ref()
        .ok_or_else(|| CliError::Parse("this subcommand needs --input FILE".into()))?;
    fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn read_probes(kind: SemifieldKind, path: &Option<PathBuf>) -> Result<Vec<Vector>, CliError> {
    match path {
        None => Ok(Vec::new()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", p.display())))?;
            parse_probe_file(kind, &text)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(String, i32), CliError> {
    let kind: SemifieldKind = cli.semifield.into();
    match &cli.command {
        Command::Eval => {
            let out = run_eval(kind, cli.dim, &read_input(&cli.input)?)?;
            Ok((out, 0))
        }
        Command::Conjugate => {
            let probes = read_probes(kind, &cli.probes)?;
            let out = run_conjugate(kind, cli.dim, cli.seed, &read_input(&cli.input)?, &probes)?;
            Ok((out, 0))
        }
        Command::Polar => {
            let out = run_polar(kind, cli.dim, &read_input(&cli.input)?)?;
            Ok((out, 0))
        }
        Command::Support => {
            let probes = read_probes(kind, &cli.probes)?;
            let out = run_support(kind, cli.dim, cli.seed, &read_input(&cli.input)?, &probes)?;
            Ok((out, 0))
        }
        Command::Verify { theorem } => {
            let dim = cli.dim.unwrap_or(2);
            let (out, all_passed) = run_verify(kind, dim, theorem.as_deref())?;
            Ok((out, if all_passed { 0 } else { 1 }))
        }
        Command::Census => {
            let dim = cli.dim.unwrap_or(2);
            let out = run_census(kind, dim)?;
            Ok((out, 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((output, code)) => {
            // A closed pipe downstream is not our failure; stay quiet.
            use std::io::Write;
            let _ = writeln!(std::io::stdout(), "{output}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
