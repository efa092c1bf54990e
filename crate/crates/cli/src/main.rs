//! Command-line front end: single multiplicity queries, full diagram
//! dumps, the closed-form vs oracle verification harness, dimension
//! checks and a benchmark of the closed evaluation.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fundstring::weights::Family;

mod bench;
mod diagram;
mod mult;
mod query;
mod verify_cmd;

use query::VariantArg;

#[derive(Parser)]
#[command(
    name = "fundstring",
    version,
    about = "Exact weight multiplicities for fundamental strings of the classical Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of one weight in one representation
    Mult(MultArgs),
    /// Every weight of a representation with its multiplicity
    Diagram(DiagramArgs),
    /// Cross-check the closed formulas against the recursion oracle
    Verify(VerifyArgs),
    /// Dimension of a representation
    Dim(DimArgs),
    /// Time the closed evaluation over random weights (fixed seed)
    Bench(BenchArgs),
}

/// Identifies a representation on the command line.
#[derive(Args, Debug)]
struct RepArgs {
    /// Family: A, B, C or D
    #[arg(long, value_enum, ignore_case = true)]
    family: FamilyArg,
    /// Rank of the algebra
    #[arg(long)]
    rank: usize,
    /// String position k (highest weight k*w1 + wp)
    #[arg(long, default_value_t = 0)]
    k: i64,
    /// Fundamental index p; required for the string variant, implied otherwise
    #[arg(long)]
    p: Option<usize>,
    /// One of: string, spin+, spin-, split, split-, split+
    #[arg(long, default_value = "string", value_parser = query::parse_variant)]
    variant: VariantArg,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FamilyArg {
    A,
    B,
    C,
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
            FamilyArg::C => Family::C,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Plain,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct MultArgs {
    #[command(flatten)]
    rep: RepArgs,
    /// Weight, e.g. `2,-1,0` or `1/2,1/2,-1/2`
    #[arg(long)]
    weight: String,
    #[arg(long, value_enum, default_value_t = OutputMode::Plain)]
    output: OutputMode,
}

#[derive(Args, Debug)]
struct DiagramArgs {
    #[command(flatten)]
    rep: RepArgs,
    /// Lift the desk-scale guard (rank <= 8 and k <= 64)
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value_t = OutputMode::Plain)]
    output: OutputMode,
}

#[derive(Args, Debug)]
struct DimArgs {
    #[command(flatten)]
    rep: RepArgs,
    #[arg(long, value_enum, default_value_t = OutputMode::Plain)]
    output: OutputMode,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Families to cover, e.g. `BCD` or `A`
    #[arg(long, default_value = "ABCD")]
    families: String,
    #[arg(long, default_value_t = 3)]
    max_rank: usize,
    #[arg(long, default_value_t = 4)]
    max_k: i64,
    /// Worker threads; 0 means one per available core
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = OutputMode::Plain)]
    output: OutputMode,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Family: A, B, C or D
    #[arg(long, value_enum, ignore_case = true, default_value_t = FamilyArg::C)]
    family: FamilyArg,
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    k: i64,
    #[arg(long)]
    p: usize,
    /// Number of random weights to evaluate
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Seed for the sample stream
    #[arg(long, default_value_t = 0xF0DA)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = OutputMode::Plain)]
    output: OutputMode,
}

/// A usage-level failure: printed to stderr, exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Mult(args) => mult::run(&args),
        Command::Diagram(args) => diagram::run(&args),
        Command::Dim(args) => mult::run_dim(&args),
        Command::Verify(args) => verify_cmd::run(&args),
        Command::Bench(args) => bench::run(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn csv_quote(field: &str) -> String {
    format!("\"{field}\"")
}
