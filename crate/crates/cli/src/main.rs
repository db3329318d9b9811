//! Command-line front end: multiplicities of torus-knot singularities by
//! three methods, singularity invariants, the rational-curve count table,
//! quotient dimensions and local lengths of polynomial systems, and
//! stable-map scheme lengths for parametrized plane curves.

mod commands;
mod output;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{GlobalOpts, Method};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "deltamult",
    version,
    about = "Exact multiplicities of plane curve singularities and rational-curve counts"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Re-run Groebner computations modulo 32003 and compare
    #[arg(long, global = true)]
    modular_check: bool,

    /// Reduction step limit for Groebner runs (default 10^7)
    #[arg(long, global = true)]
    step_limit: Option<u64>,

    /// Seed for the deterministic marked-data search (default 1)
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of x^q = y^p: closed form, Groebner length, weighted Bezout
    TorusMult {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        /// Which route to compute (default: all three, cross-checked)
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Delta invariant, conductor, semigroup gaps and multiplicity of x^q = y^p
    Delta {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Rational-curve counts n(0..=gmax)
    Counts {
        #[arg(long)]
        gmax: u64,
    },
    /// Quotient dimension of a polynomial system, or its local length at the origin
    Length {
        /// Polynomial system file (vars/order declarations, one polynomial per line)
        #[arg(long)]
        input: PathBuf,
        /// Length of the localization at the origin instead of the global dimension
        #[arg(long)]
        local: bool,
        /// Stabilization cap for the local computation (default 50)
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Local length of the stable-map scheme of a parametrized plane curve
    StableMap {
        /// Stable-map document (degree, param_x/y/z, implicit, optional marked data)
        #[arg(long)]
        input: PathBuf,
        /// Stabilization cap for the local computation (default 50)
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Check a stable-map document against every input invariant
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = GlobalOpts {
        modular_check: cli.modular_check,
        step_limit: cli.step_limit,
        seed: cli.seed,
    };

    let result = match &cli.command {
        Command::TorusMult { p, q, method } => commands::torus_mult(*p, *q, *method, &opts),
        Command::Delta { p, q } => commands::delta(*p, *q),
        Command::Counts { gmax } => commands::counts(*gmax),
        Command::Length { input, local, cap } => commands::length(input, *local, *cap, &opts),
        Command::StableMap { input, cap } => commands::stable_map(input, *cap, &opts),
        Command::Validate { input } => commands::validate(input, &opts),
    };

    match cli.format {
        Format::Text => print!("{}", result.render_text()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&result.to_json()).expect("serializable envelope")
        ),
    }
    ExitCode::from(u8::try_from(result.exit_code()).unwrap_or(1))
}
