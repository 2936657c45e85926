//! `ratmap`: exact invariants of rational maps of the projective line.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ratmap_cli::commands::{self, exit, exit_code, CommandResult};
use ratmap_cli::suites::DEFAULT_SEED;
use ratmap_core::spectrum::Convention;

#[derive(Parser)]
#[command(name = "ratmap", version, about = "Exact invariants of rational self-maps of P¹")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Point,
    Cycle,
    Twisted,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Point => Convention::PerPoint,
            ConventionArg::Cycle => Convention::PerCycle,
            ConventionArg::Twisted => Convention::Twisted,
        }
    }
}

/// Maps and points are JSON files `{"d": 2, "a": [...], "b": [...]}` or
/// inline strings "a0,…,ad;b0,…,bd" of rationals.
#[derive(Subcommand)]
enum Command {
    /// Multiplier spectrum σ⁽ⁿ⁾ of a map.
    Invariants {
        #[arg(long)]
        map: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ConventionArg::Cycle)]
        convention: ConventionArg,
    },
    /// Conjugate f⁻¹ ∘ φ ∘ f by the matrix "alpha,beta,gamma,delta".
    Conjugate {
        #[arg(long)]
        map: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// The n-th iterate.
    Iterate {
        #[arg(long)]
        map: String,
        #[arg(long)]
        n: u32,
    },
    /// Periodic-point form Φₙ, or Φₙ* with --formal.
    Dynatomic {
        #[arg(long)]
        map: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        formal: bool,
    },
    /// Table of νₙ = deg Φₙ*.
    NuTable {
        #[arg(long, default_value = "2..8")]
        d: String,
        #[arg(long, default_value = "1..8")]
        n: String,
    },
    /// GIT stability of a point; with --strict, exit 2 unless stable.
    Stability {
        #[arg(long)]
        point: String,
        #[arg(long)]
        strict: bool,
    },
    /// Degree-2 moduli coordinates (σ₁, σ₂).
    Milnor {
        #[arg(long)]
        map: String,
    },
    /// Moduli coordinate [ρ : ρσ₁ : ρσ₂] of a quadratic point (maps and boundary).
    ModuliCoordinate {
        #[arg(long)]
        point: String,
    },
    /// A quadratic map with the given (σ₁, σ₂).
    FromModuli {
        #[arg(long, allow_hyphen_values = true)]
        s1: String,
        #[arg(long, allow_hyphen_values = true)]
        s2: String,
    },
    /// A representative with good reduction at an odd prime p.
    GoodReduction {
        #[arg(long, allow_hyphen_values = true)]
        s1: String,
        #[arg(long, allow_hyphen_values = true)]
        s2: String,
        #[arg(short)]
        p: u64,
    },
    /// Boundary normal form [A·XY, XY + B·Y²] of a stable degenerate point.
    Boundary {
        #[arg(long)]
        point: String,
    },
    /// Boundary parameters {[A:B], [B:A]} over [0 : u : v].
    BoundaryInverse {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Run a property suite ("all" for every suite).
    Verify {
        #[arg(long)]
        suite: String,
        /// Defaults to $RATMAP_SEED, else a fixed built-in seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        count: Option<usize>,
        /// Include wall-clock timing in the report (breaks byte-identity).
        #[arg(long)]
        timing: bool,
    },
}

fn default_seed() -> Result<u64, String> {
    match std::env::var("RATMAP_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| format!("RATMAP_SEED={s:?} is not a 64-bit integer")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn run(command: Command) -> CommandResult {
    match command {
        Command::Invariants { map, n, convention } => commands::invariants(&map, n, convention.into()),
        Command::Conjugate { map, matrix } => commands::conjugate(&map, &matrix),
        Command::Iterate { map, n } => commands::iterate(&map, n),
        Command::Dynatomic { map, n, formal } => commands::dynatomic(&map, n, formal),
        Command::NuTable { d, n } => commands::nu_table(&d, &n),
        Command::Stability { point, strict } => commands::stability(&point, strict),
        Command::Milnor { map } => commands::milnor(&map),
        Command::ModuliCoordinate { point } => commands::moduli_coordinate(&point),
        Command::FromModuli { s1, s2 } => commands::from_moduli_cmd(&s1, &s2),
        Command::GoodReduction { s1, s2, p } => commands::good_reduction(&s1, &s2, p),
        Command::Boundary { point } => commands::boundary(&point),
        Command::BoundaryInverse { u, v } => commands::boundary_inverse_cmd(&u, &v),
        Command::Verify { suite, seed, count, timing } => {
            let seed = match seed {
                Some(s) => s,
                None => default_seed().map_err(ratmap_core::Error::Invalid)?,
            };
            commands::verify(&suite, seed, count, timing)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            let body = match cli.output {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
                Format::Text => out.text,
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout(), "{body}");
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            match cli.output {
                Format::Json => eprintln!("{}", serde_json::json!({ "error": e.to_string() })),
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
