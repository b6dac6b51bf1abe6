//! Command-line front end: Nakayama pair tables, verification runs with
//! structured reports, and JSON/CSV/text emission of algebras, invariants,
//! lattices and families.
//!
//! Exit codes: 0 pass, 2 axiom failure, 3 certificate refuted,
//! 4 precondition violation, 1 internal error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dereq_core::error::Error;
use dereq_core::{Fp, Rational};

mod emit;
pub mod model;
pub mod pairs;
mod verify;

pub use verify::{Check, Report, Status};

#[derive(Parser, Debug)]
#[command(name = "dereq", version, about = "Derived equivalences of Nakayama and lattice algebras")]
pub struct Cli {
    /// Ground field.
    #[arg(long, value_enum, default_value_t = FieldChoice::Q, global = true)]
    pub field: FieldChoice,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Refuse algebras of larger dimension.
    #[arg(long, default_value_t = 4000, global = true)]
    pub max_dim: usize,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldChoice {
    /// Rationals.
    Q,
    F101,
    F32003,
    F2147483647,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of Nakayama pairs N(n,l+1) ~ N(n,l).
    Pairs {
        #[arg(long, default_value_t = 5)]
        pmax: i64,
        #[arg(long, default_value_t = 5)]
        qmax: i64,
        #[arg(long, default_value_t = 5)]
        rmax: i64,
        #[arg(long, default_value_t = 30)]
        nmax: i64,
        /// Also compare Coxeter polynomials of each pair.
        #[arg(long)]
        certify: bool,
    },
    /// Build, check and certify one instance.
    #[command(subcommand)]
    Verify(VerifyKind),
    /// Dump an object.
    #[command(subcommand)]
    Emit(EmitKind),
    /// Run the family axioms on a family JSON file.
    FamilyCheck {
        #[arg(long)]
        input: PathBuf,
        /// Also run the Young-diagram axioms.
        #[arg(long)]
        young: bool,
        /// Also run the projection form of the Serre conditions.
        #[arg(long)]
        prime: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyKind {
    /// Shifted simples of L!(p;q) against the projectives of L(Y(p;q)).
    Duality(ShapeArgs),
    /// The family on Y(p,q,r) inside per N(pq-r, q+1).
    Nak {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        r: i64,
    },
    /// Lattice chain Y(s,t,u) to the transpose of Y(s,t-1,u-s).
    Main1 {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
        #[arg(long)]
        u: i64,
    },
    /// Lattice chain Y(p+1,q,q-1) to the transpose of Y(q+1,p,p-1).
    Main3 {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// One mutation of a family, with its inverse.
    Mutation(MutationArgs),
    /// Coxeter certificate for N(n,l) against N(n,l2).
    Pair {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        l2: usize,
    },
    /// Random Serre duality and Euler form checks over Nakayama algebras.
    Homalg {
        #[arg(long, default_value_t = 30)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
}

/// A Young diagram given either as compositions or as `Y(s,t,u)`.
#[derive(Args, Debug, Clone, Default)]
pub struct ShapeArgs {
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    pub q: Vec<i64>,
    #[arg(long)]
    pub s: Option<i64>,
    #[arg(long)]
    pub t: Option<i64>,
    #[arg(long)]
    pub u: Option<i64>,
}

/// A support: `--young s,t,u` or a lattice JSON file.
#[derive(Args, Debug, Clone, Default)]
pub struct SupportArgs {
    #[arg(long, value_delimiter = ',')]
    pub young: Vec<i64>,
    #[arg(long)]
    pub lattice_file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MutationOp {
    I,
    IInv,
    Ti,
    TiInv,
    Ii,
    IiInv,
    Tii,
    TiiInv,
}

#[derive(Args, Debug, Clone)]
pub struct MutationArgs {
    #[arg(long, value_enum)]
    pub op: MutationOp,
    #[arg(long)]
    pub k: i64,
    /// Row length for the block mutations.
    #[arg(long, default_value_t = 0)]
    pub h: i64,
    #[command(flatten)]
    pub support: SupportArgs,
    /// Family JSON to mutate instead of the projectives of L(S).
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraKind {
    Nakayama,
    Lattice,
    Shriek,
    Nn,
}

#[derive(Args, Debug, Clone, Default)]
pub struct AlgebraArgs {
    /// Inferred from the other flags when omitted.
    #[arg(long, value_enum)]
    pub algebra: Option<AlgebraKind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    pub q: Vec<i64>,
    #[arg(long)]
    pub lo: Option<i64>,
    #[arg(long)]
    pub hi: Option<i64>,
    #[command(flatten)]
    pub support: SupportArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Trivial,
    Duality,
    Nak,
    Lad,
    LadPrime,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    pub q: Vec<i64>,
    #[arg(long)]
    pub r: Option<i64>,
    #[command(flatten)]
    pub support: SupportArgs,
}

#[derive(Subcommand, Debug)]
pub enum EmitKind {
    /// Quiver, relations and dimension.
    Algebra(AlgebraArgs),
    /// Cartan matrix.
    Cartan(AlgebraArgs),
    /// Coxeter polynomial coefficients, lowest degree first.
    Coxeter(AlgebraArgs),
    /// Points of a support.
    Lattice(LatticeArgs),
    /// A constructed family with its complexes.
    Family(FamilyArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct LatticeArgs {
    #[command(flatten)]
    pub support: SupportArgs,
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<i64>,
    #[arg(long, value_delimiter = ',')]
    pub q: Vec<i64>,
}

/// What a command prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub text: String,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { code: 0, text }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Precondition(_) | Error::NonUnimodularCartan(_) => 4,
        Error::Verification(_) => 2,
        Error::AlgebraMismatch | Error::SearchTooLarge(_) => 1,
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn error_output(cli: &Cli, e: &Error) -> Output {
    let code = exit_code(e);
    let text = match cli.format {
        Format::Json => json(&serde_json::json!({ "status": Status::from_code(code).as_str(), "error": e.to_string() })),
        _ => format!("error: {e}"),
    };
    Output { code, text }
}

pub fn run(cli: &Cli) -> Output {
    let result = match cli.field {
        FieldChoice::Q => run_over::<Rational>(cli),
        FieldChoice::F101 => run_over::<Fp<101>>(cli),
        FieldChoice::F32003 => run_over::<Fp<32003>>(cli),
        FieldChoice::F2147483647 => run_over::<Fp<2147483647>>(cli),
    };
    result.unwrap_or_else(|e| error_output(cli, &e))
}

fn run_over<F: dereq_core::Field>(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Pairs { pmax, qmax, rmax, nmax, certify } => emit::pairs::<F>(cli, *pmax, *qmax, *rmax, *nmax, *certify),
        Command::Verify(kind) => {
            let report = verify::run::<F>(cli, kind)?;
            Ok(Output { code: report.status.code(), text: report.render(cli.format) })
        }
        Command::Emit(what) => emit::run::<F>(cli, what),
        Command::FamilyCheck { input, young, prime } => {
            let report = verify::family_check::<F>(input, *young, *prime)?;
            Ok(Output { code: report.status.code(), text: report.render(cli.format) })
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Error> {
    serde_json::from_str(&read_file(path)?).map_err(|e| Error::Precondition(format!("bad JSON in {}: {e}", path.display())))
}
