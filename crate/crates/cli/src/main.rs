//! `parkgram`: counts, enumerations, q-polynomials, grammar derivatives and
//! identity checks from the command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or precondition
//! error.

mod commands;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parkgram::Limits;

/// Default seed of the randomised `verify` suites.
pub const DEFAULT_SEED: u64 = 1729;

#[derive(Parser)]
#[command(
    name = "parkgram",
    version,
    about = "Vector and rational parking functions, exactly"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest derivative order (default from PARKGRAM_MAX_ORDER, else 12).
    #[arg(long, global = true)]
    pub max_order: Option<usize>,

    /// Largest sequence length for brute force (default from PARKGRAM_MAX_ENUM, else 8).
    #[arg(long, global = true)]
    pub max_enum: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Count parking functions.
    Count(CountArgs),
    /// List the u-parking functions for a threshold vector.
    Enumerate(EnumerateArgs),
    /// Test whether a sequence is a parking function.
    Check(CheckArgs),
    /// Generating polynomial of the number of ones.
    Qpoly(QpolyArgs),
    /// Apply a grammar derivative n times.
    Derive(DeriveArgs),
    /// List spec(k,b): length-k compositions of kb with prefix sums >= t*b.
    Spec(SpecArgs),
    /// Convert between sequence forms and labelled lattice paths.
    Convert(ConvertArgs),
    /// Run identity checks.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    /// alpha(alpha + n beta)^(n-1) for weights (alpha, beta, ..., beta).
    Basic,
    /// a^(b-1) for coprime (a,b).
    Rational,
    /// (ka,kb) parking functions with gcd(a,b) = 1.
    Periodic,
    /// An explicit threshold vector.
    U,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Method {
    Formula,
    Bruteforce,
    Egf,
    Grammar,
    Inclexcl,
}

#[derive(Args)]
pub struct CountArgs {
    pub kind: CountKind,
    #[arg(short)]
    pub a: Option<u64>,
    #[arg(short)]
    pub b: Option<u64>,
    #[arg(short)]
    pub k: Option<u64>,
    #[arg(short)]
    pub n: Option<u64>,
    /// First weight, for `basic` (accepts p/q).
    #[arg(long)]
    pub alpha: Option<String>,
    /// Remaining weights, for `basic` (accepts p/q).
    #[arg(long)]
    pub beta: Option<String>,
    /// Threshold vector, for `u` (comma-separated, accepts p/q).
    #[arg(short)]
    pub u: Option<String>,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// Run every applicable method and report whether they agree.
    #[arg(long)]
    pub all_methods: bool,
}

#[derive(Args)]
pub struct EnumerateArgs {
    /// Threshold vector (comma-separated, accepts p/q).
    #[arg(short, conflicts_with_all = ["a", "b"])]
    pub u: Option<String>,
    /// With -b: use the (ka,kb) thresholds 1 + floor(i a / b).
    #[arg(short, requires = "b")]
    pub a: Option<u64>,
    #[arg(short, requires = "a")]
    pub b: Option<u64>,
    #[arg(short, default_value_t = 1)]
    pub k: u64,
    /// Print only the number found.
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Args)]
pub struct CheckArgs {
    /// The sequence. 1-based for -u/-x, 0-based (a,b) form for -a/-b.
    #[arg(short)]
    pub s: String,
    #[arg(short, conflicts_with_all = ["x", "a"])]
    pub u: Option<String>,
    /// Weight vector (comma-separated, accepts p/q).
    #[arg(short, conflicts_with = "a")]
    pub x: Option<String>,
    #[arg(short, requires = "b")]
    pub a: Option<u64>,
    #[arg(short, requires = "a")]
    pub b: Option<u64>,
    #[arg(short, default_value_t = 1)]
    pub k: u64,
    /// With -a/-b: also split into basic blocks.
    #[arg(long, requires = "a")]
    pub blocks: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QKind {
    /// q(q+n)^(n-1).
    Classical,
    /// (q+a-1)(q+a-1+bn)^(n-1).
    Basic,
    /// q(q+lk)^(l-1).
    #[value(alias = "lemma52")]
    UnitHead,
    /// Spec-sum for a = 1 (mod b).
    #[value(alias = "thm24")]
    Periodic,
    /// Spec-sum of q^(j_1) for thresholds (1 x b, ..., d x b).
    #[value(alias = "finalcor")]
    Blocks,
    /// Direct enumeration over -u.
    Bruteforce,
}

#[derive(Args)]
pub struct QpolyArgs {
    pub kind: QKind,
    #[arg(short)]
    pub a: Option<u64>,
    #[arg(short)]
    pub b: Option<u64>,
    #[arg(short)]
    pub d: Option<u64>,
    #[arg(short)]
    pub k: Option<u64>,
    #[arg(short)]
    pub l: Option<u64>,
    #[arg(short)]
    pub n: Option<u64>,
    #[arg(short)]
    pub u: Option<String>,
    /// Compare against brute-force enumeration.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args)]
pub struct DeriveArgs {
    /// Built-in grammar: G, H, Hprime:k, H1:a:b, K:k, F.
    #[arg(short, required_unless_present = "rules")]
    pub g: Option<String>,
    /// Grammar file with one `var -> expression` rule per line.
    #[arg(long, conflicts_with = "g")]
    pub rules: Option<std::path::PathBuf>,
    /// Start expression.
    #[arg(short)]
    pub s: String,
    #[arg(short)]
    pub n: usize,
    /// Substitutions `var=value,...` (values accept p/q).
    #[arg(long)]
    pub subst: Option<String>,
    /// Evaluation hook; `spec:b=B` filters counter exponents by prefix sums.
    #[arg(long)]
    pub hook: Option<String>,
}

#[derive(Args)]
pub struct SpecArgs {
    #[arg(short)]
    pub k: u64,
    #[arg(short)]
    pub b: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// 0-based (a,b) form to 1-based u-form.
    Ab2u,
    /// 1-based u-form to 0-based (a,b) form.
    U2ab,
    /// 0-based (a,b) form to labelled lattice path.
    Pf2dyck,
    /// Labelled lattice path to 0-based (a,b) form.
    Dyck2pf,
}

#[derive(Args)]
pub struct ConvertArgs {
    pub direction: Direction,
    /// Sequence, or path such as "E[0]E[1]N N".
    #[arg(short)]
    pub s: String,
    #[arg(short)]
    pub a: Option<u64>,
    #[arg(short)]
    pub b: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Abel,
    #[value(alias = "cor3")]
    AbelUniform,
    Scaling,
    #[value(alias = "thm15")]
    Periodic,
    #[value(alias = "thm24")]
    QPeriodic,
    All,
}

#[derive(Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[arg(short, long)]
    pub k: Option<u64>,
    #[arg(short, long)]
    pub n: Option<u64>,
    #[arg(short)]
    pub a: Option<u64>,
    #[arg(short)]
    pub b: Option<u64>,
    #[arg(short)]
    pub d: Option<u64>,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Fewer trials and parameter sets.
    #[arg(long)]
    pub quick: bool,
}

/// Why a command stopped early.
pub enum Failure {
    /// Bad flags or an unmet precondition (exit 2).
    Usage(String),
    /// A check ran and did not hold (exit 1); carries the report.
    Verification(String),
}

impl From<parkgram::Error> for Failure {
    fn from(e: parkgram::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub type Outcome = Result<String, Failure>;

pub fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

pub fn required<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing required flag {flag}")))
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::from_env();
    if let Some(m) = cli.max_order {
        l.max_order = m;
    }
    if let Some(m) = cli.max_enum {
        l.max_enum_len = m;
    }
    l
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let lim = limits(&cli);
    let json = cli.json;
    let result = match &cli.command {
        Command::Count(a) => commands::count(a, json, &lim),
        Command::Enumerate(a) => commands::enumerate(a, json, &lim),
        Command::Check(a) => commands::check(a, json),
        Command::Qpoly(a) => commands::qpoly(a, json, &lim),
        Command::Derive(a) => commands::derive(a, json, &lim),
        Command::Spec(a) => commands::spec(a, json),
        Command::Convert(a) => commands::convert(a, json),
        Command::Verify(a) => verify::run(a, json, &lim),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
    }
}
