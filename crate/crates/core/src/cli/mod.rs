//! Command-line front end; `main` only forwards to [`run`].

mod commands;
mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::{Error, RunConfig};

pub use output::Output;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_SIZE_LIMIT: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "cayley-pst", version, about = "State transfer on oriented normal Cayley graphs")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for target scans and certificate batches.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for the numerical table solver and random bases.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Acceptance residual for the character criterion (default 1e-8).
    #[arg(long, global = true)]
    pub criterion_tol: Option<f64>,
    /// Fidelity slack for the walk oracle (default 1e-7).
    #[arg(long, global = true)]
    pub oracle_tol: Option<f64>,
    /// Tolerance for character-table validation (default 1e-8).
    #[arg(long, global = true)]
    pub table_tol: Option<f64>,
    /// Candidate bound K for the time solver (default 4|G|).
    #[arg(long, global = true)]
    pub candidate_bound: Option<usize>,
    /// Largest group order built (default 4096).
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    /// Largest class count for the numerical table solver (default 128).
    #[arg(long, global = true)]
    pub max_classes: Option<usize>,
    /// Largest vertex count checked by the walk oracle.
    #[arg(long, global = true, default_value_t = 200)]
    pub oracle_limit: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and inspect groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// PST queries on one Cayley graph.
    #[command(subcommand)]
    Pst(PstCmd),
    /// Export a Cayley graph (dot, csv adjacency, json spectrum).
    Graph(GraphArgs),
    /// Run S_e over every oriented class union of a small group.
    Sweep(SweepArgs),
    /// Validate an imported character table and optionally check PST on it.
    Import(ImportArgs),
    /// Verify every shipped family certificate.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    Build(GroupArgs),
    Info(GroupArgs),
    /// Group table as JSON.
    Export(GroupArgs),
}

/// `z:8`, `z4^2`, `extraspecial3 1 --exponent 9`, `m2 5`,
/// `wreath --base z:3 --n 2` or `file <path>`.
#[derive(Debug, Args)]
pub struct GroupArgs {
    #[arg(required = true, num_args = 1..)]
    pub spec: Vec<String>,
    #[arg(long)]
    pub exponent: Option<u32>,
    #[arg(long)]
    pub base: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GraphSel {
    /// Group spec; `file:<path>` loads a group JSON document.
    #[arg(long)]
    pub group: String,
    /// Connection classes by index, e.g. `1,2,5`.
    #[arg(long, conflicts_with = "elements")]
    pub classes: Option<String>,
    /// One representative label per connection class, e.g. `x,(1,0)`.
    #[arg(long)]
    pub elements: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum PstCmd {
    /// Criterion and oracle at a given target and time.
    Check(PairArgs),
    /// Smallest PST time to a target.
    Solve(PairArgs),
    /// Full S_e report.
    Mst(PairArgs),
    /// Walk-matrix fidelity only; `--scan` emits a fidelity series.
    Oracle(PairArgs),
    /// Galois witness that no normal connection set reaches the target.
    Nonexist(PairArgs),
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub sel: GraphSel,
    /// Target element label or index.
    #[arg(long)]
    pub target: Option<String>,
    /// Time as a number or one of 2pi/3sqrt3, pi/2, pi/4.
    #[arg(long)]
    pub tau: Option<String>,
    /// With `solve`, look for a period instead (target may be the identity).
    #[arg(long)]
    pub period: bool,
    /// With `oracle`, scan `[0, T]` instead of a single time.
    #[arg(long)]
    pub scan: Option<f64>,
    #[arg(long, default_value_t = 2000)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub sel: GraphSel,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(required = true, num_args = 1..)]
    pub spec: Vec<String>,
    /// Largest group order accepted.
    #[arg(long, default_value_t = 16)]
    pub limit: usize,
}

#[derive(Debug, Args)]
pub struct ImportArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub classes: Option<String>,
    #[arg(long)]
    pub target_class: Option<usize>,
    #[arg(long)]
    pub tau: Option<String>,
    /// Also run the order-12 / order-6 triple-cover recipe.
    #[arg(long)]
    pub triple_cover: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Certificate file (defaults to the shipped list).
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    /// Character table to check with the triple-cover recipe.
    #[arg(long)]
    pub import_table: Option<PathBuf>,
    /// Regenerate the certificate list and write it here instead of verifying.
    #[arg(long)]
    pub emit_fixtures: Option<PathBuf>,
}

impl Cli {
    pub fn config(&self) -> crate::Result<RunConfig> {
        let mut cfg = RunConfig::default();
        if let Some(t) = self.threads {
            cfg.threads = t;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(x) = self.criterion_tol {
            cfg.criterion_tol = x;
        }
        if let Some(x) = self.oracle_tol {
            cfg.oracle_tol = x;
        }
        if let Some(x) = self.table_tol {
            cfg.table_tol = x;
        }
        if let Some(x) = self.max_order {
            cfg.max_order = x;
        }
        if let Some(x) = self.max_classes {
            cfg.max_classes = x;
        }
        cfg.candidate_bound = self.candidate_bound;
        cfg.validate()?;
        Ok(cfg)
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SizeLimit { .. } => EXIT_SIZE_LIMIT,
        Error::NumericalFailure(_) | Error::Inconsistency(_) | Error::InvariantBreach(_) => EXIT_VERIFICATION,
        _ => EXIT_VALIDATION,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            return Output::message(code, e.to_string(), e.use_stderr());
        }
    };
    match cli.config().and_then(|cfg| commands::dispatch(&cli, &cfg)) {
        Ok(out) => out,
        Err(e) => {
            let mut msg = format!("error: {e}");
            if let Error::SizeLimit { .. } = e {
                msg.push_str("\nhint: raise the limit with --max-order (or --limit for sweep)");
            }
            Output::message(exit_code(&e), msg, true)
        }
    }
}
