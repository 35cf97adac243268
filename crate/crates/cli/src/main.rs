//! `tinkit`: generation, detection, decomposition, oracles, lifts, cographs
//! and MWIS over PACE `.gr`/`.td` files.
//!
//! Every run prints one JSON run report on stdout. Exit codes: 0 success,
//! 1 a certificate was returned (input outside the requested class) or an
//! acceptance criterion failed, 2 input error, 3 search budget exhausted.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Exit, RunReport};

#[derive(Parser, Debug)]
#[command(
    name = "tinkit",
    version,
    about = "Tree decompositions with bounded independence number"
)]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = tinkit::suite::DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads for parallel stages.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Drop wall-clock timings from the report so reruns are byte-identical.
    #[arg(long, global = true)]
    pub deterministic: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a graph family as a .gr file.
    Gen(GenArgs),
    /// Search for an induced copy of a pattern.
    Detect(DetectArgs),
    /// Build a tree decomposition with a chosen strategy.
    Decompose(DecomposeArgs),
    /// Check a .td against a .gr.
    Validate(ValidateArgs),
    /// Exact value of alpha, tw, tin or ibn.
    Oracle(OracleArgs),
    /// Lift a host decomposition to the intersection graph of a subgraph family.
    Lift(LiftArgs),
    /// Decompose the line graph via a host decomposition.
    LineTd(LineTdArgs),
    /// Cotree, exact tin and decomposition of a P4-free graph.
    Cograph(CographArgs),
    /// Maximum weight independent set.
    Mwis(MwisArgs),
    /// Run the acceptance suite.
    VerifyPaper(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `K_{n,n}`.
    Biclique,
    /// `K_{1,n}`.
    Star,
    /// `S_{n,n,n}`.
    Sp,
    /// `T_{n,n,n}`.
    Tp,
    /// Elementary `n`-wall.
    Wall,
    /// Subdivided-`K_n` witness.
    #[value(name = "Gn")]
    Gn,
    /// `L(K_n)`.
    LineComplete,
    Gnp,
    Tree,
    Cograph,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// Edge probability for `gnp`.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PatternArg {
    /// `K_{1,size}`.
    Star,
    /// `P_size`.
    Path,
    /// `C_size`.
    Cycle,
    /// `S_{size,size,size}`.
    S,
    /// `T_{size,size,size}`.
    T,
}

#[derive(Args, Debug)]
pub struct DetectArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub pattern: PatternArg,
    #[arg(long)]
    pub size: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    StarPath,
    Backbone,
    Cograph,
    Heuristic,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub strategy: Strategy,
    /// Excluded star `K_{1,d}` (star-path, backbone).
    #[arg(long)]
    pub d: Option<usize>,
    /// Excluded path `P_s` (star-path).
    #[arg(long)]
    pub s: Option<usize>,
    /// Excluded `S_p`, `T_p` (backbone).
    #[arg(long)]
    pub p: Option<usize>,
    /// Exclude `k` disjoint copies instead of one (backbone).
    #[arg(long)]
    pub k: Option<usize>,
    /// Where to write the .td; embedded in the report otherwise.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub td: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Alpha,
    Tw,
    Tin,
    Ibn,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(value_enum)]
    pub quantity: Quantity,
    pub graph: PathBuf,
}

#[derive(Args, Debug)]
pub struct LiftArgs {
    #[arg(long)]
    pub host: PathBuf,
    #[arg(long)]
    pub td: PathBuf,
    /// JSON array of connected host vertex sets (0-based).
    #[arg(long)]
    pub family: PathBuf,
    /// Where to write the intersection graph.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Where to write the lifted decomposition.
    #[arg(long)]
    pub td_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct LineTdArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Host decomposition; a heuristic one is used otherwise.
    #[arg(long)]
    pub td: Option<PathBuf>,
    /// Where to write the line graph.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub td_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CographArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub td_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MwisArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// JSON array of weights: integers or {"num", "den"} objects.
    #[arg(long)]
    pub weights: PathBuf,
    /// Decomposition to run on; chosen automatically otherwise.
    #[arg(long)]
    pub td: Option<PathBuf>,
    /// Class hint: star size.
    #[arg(long)]
    pub d: Option<usize>,
    /// Class hint with `--d`: excluded path (star-path route).
    #[arg(long, conflicts_with = "p")]
    pub s: Option<usize>,
    /// Class hint with `--d`: excluded `S_p`, `T_p` (backbone route).
    #[arg(long)]
    pub p: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run one criterion (1 to 9) instead of all.
    #[arg(long)]
    pub criterion: Option<usize>,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Exit::Input } else { Exit::Success };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let mut report = RunReport::new(argv, cli.deterministic);
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build_global()
    {
        eprintln!("error: cannot configure {} worker threads: {e}", cli.jobs);
        return ExitCode::from(Exit::Input as u8);
    }
    let exit = match commands::dispatch(&cli, &mut report) {
        Ok(exit) => exit,
        Err(e) => {
            let exit = report::classify(&e);
            eprintln!("error: {e:#}");
            report.fail(&e);
            exit
        }
    };
    report.print(exit);
    ExitCode::from(exit as u8)
}
