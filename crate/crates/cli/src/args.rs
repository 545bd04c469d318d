use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "colorconn", version, about = "Disjoint uni-color st-paths in edge-colored graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact maximum by enumerating node colorings.
    Exact {
        #[command(flatten)]
        common: SolveArgs,
        /// Largest number of colorings to enumerate before refusing.
        #[arg(long, default_value_t = colorconn::exact::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Incremental)]
        mode: ModeArg,
        /// Enumerate every free node even if it only touches one color.
        #[arg(long)]
        no_pin: bool,
    },
    /// Greedy approximation within a factor of the color count.
    Greedy {
        #[command(flatten)]
        common: SolveArgs,
        #[arg(long, value_enum, default_value_t = TieBreakArg::Lowest)]
        tie_break: TieBreakArg,
        /// Seed for `--tie-break seeded`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact solver for paths of length at most 3 (or 1, 2).
    Lcdp3 {
        #[command(flatten)]
        common: SolveArgs,
    },
    /// 2-approximation for paths of length at most 4.
    Lcdp4 {
        #[command(flatten)]
        common: SolveArgs,
    },
    /// Set-packing local search for any length bound.
    Lsearch {
        #[command(flatten)]
        common: SolveArgs,
        /// Target ratio slack above (l-1)/2, as `a/b` or a decimal.
        #[arg(long, default_value = "1/2", conflicts_with = "swap")]
        eps: String,
        /// Explicit swap parameter instead of deriving one from `--eps`.
        #[arg(long)]
        swap: Option<usize>,
    },
    /// Brute-force optimum for small graphs.
    Oracle {
        #[command(flatten)]
        common: SolveArgs,
    },
    /// Write a generated graph file.
    Gen(GenArgs),
    /// Cross-check a solver against the oracle on seeded random graphs.
    Verify {
        #[arg(long, value_enum)]
        algo: AlgoArg,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        #[arg(long, default_value_t = 300)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Time a solver on a random sparse graph or an input file.
    Bench {
        #[arg(long, value_enum)]
        algo: AlgoArg,
        /// Graph file; a random sparse graph is generated when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000)]
        nodes: usize,
        #[arg(long, default_value_t = 4)]
        colors: usize,
        #[arg(long, default_value_t = 40_000)]
        edges_per_color: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
    },
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Graph file (`p cdp`, `e`, optional `q` lines).
    #[arg(long)]
    pub input: PathBuf,
    /// Defaults to the file's `q` line.
    #[arg(long)]
    pub source: Option<usize>,
    #[arg(long)]
    pub target: Option<usize>,
    /// Maximum path length in edges.
    #[arg(long)]
    pub max_len: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Include wall-clock time in the report.
    #[arg(long)]
    pub timing: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Color count for `tight` and `random`.
    #[arg(long, default_value_t = 2)]
    pub colors: usize,
    /// Node count for `random`.
    #[arg(long, default_value_t = 10)]
    pub nodes: usize,
    /// Per-color edge probability for `random`.
    #[arg(long, default_value_t = 0.3)]
    pub prob: f64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// DIMACS CNF input for the SAT families.
    #[arg(long)]
    pub cnf: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Incremental,
    Recompute,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreakArg {
    Lowest,
    Highest,
    Seeded,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Tight,
    SatCdp,
    SatLcdp4,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgoArg {
    Exact,
    Greedy,
    Lcdp3,
    Lcdp4,
    Lsearch,
}

impl From<AlgoArg> for colorconn::verify::Algorithm {
    fn from(a: AlgoArg) -> Self {
        use colorconn::verify::Algorithm;
        match a {
            AlgoArg::Exact => Algorithm::Exact,
            AlgoArg::Greedy => Algorithm::Greedy,
            AlgoArg::Lcdp3 => Algorithm::Lcdp3,
            AlgoArg::Lcdp4 => Algorithm::Lcdp4,
            AlgoArg::Lsearch => Algorithm::Lsearch,
        }
    }
}
