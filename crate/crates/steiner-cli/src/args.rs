use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "steiner",
    about = "Oriented Steiner triple systems: classification, product algebra, dynamics",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Builtin model name (see `steiner models`)
    #[arg(long, conflicts_with = "input")]
    pub builtin: Option<String>,
    /// Read the system from a text or JSON file
    #[arg(long)]
    pub input: Option<String>,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct TolArgs {
    #[arg(long)]
    pub tol_skew: Option<f64>,
    #[arg(long)]
    pub tol_orth: Option<f64>,
    #[arg(long)]
    pub tol_block: Option<f64>,
    #[arg(long)]
    pub tol_cluster: Option<f64>,
    #[arg(long)]
    pub tol_zero: Option<f64>,
    #[arg(long)]
    pub tol_rank: Option<f64>,
    #[arg(long)]
    pub tol_limit: Option<f64>,
    #[arg(long)]
    pub tol_cycle: Option<f64>,
    #[arg(long)]
    pub tol_cesaro: Option<f64>,
    #[arg(long)]
    pub tol_subspace: Option<f64>,
}

impl TolArgs {
    pub fn tolerances(&self) -> steiner::dynamics::Tolerances {
        let mut t = steiner::dynamics::Tolerances::default();
        if let Some(x) = self.tol_skew {
            t.skew = x;
        }
        if let Some(x) = self.tol_orth {
            t.orth = x;
        }
        if let Some(x) = self.tol_block {
            t.block = x;
        }
        if let Some(x) = self.tol_cluster {
            t.cluster = x;
        }
        if let Some(x) = self.tol_zero {
            t.zero = x;
        }
        if let Some(x) = self.tol_rank {
            t.rank = x;
        }
        if let Some(x) = self.tol_limit {
            t.limit = x;
        }
        if let Some(x) = self.tol_cycle {
            t.cycle = x;
        }
        if let Some(x) = self.tol_cesaro {
            t.cesaro = x;
        }
        if let Some(x) = self.tol_subspace {
            t.subspace = x;
        }
        t
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partition all orientations of a system into isomorphism classes
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Cap on the triple count (2^|T| orientations are enumerated);
        /// env STEINER_MAX_TRIPLES overrides the default of 24
        #[arg(long)]
        max_triples: Option<usize>,
    },
    /// Automorphism group of a system or an oriented system
    Aut {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Steiner product of two vectors
    Product {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Companion matrix of w with its rank and kernel
    Companion {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        w: String,
    },
    /// Zero-divisor test for w
    Zerodiv {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        w: String,
    },
    /// Cross-product axiom check by exact symbolic expansion
    Axioms {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, default_value = "0")]
        seed: u64,
    },
    /// Compare the induced product against a division-algebra table
    Tables {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, value_enum)]
        table: TableKind,
    },
    /// Iterated-product dynamics
    #[command(subcommand)]
    Dynamics(DynamicsCommand),
    /// List the builtin models
    Models {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the bundled verification suite
    Verify {
        #[command(flatten)]
        output: OutputArgs,
        /// Restrict to one section: classification, algebra, dynamics
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(long, default_value = "10000")]
        horizon: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TableKind {
    Quaternion,
    Octonion,
}

#[derive(Subcommand, Debug)]
pub enum DynamicsCommand {
    /// Exact rank growth of the iterate span
    Rank {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        /// Highest iterate k (default n+1)
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Span-dimension and limit checks for a pair (v, w)
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[arg(long, default_value = "10000")]
        horizon: usize,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Dump the iterate trace (norms and normalized coordinates)
    Trace {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[arg(long, default_value = "16")]
        k: usize,
    },
}
