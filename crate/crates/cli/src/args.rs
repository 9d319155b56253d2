use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "ramsey",
    version,
    about = "Ramsey arrowing, graph parameters and the separating tower construction"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Number of edge colours
    #[arg(long, global = true, default_value_t = 2)]
    pub q: usize,

    /// Node budget for arrowing searches
    #[arg(long, global = true, default_value_t = 200_000_000)]
    pub budget_nodes: u64,

    /// Seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Epsilon as an exact rational "p/q"
    #[arg(long, global = true)]
    pub eps: Option<String>,

    /// Directory for artifacts
    #[arg(long, global = true, env = "RAMSEY_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,

    /// Format of graph artifacts
    #[arg(long, global = true, value_enum, default_value_t = Format::G6)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    G6,
    Json,
    Dot,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::G6 => "g6",
            Format::Json => "json",
            Format::Dot => "dot",
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Chromatic number, clique number, odd girth and a(G) with witnesses
    Params { graph: PathBuf },

    /// Decide HOST -> (PATTERN)_q
    Arrows { host: PathBuf, pattern: PathBuf },

    /// Build hypergraphs, blow-ups, towers and the separating graph
    #[command(subcommand)]
    Construct(Construct),

    /// Run a verification suite
    #[command(subcommand)]
    Verify(Verify),

    /// Search small graphs arrowing G but not H
    Separate {
        g: PathBuf,
        h: PathBuf,
        /// Largest vertex count examined
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct SearchArgs {
    /// Largest hypergraph tried by the randomized search
    #[arg(long, default_value_t = 40)]
    pub search_vertices: usize,

    /// Random attempts per hypergraph size
    #[arg(long, default_value_t = 32)]
    pub search_attempts: usize,
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Uniform hypergraph with girth > N and independence < eps * n
    Hypergraph {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_cap: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Blow-up L(G, eps, N)
    Blowup {
        graph: PathBuf,
        #[arg(long)]
        n_cap: usize,
        /// Backing hypergraph (JSON); searched for when absent
        #[arg(long)]
        backing: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Tower F_0, ..., F_levels
    Tower {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n_cap: usize,
        #[arg(long)]
        levels: usize,
        /// Cap on vertices of any level
        #[arg(long, default_value_t = 256)]
        max_vertices: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// The graph F separating G from patterns with larger a(H), and its colouring
    Theorem8 {
        graph: PathBuf,
        #[arg(long)]
        n_cap: usize,
        #[arg(long, default_value_t = 256)]
        max_vertices: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Cycles of length <= N stay inside the hyperedges they touch
    Lemma3 {
        trace: PathBuf,
        /// Defaults to the trace's N
        #[arg(long)]
        n_cap: Option<usize>,
    },
    /// Every ceil(eps * n)-subset of the blow-up contains the base graph
    Lemma5 { trace: PathBuf },
    /// Focussing bounds on random colourings of complete bipartite graphs
    Focus {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        max_a: usize,
        #[arg(long, default_value_t = 128)]
        max_b: usize,
    },
    /// Witness extraction on random colourings, and good colourings for every bound vector
    Claim {
        trace: PathBuf,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Check an edge colouring against a (N, k_1, .., k_q) profile
    Pprofile {
        graph: PathBuf,
        colouring: PathBuf,
        #[arg(long)]
        n_cap: usize,
        /// Comma-separated k_1,..,k_q
        #[arg(long, value_delimiter = ',', required = true)]
        bounds: Vec<usize>,
    },
    /// Re-check a separating construction and its colouring
    Theorem8 {
        trace: PathBuf,
        /// Pattern that the colouring must avoid in every colour
        #[arg(long)]
        target: Option<PathBuf>,
    },
}
