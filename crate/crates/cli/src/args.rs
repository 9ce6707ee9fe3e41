use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ocpkit", version, about = "Faces of order and chain polytopes of finite posets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a poset file for a level composition or a random poset.
    #[command(group(ArgGroup::new("source").required(true).args(["levels", "random"])))]
    Gen {
        /// Level sizes of a maximal ranked poset, bottom first, e.g. 2,1,2.
        #[arg(long, value_delimiter = ',')]
        levels: Option<Vec<usize>>,
        /// Random poset: element count, edge probability, seed.
        #[arg(long, num_args = 3, value_names = ["D", "P", "SEED"])]
        random: Option<Vec<String>>,
        /// Output file; the poset goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count vertices, edges and triangles of both polytopes.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the lemma-based faces against the geometric oracle.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        max_pairs: u128,
        #[arg(long, default_value_t = 10_000_000)]
        max_triples: u128,
    },
    /// Check every identity across a family of posets.
    Sweep {
        #[arg(long)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t = FamilyArg::Levels)]
        family: FamilyArg,
        /// Random posets per size (random family only).
        #[arg(long, default_value_t = 20)]
        count: u64,
        /// Also run the geometric oracle on every poset.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the closed-form triangle excess for a level composition.
    Formula {
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Levels,
    Random,
}
