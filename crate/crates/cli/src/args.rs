use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(
    name = "zdg",
    version,
    about = "Compressed zero-divisor graphs of finite commutative rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Seed for every randomised step; recorded in each report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Backtracking nodes allowed per graph isomorphism search.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub iso_budget: Option<u64>,
    /// Maximum number of ideals enumerated per ring.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub ideal_cap: Option<u64>,
    /// Largest ring order used in homomorphism searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub hom_order_cap: Option<u64>,
    /// Candidate image tuples per homomorphism enumeration.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub hom_candidates: Option<u64>,
    /// Write the emitted document here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Emit the zero-divisor graph of a ring.
    Graph {
        #[arg(long)]
        spec: PathBuf,
        /// eq, sassoc, assoc, equiann, blend-nilp, blend-units or custom:<path>
        #[arg(long, default_value = "assoc")]
        relation: String,
        #[arg(long, value_enum, default_value_t = Restrict::All)]
        restrict: Restrict,
        #[arg(long)]
        strip_loops: bool,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Check a property and print a JSON report.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, required = true)]
        spec: Vec<PathBuf>,
        #[arg(long, default_value = "assoc")]
        relation: String,
        /// Random partitions sampled by `zdrel`.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Comma-separated element labels generating the multiplicative set for
        /// `localization`. Defaults to every non-nilpotent element in turn.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Split a ring into a product using its associated-class graph alone.
    Factor {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value = "assoc")]
        relation: String,
    },
    /// Run the invariant suite over every ring of a catalog directory.
    Census {
        #[arg(long, default_value = "catalog")]
        catalog: PathBuf,
        /// Pairwise products are checked when their order is at most this.
        #[arg(long, default_value_t = 64)]
        pair_order_cap: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Restrict {
    All,
    ZeroDivisors,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Zdrel,
    Connectivity,
    Product,
    Equalizer,
    Functorial,
    Localization,
    Cla,
    Staircase,
    Pir,
    Lemmas,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Zdrel => "zdrel",
            Property::Connectivity => "connectivity",
            Property::Product => "product",
            Property::Equalizer => "equalizer",
            Property::Functorial => "functorial",
            Property::Localization => "localization",
            Property::Cla => "cla",
            Property::Staircase => "staircase",
            Property::Pir => "pir",
            Property::Lemmas => "lemmas",
        }
    }
}
