//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hessdot::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "hessdot",
    version,
    about = "Graded dot-action decompositions of regular semisimple Hessenberg varieties",
    long_about = "Hessenberg functions are given as comma-separated values, e.g. 3,4,5,6,6,6."
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand.
#[derive(Debug, Args)]
pub struct RunConfig {
    /// Refuse inputs with n larger than this.
    #[arg(long, global = true, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_n: u64,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Directory for cached Poincaré polynomials (content-addressed JSON files).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Roots, ideal, abelian/height data, and sink sets of h.
    Analyze {
        /// Hessenberg function, e.g. 3,4,5,6,6,6.
        h: String,
    },
    /// Graded tabloid (c) and Specht (d) coefficients of the dot action.
    Decompose { h: String },
    /// Poincaré polynomials of Hess(X_ν, h).
    Betti {
        h: String,
        /// A composition ν of n, e.g. 3,2; every partition of n when omitted.
        #[arg(long)]
        nu: Option<String>,
    },
    /// Acyclic orientations of the incomparability graph, by sinks and ascents.
    Orientations {
        h: String,
        /// Also list every acyclic orientation.
        #[arg(long)]
        list: bool,
    },
    /// Run verification suites for one h or for every h of size n.
    Verify {
        /// A size n, or a Hessenberg function.
        target: String,
        /// Which suite to run.
        #[arg(default_value = "all", value_parser = parse_suite)]
        which: Suite,
    },
    /// List the Hessenberg functions of size n.
    Enumerate {
        n: usize,
        /// Keep only abelian functions.
        #[arg(long)]
        abelian: bool,
        /// Keep only strictly negative functions.
        #[arg(long)]
        strictly_negative: bool,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}
