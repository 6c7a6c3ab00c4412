//! Command-line surface over the liedim library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 table mismatch against a golden file.
//!
//! All output is deterministic: identical invocations produce byte-identical
//! output. There is no randomness anywhere; the reserved `--seedless` flag
//! documents that contract and is rejected if passed.

use clap::{Parser, Subcommand};
use std::process::ExitCode;

mod render;
mod run;
mod tables_cmd;
mod verify_cmd;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "liedim",
    about = "Exact dimensions, bounds and catalogs for highest-weight modules",
    after_help = "Defaults: rank cap 12, height cap 8, dimension cap 1000000, \
                  enumeration cap 2000000."
)]
struct Cli {
    /// Reserved: the tool is deterministic by construction; passing this
    /// flag is an error.
    #[arg(long, global = true)]
    seedless: bool,

    /// Output format (tables and verify are text only).
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact dimension of V(weight), with bound values and duality.
    Dim {
        /// Type spec, a family letter plus rank (e.g. C3, e7).
        lie_type: String,
        /// Comma-separated weight coefficients, length = rank.
        weight: String,
    },
    /// Minimal dimension among weights of one height, optionally verified
    /// by brute force.
    Minheight {
        lie_type: String,
        /// The height t >= 1.
        height: u32,
        /// Re-verify by enumerating the full height simplex.
        #[arg(long)]
        verify: bool,
        /// Enumeration cap for --verify.
        #[arg(long, default_value_t = 2_000_000)]
        cap: u128,
    },
    /// The bounded catalog of one type.
    Classify { lie_type: String },
    /// Semiprime-dimension modules of one type.
    Pq {
        lie_type: String,
        /// Dimension cap.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        /// Height cap for the scan.
        #[arg(long, default_value_t = 8)]
        max_height: u32,
    },
    /// Self-duality and orthogonal/symplectic type of V(weight).
    Duality { lie_type: String, weight: String },
    /// Regenerate a bundled reference table and diff it against the golden
    /// copy (exit 3 on mismatch).
    Tables {
        /// Table id: 1 (bounded catalog), 3 (symplectic fundamentals),
        /// 4 (height polynomials), 6 (semiprime rows).
        id: u32,
        /// Rank range for table 1, e.g. 3..12.
        #[arg(long)]
        ranks: Option<String>,
        /// Dimension cap for table 6 instantiation.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        /// Rank cap for table 6 instantiation.
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
        /// Compare against this golden file instead of the bundled one.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        /// One of: theorem1, lemma2, lemma33, bounds, pq, duality.
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        #[arg(long, default_value_t = 3)]
        max_height: u32,
        #[arg(long, default_value_t = 100_000)]
        cap: u64,
    },
    /// All weights of height <= max-height with the exact dimension.
    Search {
        lie_type: String,
        dim: String,
        #[arg(long, default_value_t = 8)]
        max_height: u32,
        #[arg(long, default_value_t = 2_000_000)]
        enumeration_cap: u128,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.seedless {
        eprintln!(
            "error: --seedless is reserved; output is deterministic by construction \
             and there is no randomness to disable"
        );
        return ExitCode::from(2);
    }
    let outcome = run::dispatch(&cli);
    match outcome {
        Ok(run::Outcome { text, exit }) => {
            let payload = if text.ends_with('\n') || text.is_empty() {
                text
            } else {
                format!("{text}\n")
            };
            match &cli.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, payload) {
                        eprintln!("error: cannot write {path}: {e}");
                        return ExitCode::from(2);
                    }
                }
                None => print!("{payload}"),
            }
            ExitCode::from(exit)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

impl Cli {
    pub fn format(&self) -> Format {
        self.format
    }
}

pub(crate) use Cli as CliArgs;
pub(crate) use Command as CliCommand;
