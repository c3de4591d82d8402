//! `desing`: desingularization and order-degree curves from the command line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ore_desing::OreRing;

/// Exit statuses.
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INFEASIBLE: u8 = 2;
pub const EXIT_BREACH: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "desing", version, about = "Desingularize Ore operators and predict order-degree curves")]
pub struct Cli {
    /// Operator algebra: `shift` (recurrences) or `diff` (differential equations).
    #[arg(long, global = true)]
    pub ring: Option<OreRing>,

    /// Operator file in the text grammar; `-` or absent reads stdin.
    #[arg(long, global = true, value_name = "FILE")]
    pub op: Option<PathBuf>,

    /// Trusted irreducible factor of the leading coefficient (repeatable).
    #[arg(long = "factor-hint", global = true, value_name = "POLY")]
    pub factor_hints: Vec<String>,

    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "tsv")]
    pub json: bool,

    /// Emit tab-separated values.
    #[arg(long, global = true)]
    pub tsv: bool,

    /// Differential ring: largest removing order tried.
    #[arg(long, global = true)]
    pub n_cap: Option<usize>,

    /// Differential ring: largest denominator exponent tried.
    #[arg(long, global = true)]
    pub e_cap: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the operator in canonical form.
    Parse,
    /// Print OP * RIGHT.
    Mul {
        #[arg(long, value_name = "FILE")]
        right: PathBuf,
    },
    /// Remove FACTOR^POWER from the leading coefficient; prints a certificate.
    Remove(RemoveArgs),
    /// Factor the leading coefficient and report what is removable.
    Analyze,
    /// Predicted degree per order.
    Curve(CurveArgs),
    /// Brute-force minimal degree per order next to the prediction.
    Region {
        #[arg(long)]
        r_max: usize,
        #[arg(long)]
        d_max: usize,
    },
    /// A left multiple of order at most R.
    Multiple {
        #[arg(long)]
        r: usize,
        /// Search for degree at most D instead of constructing from certificates.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Re-check a certificate or multiple document.
    Verify {
        /// JSON document; `-` or absent reads stdin.
        #[arg(long, value_name = "FILE")]
        doc: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct RemoveArgs {
    #[arg(long)]
    pub factor: String,
    #[arg(long, default_value_t = 1)]
    pub power: u32,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub exponent: Option<u32>,
}

#[derive(Args, Debug)]
pub struct CurveArgs {
    #[arg(long, default_value_t = 20)]
    pub r_max: usize,
    /// Use a spec instead of analyzing an operator.
    #[arg(long, requires = "order")]
    pub deg_x: Option<usize>,
    #[arg(long, requires = "deg_x")]
    pub order: Option<usize>,
    /// Removable block `DEG:ORDER` (repeatable).
    #[arg(long = "block", value_name = "DEG:ORDER", requires = "deg_x")]
    pub blocks: Vec<String>,
}

fn init_threads() {
    #[cfg(feature = "parallel")]
    if let Some(n) = std::env::var("ORE_DESING_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("desing: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
