//! `zbin`: classify, compose and enumerate finite groupoids, and run the
//! theorem checks.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage, parse or
//! scope error.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Environment variable holding the worker count for parallel scans.
const THREADS_VAR: &str = "ZBIN_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "zbin",
    version,
    about = "Finite groupoids and the center of Bin(X)"
)]
struct Cli {
    /// Write output to FILE instead of standard output.
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the algebraic properties of a table (`-` reads stdin).
    Classify { file: PathBuf },
    /// Print A □ B, where x □ y = (x A y) B (y A x).
    Box { first: PathBuf, second: PathBuf },
    /// Locally-zero groupoids and the brute-force center.
    #[command(subcommand)]
    Center(CenterCommand),
    /// Run one theorem check, or `all` of them.
    Verify {
        /// A theorem id such as T3.1 or P2.7, or `all`.
        id: String,
        /// Order to check at (the largest order for `all`).
        #[arg(long = "n", default_value_t = 3)]
        order: usize,
        /// Run sampled with K cases instead of exhaustively.
        #[arg(long, value_name = "K")]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Linear groupoids x * y = ax + by + c over Z_m.
    #[command(subcommand)]
    Linear(LinearCommand),
}

#[derive(Debug, Subcommand)]
enum CenterCommand {
    /// Every locally-zero groupoid of order N, by ascending mask.
    Enumerate {
        n: usize,
        /// Print masks instead of tables.
        #[arg(long)]
        masks: bool,
    },
    /// Count locally-zero groupoids of order N.
    Count {
        n: usize,
        /// Also count isomorphism classes.
        #[arg(long)]
        iso: bool,
    },
    /// Scan all of Bin(X) for groupoids commuting with every other.
    Bruteforce {
        n: usize,
        #[arg(long)]
        masks: bool,
    },
}

#[derive(Debug, Subcommand)]
enum LinearCommand {
    /// Coefficients of (a,b,c) □ (d,e,f).
    Compose {
        #[arg(num_args = 6, value_names = ["A", "B", "C", "D", "E", "F"])]
        coeffs: Vec<u64>,
        #[arg(long = "mod", value_name = "M")]
        modulus: u32,
    },
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .map_err(|_| anyhow::anyhow!("{THREADS_VAR} must be a positive integer, got {value:?}"))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()?;
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = configure_threads().and_then(|()| commands::run(&cli.command));
    match result {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text).map_err(anyhow::Error::from),
                None => std::io::stdout()
                    .write_all(out.text.as_bytes())
                    .map_err(anyhow::Error::from),
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
