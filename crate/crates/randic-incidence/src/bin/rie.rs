//! `rie` — Randić incidence energy toolkit.

use clap::{Args, Parser, Subcommand};
use randic_incidence::cli::{
    self, cmd_bounds, cmd_bounds_batch, cmd_compute, cmd_compute_batch, cmd_explore_min,
    cmd_trees, cmd_verify, exit_code, exit_code_for, parse_range, resolve_graph_argument,
    OutputFormat, RunConfig, TreeSelection,
};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "rie",
    about = "Randić incidence energy: compute, check bounds, rank trees, verify",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Comparison tolerance for the verification suite
    #[arg(long, default_value_t = 1e-9, global = true)]
    tol: f64,
    /// Output format: table, json, or csv
    #[arg(long, default_value = "table", global = true)]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Compute energies, the Randić index, and singular values of a graph
    Compute {
        /// graph6 string, edge-list file, or generator spec (K5, S7, P4, C6, K3,4)
        graph: Option<String>,
        /// Read newline-delimited graph6 from standard input
        #[arg(long)]
        stdin: bool,
        /// Degree exponent for the generalized energy
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Check every bound and identity on a graph
    Bounds {
        /// graph6 string, edge-list file, or generator spec
        graph: Option<String>,
        /// Read newline-delimited graph6 from standard input
        #[arg(long)]
        stdin: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Rank all free trees on n vertices by energy
    Trees {
        /// Single vertex count
        #[arg(long, conflicts_with = "range")]
        n: Option<usize>,
        /// Inclusive vertex-count range, e.g. 2..10
        #[arg(long)]
        range: Option<String>,
        /// Write one CSV file per vertex count into this directory
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Report the minimum-energy trees instead of the full ranking
        #[arg(long)]
        explore_min: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run the self-verification suite (exit 0 iff everything passes)
    Verify {
        /// Seed for the randomized corpora
        #[arg(long)]
        seed: Option<u64>,
        /// Test hook: corrupt every computed energy by this amount
        #[arg(long, hide = true)]
        inject_error: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
}

fn build_config(common: &Common, alpha: Option<f64>, seed: Option<u64>) -> Result<RunConfig, String> {
    if common.tol <= 0.0 {
        return Err("--tol must be positive".into());
    }
    let format: OutputFormat = common.format.parse()?;
    Ok(RunConfig {
        tolerance: common.tol,
        format,
        alpha,
        seed,
        inject_error: None,
    })
}

fn read_stdin() -> Result<String, String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| format!("cannot read standard input: {e}"))?;
    Ok(buf)
}

fn run() -> Result<(), (String, i32)> {
    let cli = Cli::parse();
    let input_err = |msg: String| (msg, exit_code::INPUT_ERROR);
    match cli.command {
        Command::Compute {
            graph,
            stdin,
            alpha,
            common,
        } => {
            let config = build_config(&common, alpha, None).map_err(input_err)?;
            let out = if stdin {
                let corpus = read_stdin().map_err(input_err)?;
                cmd_compute_batch(&corpus, &config)
            } else {
                let arg = graph.ok_or_else(|| {
                    input_err("missing graph argument (or pass --stdin)".into())
                })?;
                cmd_compute(&resolve_graph_argument(&arg), &config)
            }
            .map_err(|e| (e.to_string(), exit_code_for(&e)))?;
            print!("{out}");
            Ok(())
        }
        Command::Bounds {
            graph,
            stdin,
            common,
        } => {
            let config = build_config(&common, None, None).map_err(input_err)?;
            let out = if stdin {
                let corpus = read_stdin().map_err(input_err)?;
                cmd_bounds_batch(&corpus, &config)
            } else {
                let arg = graph.ok_or_else(|| {
                    input_err("missing graph argument (or pass --stdin)".into())
                })?;
                cmd_bounds(&resolve_graph_argument(&arg), &config)
            }
            .map_err(|e| (e.to_string(), exit_code_for(&e)))?;
            print!("{out}");
            Ok(())
        }
        Command::Trees {
            n,
            range,
            out_dir,
            explore_min,
            common,
        } => {
            let config = build_config(&common, None, None).map_err(input_err)?;
            let selection = match (n, range) {
                (Some(n), None) => TreeSelection::Single(n),
                (None, Some(r)) => {
                    TreeSelection::Range(parse_range(&r).map_err(|e| {
                        (e.to_string(), exit_code::INPUT_ERROR)
                    })?)
                }
                _ => return Err(input_err("pass exactly one of --n or --range".into())),
            };
            let out = if explore_min {
                let range = match &selection {
                    TreeSelection::Single(n) => *n..=*n,
                    TreeSelection::Range(r) => r.clone(),
                };
                cmd_explore_min(range)
            } else {
                cmd_trees(&selection, &config, out_dir.as_deref())
            }
            .map_err(|e| (e.to_string(), exit_code_for(&e)))?;
            print!("{out}");
            Ok(())
        }
        Command::Verify {
            seed,
            inject_error,
            common,
        } => {
            let mut config = build_config(&common, None, seed).map_err(input_err)?;
            config.inject_error = inject_error;
            let (out, passed) = cmd_verify(&config);
            print!("{out}");
            if passed {
                Ok(())
            } else {
                Err((String::new(), exit_code::VERIFY_FAILED))
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::from(cli::exit_code::OK as u8),
        Err((msg, code)) => {
            if !msg.is_empty() {
                eprintln!("rie: {msg}");
            }
            ExitCode::from(code as u8)
        }
    }
}
