use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use updom::Formulation;
use updom_cli::bench::{cmd_bench, write_csv, BenchConfig, DEFAULT_CONFIG};
use updom_cli::commands::{cmd_export, cmd_generate, cmd_solve, cmd_verify};
use updom_cli::{exit, Method};

/// Upper domination toolkit: instance generation, models, exact solving and
/// benchmarking.
#[derive(Parser)]
#[command(name = "updom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph in text format.
    Generate {
        /// Instance spec, e.g. `gen_petersen:5,2` or `erdos_renyi:20,4,seed=3`.
        spec: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a graph file or spec.
    ///
    /// Exit codes: 0 optimal, 3 time limit reached, 4 infeasible, 2 usage error.
    Solve {
        /// Path to a graph file, or an instance spec.
        input: String,
        #[arg(long, default_value = "f1")]
        formulation: Method,
        /// Seconds.
        #[arg(long, default_value_t = 10000.0)]
        time_limit: f64,
        #[arg(long)]
        seed: Option<u64>,
        /// Seed the search with a greedy minimal dominating set.
        #[arg(long)]
        warm_start: bool,
    },
    /// Check oracle, F1 and F2 against the known values for a family.
    ///
    /// Exit codes: 0 all match, 1 mismatch, 2 usage error.
    Verify {
        /// Family name, or `all` for every family with a known value.
        family: String,
        /// `a..b` over the first parameter; defaults to a per-family range.
        range: Option<String>,
        /// Seconds per solve.
        #[arg(long, default_value_t = 10000.0)]
        time_limit: f64,
    },
    /// Run a benchmark config and write CSV.
    Bench {
        /// Config file; the built-in default is used when omitted.
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Print the built-in config and exit.
        #[arg(long)]
        print_default_config: bool,
    },
    /// Write the LP file of a model.
    Export {
        spec: String,
        #[arg(long, default_value = "f1")]
        formulation: Formulation,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn print(text: Option<String>) {
    if let Some(text) = text {
        print!("{text}");
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Generate { spec, seed, out } => {
            print(cmd_generate(&spec, seed, out.as_deref())?);
            Ok(exit::OK)
        }
        Command::Export {
            spec,
            formulation,
            seed,
            out,
        } => {
            print(cmd_export(&spec, formulation, seed, out.as_deref())?);
            Ok(exit::OK)
        }
        Command::Solve {
            input,
            formulation,
            time_limit,
            seed,
            warm_start,
        } => {
            let report = cmd_solve(&input, formulation, time_limit, seed, warm_start)?;
            print!("{report}");
            Ok(report.exit_code())
        }
        Command::Verify {
            family,
            range,
            time_limit,
        } => {
            let report = cmd_verify(&family, range.as_deref(), time_limit)?;
            println!("{report}");
            Ok(report.exit_code())
        }
        Command::Bench {
            config,
            out,
            jobs,
            print_default_config,
        } => {
            if print_default_config {
                print!("{DEFAULT_CONFIG}");
                return Ok(exit::OK);
            }
            let config = match config {
                Some(path) => BenchConfig::load(&path)?,
                None => BenchConfig::default_config(),
            };
            let rows = cmd_bench(&config, jobs)?;
            match out {
                Some(path) => {
                    let file = std::fs::File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_csv(&rows, file)
                        .with_context(|| format!("writing {}", path.display()))?;
                }
                None => write_csv(&rows, std::io::stdout().lock())?,
            }
            let bad = rows.iter().filter(|r| !r.matches).count();
            if bad > 0 {
                writeln!(
                    std::io::stderr(),
                    "{bad} rows do not match their closed form"
                )?;
                return Ok(exit::MISMATCH);
            }
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit::USAGE)
        }
    }
}
