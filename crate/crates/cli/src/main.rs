// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

//! `spacert`: separability checks, twirls, SPA certificates and the Ha–Kye
//! counterexample from the command line.
//!
//! Exit codes: 0 evaluated, 2 input or usage error, 3 internal consistency
//! failure (a counterexample chain inequality broke).

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use crate::commands::{Outcome, EXIT_INPUT};

#[derive(Parser, Debug)]
#[command(
    name = "spacert",
    version,
    about = "Entanglement certificates for bipartite matrices and maps"
)]
struct Cli {
    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Tolerance for state and certificate predicates
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Worker threads for Monte-Carlo sampling (result does not depend on it)
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// S/T necessary separability check and PPT for a bipartite density
    Check {
        /// Bipartite matrix JSON ({"local_dim"?, "rows", "cols", "data"})
        state: PathBuf,
    },
    /// Closed-form twirl P(a) and the Werner separability verdict
    Twirl {
        state: PathBuf,
        /// Compare against a Monte-Carlo Haar average with this many samples
        #[arg(long)]
        mc_samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// SPA of a unital map and its entanglement certificate
    Spa {
        /// Map JSON ({"n", "m", "images"})
        map: PathBuf,
        /// Rescale a map with phi(1) = lambda*1 to be unital
        #[arg(long)]
        allow_normalize: bool,
    },
    /// Optimal Ha-Kye map on M_3 whose SPA is entangled
    Hakye {
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
    },
    /// Print the Choi matrix of a map
    Choi { map: PathBuf },
}

fn run(cli: &Cli) -> Result<(&'static str, Outcome)> {
    anyhow::ensure!(cli.tol >= 0.0, "--tol must be non-negative");
    anyhow::ensure!(cli.threads >= 1, "--threads must be at least 1");
    Ok(match &cli.command {
        Command::Check { state } => ("check", commands::cmd_check(state, cli.tol)?),
        Command::Twirl {
            state,
            mc_samples,
            seed,
        } => (
            "twirl",
            commands::cmd_twirl(state, *mc_samples, *seed, cli.threads, cli.tol)?,
        ),
        Command::Spa {
            map,
            allow_normalize,
        } => ("spa", commands::cmd_spa(map, *allow_normalize, cli.tol)?),
        Command::Hakye { epsilon } => ("hakye", commands::cmd_hakye(*epsilon)?),
        Command::Choi { map } => ("choi", commands::cmd_choi(map)?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((name, outcome)) => {
            let report = output::finalize(name, outcome.body);
            if cli.json {
                println!("{}", output::render_json(&report));
            } else {
                print!("{}", output::render_human(&report));
            }
            ExitCode::from(outcome.exit_code)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
