//! `pisys`: π-systems of symmetrizable Kac-Moody algebras from the command
//! line. Exit status 0 on success, 1 on a domain error, 2 on a usage error.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(pisys_core::Error),
}

impl From<pisys_core::Error> for CliError {
    fn from(e: pisys_core::Error) -> Self {
        CliError::Domain(e)
    }
}

#[derive(Parser, Debug)]
#[command(name = "pisys", version, about = "π-systems of symmetrizable Kac-Moody algebras")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads (default: available cores).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a diagram: finite, affine or indefinite; hyperbolic; Ext.
    Classify { diagram: String },
    /// List connected subdiagrams, or with --ext only those of Ext type.
    Subdiagrams {
        #[arg(long)]
        ext: bool,
        diagram: String,
    },
    /// Validate a π-system.
    Check {
        #[arg(long)]
        ambient: Option<String>,
        /// `{"ambient": ..., "roots": [...]}`, a bare root list, or @file.json.
        pi: String,
    },
    /// Type matrix and catalog name of a π-system.
    Type {
        #[arg(long)]
        ambient: Option<String>,
        pi: String,
    },
    /// Move a π-system to all-positive or all-negative.
    Normalize {
        #[arg(long)]
        ambient: Option<String>,
        pi: String,
    },
    /// Affine support (Y, w, k) of a π-system of affine type.
    Support {
        #[arg(long)]
        ambient: Option<String>,
        pi: String,
    },
    /// Number of W(X)-orbits of π-systems of type K in X.
    Mult {
        k: String,
        x: String,
        /// Height bound for witness searches and the cross-check.
        #[arg(long, default_value_t = 8)]
        height: i64,
        /// Validate the value by enumerating π-systems (ambient rank ≤ 5).
        #[arg(long)]
        cross_check: bool,
    },
    /// π-systems of type K in X with roots of height at most H.
    Enumerate {
        x: String,
        k: String,
        #[arg(long, default_value_t = 4)]
        height: i64,
        #[arg(long, default_value_t = pisys_core::counting::DEFAULT_NODE_BUDGET)]
        budget: usize,
    },
    /// Orbit class of a π-system of Ext type.
    Canonicalize {
        #[arg(long)]
        ambient: Option<String>,
        pi: String,
    },
    /// The simply-laced hyperbolic catalog.
    Catalog,
    /// Regenerate the finite-multiplicity table as JSON lines.
    Table {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
}

fn error_kind(e: &pisys_core::Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            if cli.json {
                let v = serde_json::json!({
                    "error": { "kind": error_kind(&e), "message": e.to_string() },
                    "schema": 1,
                });
                eprintln!("{v}");
            } else {
                eprintln!("error [{}]: {e}", error_kind(&e));
            }
            ExitCode::from(1)
        }
    }
}
