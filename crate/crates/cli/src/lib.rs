//! Library side of the `zdg` command-line tool.

pub mod args;
mod commands;
pub mod config;
pub mod error;

use serde_json::Value;

pub use args::Cli;
pub use config::{RunConfig, BUDGET_ENV};
pub use error::{CliError, EXIT_BUDGET, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};

use args::Command;

/// The emitted document and whether every assertion behind it held.
#[derive(Debug, Clone)]
pub struct Output {
    pub document: String,
    pub passed: bool,
    /// Short explanation for standard error when `passed` is false.
    pub message: Option<String>,
}

impl Output {
    fn report(value: &Value, passed: bool) -> Self {
        let mut document = serde_json::to_string_pretty(value).expect("reports serialize");
        document.push('\n');
        Output {
            document,
            passed,
            message: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

/// Runs a parsed command line. `budget_env` is the value of [`BUDGET_ENV`].
pub fn execute(cli: &Cli, budget_env: Option<&str>) -> Result<Output, CliError> {
    let config = RunConfig::resolve(&cli.common, budget_env)?;
    match &cli.command {
        Command::Graph {
            spec,
            relation,
            restrict,
            strip_loops,
            format,
        } => commands::graph::run(spec, relation, *restrict, *strip_loops, *format),
        Command::Check {
            property,
            spec,
            relation,
            samples,
            subset,
        } => commands::check::run(&config, *property, spec, relation, *samples, subset.as_deref()),
        Command::Factor { spec, relation } => commands::factor::run(&config, spec, relation),
        Command::Census {
            catalog,
            pair_order_cap,
            samples,
        } => commands::census::run(&config, catalog, *pair_order_cap, *samples),
    }
}
