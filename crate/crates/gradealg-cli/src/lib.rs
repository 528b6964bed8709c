//! Command-line front end for the gradealg toolkit: the `.galg` file format,
//! fixture generators, subcommands wrapping the library operations, and
//! deterministic machine-readable reports.

pub mod cli;
pub mod commands;
pub mod format;
pub mod literal;
pub mod report;

use anyhow::Context;

pub struct RunOutput {
    pub report: report::Report,
    pub human: String,
}

/// Executes a parsed invocation: runs the subcommand, writes the JSON report
/// when `--json` was given, and returns both outputs.
pub fn run(cli: &cli::Cli) -> anyhow::Result<RunOutput> {
    let (report, human) = commands::execute(&cli.command)?;
    if let Some(path) = &cli.json {
        std::fs::write(path, report.to_json())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(RunOutput { report, human })
}
