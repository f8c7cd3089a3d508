//! Command-line front end for `rectlevel-core`.
//!
//! Exit codes: 0 success, 1 failed check or engine mismatch, 2 bad input or
//! parameters. Every output file is written atomically.

pub mod args;
pub mod commands;
pub mod error;
pub mod io;
pub mod report;
pub mod svg;

pub use args::{Cli, Command};
pub use error::CliError;

/// Run a parsed command and return its exit code.
pub fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Generate(a) => commands::generate(a),
        Command::Analyze(a) => commands::analyze_cmd(a),
        Command::Verify(a) => commands::verify_cmd(a),
        Command::Bench(a) => commands::bench(a),
        Command::Render(a) => commands::render(a),
    }
}
