//! `wg`: tables, verification suites and Monte-Carlo checks for the exact
//! Weingarten engine.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 domain or pole error.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match commands::run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("wg: {e}");
            e.exit_code()
        }
    }
}
