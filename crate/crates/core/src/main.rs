use std::process::ExitCode;

use betti_bounds::io::{run_cli, CliConfig};
use clap::Parser;

fn main() -> ExitCode {
    let config = CliConfig::parse();
    match run_cli(&config) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
