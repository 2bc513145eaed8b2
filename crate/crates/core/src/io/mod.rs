//! Ideal files and the command line.

pub mod cli;
pub mod parse;
pub mod print;

pub use cli::{run_cli, CliConfig, Command, CommonArgs};
pub use parse::{parse_ideal, parse_ideal_with_prime, read_ideal_file, IdealFile};
pub use print::{default_names, format_ideal, format_ideal_file, format_polynomial};
