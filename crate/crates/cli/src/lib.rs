//! Command-line front end: notation parser, evaluation and commands.

pub mod args;
pub mod commands;
pub mod error;
pub mod eval;
pub mod notation;

pub use args::Cli;
pub use commands::{run, Report};
pub use error::CliError;
