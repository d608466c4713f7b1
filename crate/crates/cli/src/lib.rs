//! Command-line front end for `psdiag`: matrix files, DOT export, JSON
//! reports and the `psdiag` binary's subcommands.

pub mod args;
pub mod commands;
pub mod hasse;
pub mod matrix_io;
pub mod report;

pub use commands::{run, Cli, CliError};
