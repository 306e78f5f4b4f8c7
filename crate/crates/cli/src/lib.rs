//! Command-line front-end for `projgeo-core`: JSON documents in and out,
//! CSV for fiber samples, fixed exit codes.

pub mod app;
pub mod error;
pub mod wire;

pub use app::{run, Cli, Output};
pub use error::CliError;
