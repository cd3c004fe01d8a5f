//! Command-line front end: benchmark tables, spectra, parameter sweeps,
//! wave functions and shooting checks, written as CSV or JSON.

// `!(x > 0)` also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod error;
pub mod golden;
pub mod output;
pub mod tables;

pub use commands::{run, Report};
pub use error::{CliError, CliResult};
