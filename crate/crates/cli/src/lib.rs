//! The `hochsym` command-line tool as a library, for testing in-process.

pub mod commands;
pub mod format;
pub mod report;

pub use commands::{run, Outcome};
