//! Command-line surface and file formats for the `schublines-core` library.
//!
//! Everything observable is deterministic for fixed flags: certificate JSON,
//! CSV tables, sweep reports (modulo timing fields). Exit codes follow one
//! contract across commands: 0 success, 1 verification or inequality
//! failure, 2 invalid input.

pub mod cache;
pub mod certjson;
pub mod commands;
pub mod output;
pub mod sweep;

pub use commands::{Cli, Command};
pub use output::Format;
