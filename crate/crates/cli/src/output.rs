//! Output envelope shared by every command.

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-oriented lines; not contract-bound.
    Text,
    /// A single well-formed JSON document.
    Json,
    /// Comma-separated values with a header row.
    Csv,
}

/// Floating-point values in machine-readable output carry 17 significant
/// digits, enough to round-trip an f64.
pub fn float17(x: f64) -> String {
    format!("{x:.16e}")
}
