//! File formats, JSON reports and the command implementations behind the
//! `salemforge` binary.

use std::fmt;

use serde_json::Value;

use salemforge_core::Error;

pub mod commands;
pub mod format;
pub mod report;
pub mod table;
pub mod verify;

pub use commands::{run, BoundRequest, ConstructTarget, NumberRef, Request};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNRESOLVED: i32 = 3;

/// A failed command: the exit code, a message for stderr, and for
/// unresolved results the report computed so far.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
    pub partial: Option<Value>,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_INVALID, message: message.into(), partial: None }
    }

    pub fn unresolved(message: impl Into<String>, partial: Value) -> CliError {
        CliError { code: EXIT_UNRESOLVED, message: message.into(), partial: Some(partial) }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = if e == Error::NotDependent { EXIT_UNRESOLVED } else { EXIT_INVALID };
        CliError { code, message: e.to_string(), partial: None }
    }
}

/// Applies `SALEMFORGE_DEGREE_CAP` to the factorization and splitting caps.
pub fn apply_degree_cap(value: Option<&str>) -> Result<(), CliError> {
    if let Some(v) = value {
        let cap: usize =
            v.trim().parse().map_err(|_| CliError::parse(format!("SALEMFORGE_DEGREE_CAP: not a count: {v:?}")))?;
        salemforge_core::limits::set_factor_degree_cap(cap);
        salemforge_core::limits::set_splitting_degree_cap(cap);
    }
    Ok(())
}

/// Serialized report text; the trailing newline is included.
pub fn render_json(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}
