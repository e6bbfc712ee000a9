//! Output envelope shared by every subcommand, with JSON and CSV writers.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub const SCHEMA_VERSION: &str = "1";

/// One named pass/fail check. `slack` is the signed margin to the
/// threshold; it is `None` when the check could not be evaluated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub slack: Option<f64>,
}

impl Check {
    /// Passes iff `slack >= 0`.
    pub fn margin(name: impl Into<String>, slack: f64) -> Self {
        Check { name: name.into(), passed: slack >= 0.0, slack: slack.is_finite().then_some(slack) }
    }

    /// Passes iff `deviation <= tol`; slack is `tol - deviation`.
    pub fn within(name: impl Into<String>, deviation: f64, tol: f64) -> Self {
        let passed = deviation <= tol;
        let slack = tol - deviation;
        Check { name: name.into(), passed, slack: slack.is_finite().then_some(slack) }
    }

    /// Passes iff `slack > 0`.
    pub fn strict(name: impl Into<String>, slack: f64) -> Self {
        Check { name: name.into(), passed: slack > 0.0, slack: slack.is_finite().then_some(slack) }
    }

    pub fn failed(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: false, slack: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: String,
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub results: Value,
    pub checks: Vec<Check>,
}

/// Rows for CSV output: a header and records of already-formatted cells.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// Shortest decimal that parses back to the same double.
pub fn cell(x: f64) -> String {
    if x.is_finite() {
        // serde_json prints the shortest round-trip representation
        serde_json::to_string(&x).unwrap_or_else(|_| x.to_string())
    } else {
        x.to_string()
    }
}

/// JSON number, or a string for non-finite values.
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        Value::from(x)
    } else {
        Value::String(x.to_string())
    }
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

/// Complete command output before formatting.
#[derive(Debug, Clone)]
pub struct Output {
    pub envelope: Envelope,
    pub table: Option<Table>,
}

impl Output {
    pub fn new(command: &str, params: BTreeMap<String, Value>, results: Value, checks: Vec<Check>) -> Self {
        Output {
            envelope: Envelope {
                schema_version: SCHEMA_VERSION.to_string(),
                command: command.to_string(),
                params,
                results,
                checks,
            },
            table: None,
        }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn all_passed(&self) -> bool {
        self.envelope.checks.iter().all(|c| c.passed)
    }

    pub fn write_json<W: Write>(&self, mut w: W) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut w, &self.envelope)?;
        writeln!(w)?;
        Ok(())
    }

    /// The command table when there is one, else the checks.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), CliError> {
        let mut out = csv::Writer::from_writer(w);
        match &self.table {
            Some(t) => {
                out.write_record(&t.header)?;
                for r in &t.rows {
                    out.write_record(r)?;
                }
            }
            None => {
                out.write_record(["name", "passed", "slack"])?;
                for c in &self.envelope.checks {
                    let slack = c.slack.map(cell).unwrap_or_default();
                    out.write_record([c.name.as_str(), if c.passed { "true" } else { "false" }, slack.as_str()])?;
                }
            }
        }
        out.flush()?;
        Ok(())
    }
}
