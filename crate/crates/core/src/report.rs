//! Check records and the report document emitted by the CLI.
//!
//! Machine formats (JSON, CSV) print every float rounded to 12 significant
//! digits so reports from identical inputs are byte-identical and diffable.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::error::{PbError, Result};

/// Significant digits kept in machine-format floats.
pub const REPORT_DIGITS: usize = 12;

/// Rounds `x` to [`REPORT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", REPORT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

/// JSON number rounded to 12 significant digits; non-finite values become null.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(round_sig(x))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

/// Text form of a rounded number, identical to its JSON rendering.
pub fn fmt_sig(x: f64) -> String {
    match num(x) {
        Value::Null => x.to_string(),
        v => v.to_string(),
    }
}

fn ser_sig<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig(*x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One named identity or property evaluated against a tolerance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    #[serde(serialize_with = "ser_sig")]
    pub residual: f64,
    #[serde(serialize_with = "ser_sig")]
    pub tolerance: f64,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    /// Passes iff `residual <= tolerance` (NaN fails).
    pub fn residual(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        let status = if residual <= tolerance {
            Status::Pass
        } else {
            Status::Fail
        };
        Check {
            name: name.into(),
            residual,
            tolerance,
            status,
            note: None,
        }
    }

    /// A boolean property; residual is recorded as 0 or 1.
    pub fn flag(name: impl Into<String>, ok: bool) -> Self {
        Check {
            name: name.into(),
            residual: if ok { 0.0 } else { 1.0 },
            tolerance: 0.0,
            status: if ok { Status::Pass } else { Status::Fail },
            note: None,
        }
    }

    pub fn skipped(name: impl Into<String>, note: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            residual: 0.0,
            tolerance: 0.0,
            status: Status::Skipped,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// An ordered list of checks; passes iff none failed.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(Check::passed);
        CheckReport { checks, pass }
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn max_residual(&self) -> f64 {
        self.checks
            .iter()
            .filter(|c| c.status != Status::Skipped)
            .map(|c| c.residual)
            .fold(0.0, f64::max)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
        self.pass = self.checks.iter().all(Check::passed);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = PbError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(PbError::invalid(format!("unsupported format '{other}'"))),
        }
    }
}

/// Top-level report for one command invocation.
///
/// `data` keys are flattened into the JSON object next to the fixed fields.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    #[serde(serialize_with = "ser_sig")]
    pub tolerance: f64,
    pub checks: Vec<Check>,
    pub pass: bool,
    #[serde(flatten)]
    pub data: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, tolerance: f64) -> Self {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            tolerance,
            checks: Vec::new(),
            pass: true,
            data: BTreeMap::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.data.insert(key.to_string(), value.into());
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.passed();
        self.checks.push(check);
    }

    pub fn push_all(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    /// Prefixes every check name with `prefix` before adding it.
    pub fn absorb(&mut self, prefix: &str, report: CheckReport) {
        for mut c in report.checks {
            c.name = format!("{prefix}{}", c.name);
            self.push(c);
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// The checks as CSV: `check,residual,tolerance,status,note`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["check", "residual", "tolerance", "status", "note"])
            .expect("in-memory write");
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skipped => "skipped",
            };
            w.write_record([
                c.name.as_str(),
                &fmt_sig(c.residual),
                &fmt_sig(c.tolerance),
                status,
                c.note.as_deref().unwrap_or(""),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== {} ==", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k:<18} {v}");
        }
        let _ = writeln!(out, "  {:<18} {:e}", "tolerance", self.tolerance);
        for (k, v) in &self.data {
            if v.is_array() || v.is_object() {
                continue;
            }
            let _ = writeln!(out, "  {k:<18} {v}");
        }
        if !self.checks.is_empty() {
            let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0).max(5);
            let _ = writeln!(out);
            for c in &self.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                let _ = write!(
                    out,
                    "  [{tag}] {:<width$}  residual {:>10.3e}  tol {:>8.1e}",
                    c.name, c.residual, c.tolerance
                );
                if let Some(n) = &c.note {
                    let _ = write!(out, "  ({n})");
                }
                out.push('\n');
            }
        }
        let _ = writeln!(out, "\noverall: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig(105.549376093), 105.549376093);
        assert_eq!(round_sig(2.0 / 7.0), 0.285714285714);
        assert_eq!(round_sig(0.0), 0.0);
        assert_eq!(round_sig(-1.2345678901234e-20), -1.23456789012e-20);
    }

    #[test]
    fn pass_is_conjunction() {
        let mut r = Report::new("x", 1e-12);
        r.push(Check::residual("a", 0.0, 1e-12));
        r.push(Check::skipped("b", "n/a"));
        assert!(r.pass);
        r.push(Check::residual("c", 1.0, 1e-12));
        assert!(!r.pass);
        assert!(!Check::residual("nan", f64::NAN, 1.0).passed());
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("closure", 1e-8).input("s", 2);
        r.set("algebra_dim", 8);
        r.push(Check::residual("jacobi", 1.0 / 3.0, 1e-10));
        let text = r.to_json();
        assert!(text.contains("\"algebra_dim\": 8"));
        let back = Report::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.checks[0].residual, 0.333333333333);
    }

    #[test]
    fn format_parsing() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
