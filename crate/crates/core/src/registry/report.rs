//! Verification reports and their JSON, CSV and text renderings.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    ToleranceNotReached,
}

impl Status {
    /// Token used in text output; failures are upper case for grepping.
    pub fn token(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::ToleranceNotReached => "TOLERANCE_NOT_REACHED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ToleranceNotReached => "tolerance_not_reached",
        })
    }
}

/// Result of one check. Every number is a decimal string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub abs_diff: String,
    pub lhs_err: String,
    pub rhs_err: String,
    pub tol: String,
    pub terms_used: String,
    pub wall_time_ms: String,
    pub status: Status,
    pub precision_bits: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Copy with the timing blanked, for comparing runs.
    pub fn without_timing(&self) -> Self {
        VerificationReport { wall_time_ms: String::new(), ..self.clone() }
    }

    fn params_text(&self) -> String {
        let parts: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(";")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::Usage(format!("unknown format '{other}' (json, csv or text)"))),
        }
    }
}

pub const CSV_COLUMNS: [&str; 12] = [
    "id",
    "params",
    "lhs",
    "rhs",
    "abs_diff",
    "lhs_err",
    "rhs_err",
    "tol",
    "terms_used",
    "wall_time_ms",
    "status",
    "precision_bits",
];

pub fn to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn from_json(s: &str) -> Result<Vec<VerificationReport>> {
    serde_json::from_str(s).map_err(|e| Error::Usage(format!("bad report JSON: {e}")))
}

pub fn to_csv(reports: &[VerificationReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_COLUMNS).map_err(io)?;
    for r in reports {
        w.write_record([
            r.id.as_str(),
            &r.params_text(),
            &r.lhs,
            &r.rhs,
            &r.abs_diff,
            &r.lhs_err,
            &r.rhs_err,
            &r.tol,
            &r.terms_used,
            &r.wall_time_ms,
            &r.status.to_string(),
            &r.precision_bits,
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// One line per report, led by the status token.
pub fn to_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let params = r.params_text();
        let params = if params.is_empty() { "-".to_string() } else { params };
        out.push_str(&format!(
            "{:<22} {} [{}] abs_diff={} tol={} lhs_err={} rhs_err={} terms={} {}ms\n",
            r.status.token(),
            r.id,
            params,
            r.abs_diff,
            r.tol,
            r.lhs_err,
            r.rhs_err,
            r.terms_used,
            r.wall_time_ms
        ));
        out.push_str(&format!("    lhs = {}\n    rhs = {}\n", r.lhs, r.rhs));
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    out.push_str(&format!("{passed}/{} passed\n", reports.len()));
    out
}

pub fn render(reports: &[VerificationReport], format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(to_json(reports) + "\n"),
        Format::Csv => to_csv(reports),
        Format::Text => Ok(to_text(reports)),
    }
}

/// Writes the rendering to `path`, or standard output when `None`.
pub fn emit(reports: &[VerificationReport], format: Format, path: Option<&Path>) -> Result<()> {
    let text = render(reports, format)?;
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(status: Status) -> VerificationReport {
        VerificationReport {
            id: "I02".into(),
            params: [("r".to_string(), "1".to_string())].into_iter().collect(),
            lhs: "1.80308535474".into(),
            rhs: "1.80308535474".into(),
            abs_diff: "0".into(),
            lhs_err: "1e-30".into(),
            rhs_err: "1e-70".into(),
            tol: "1e-10".into(),
            terms_used: "40".into(),
            wall_time_ms: "3".into(),
            status,
            precision_bits: "256".into(),
        }
    }

    #[test]
    fn json_round_trip() {
        let rs = vec![sample(Status::Pass), sample(Status::ToleranceNotReached)];
        let back = from_json(&to_json(&rs)).unwrap();
        assert_eq!(back, rs);
        assert!(to_json(&rs).contains("\"tolerance_not_reached\""));
    }

    #[test]
    fn csv_header_and_rows() {
        let s = to_csv(&[sample(Status::Fail)]).unwrap();
        let mut lines = s.lines();
        assert_eq!(lines.next().unwrap(), CSV_COLUMNS.join(","));
        let row = lines.next().unwrap();
        assert!(row.starts_with("I02,r=1,"));
        assert!(row.contains(",fail,256"));
    }

    #[test]
    fn text_marks_failures() {
        let s = to_text(&[sample(Status::Pass), sample(Status::Fail)]);
        assert_eq!(s.matches("FAIL").count(), 1);
        assert!(s.ends_with("1/2 passed\n"));
    }

    #[test]
    fn format_names() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
