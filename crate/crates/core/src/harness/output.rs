use super::{Report, SweepRow};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            other => Err(format!("unknown format {other:?} (expected json, csv or table)")),
        }
    }
}

fn csv_rows(rows: &[SweepRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Format(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
}

fn table(report: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>4} {:>4} {:>3} {:<10} {:>8} {:>8} {:<6} {:<13} {:<14}",
        "n", "k", "t", "relation", "star", "max", "star=", "unique", "status"
    );
    for r in &report.rows {
        let k = r.k.map_or_else(|| "-".to_string(), |k| k.to_string());
        let _ = writeln!(
            s,
            "{:>4} {:>4} {:>3} {:<10} {:>8} {:>8} {:<6} {:<13} {:<14}",
            r.n,
            k,
            r.t,
            r.relation.as_str(),
            r.star_size,
            r.max_size,
            r.star_is_maximum,
            serde_plain(&r.unique),
            serde_plain(&r.status)
        );
    }
    let _ = writeln!(
        s,
        "verified {}  refuted {}  inconclusive {}",
        report.summary.verified, report.summary.refuted, report.summary.inconclusive
    );
    s
}

fn serde_plain<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

pub fn render_report(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
        Format::Csv => csv_rows(&report.rows),
        Format::Table => Ok(table(report)),
    }
}

/// Writes `text` to `out`, or to stdout when `out` is `None`.
pub fn write_output(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(path, text)?;
        }
        None => print!("{text}"),
    }
    Ok(())
}
