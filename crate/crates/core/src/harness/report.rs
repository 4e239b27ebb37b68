//! json-lines and human-readable output.

use std::fmt::Write as _;

use super::suite::Record;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Human,
}

/// One compact JSON object per line.
pub fn json_lines(records: &[Record]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

pub fn summary_line(records: &[Record]) -> String {
    let passed = records.iter().filter(|r| r.pass).count();
    let falsified = records.iter().filter(|r| r.falsification).count();
    let mut line = format!("{} checks, {} passed, {} failed", records.len(), passed, records.len() - passed);
    if falsified > 0 {
        let _ = write!(line, "\nFALSIFICATION: {falsified} records");
    }
    line
}

/// A table of checks followed by the summary.
pub fn human(records: &[Record]) -> String {
    let width = records.iter().map(|r| r.instance.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in records {
        let status = match (r.pass, r.falsification) {
            (_, true) => "FALSIFIED",
            (true, _) => "ok",
            (false, _) => "FAIL",
        };
        let _ = write!(out, "{status:<9} {:<14} {:<width$}", r.theorem, r.instance);
        if let Some(e) = &r.error {
            let _ = write!(out, "  error: {e}");
        } else if !r.pass {
            let unmet: Vec<&str> = r.hypotheses.iter().filter(|(_, &v)| !v).map(|(k, _)| k.as_str()).collect();
            if !unmet.is_empty() {
                let _ = write!(out, "  unmet: {}", unmet.join(", "));
            }
        }
        out.push('\n');
        for note in &r.notes {
            let _ = writeln!(out, "          {note}");
        }
    }
    out.push_str(&summary_line(records));
    out.push('\n');
    out
}

pub fn render(records: &[Record], format: Format) -> String {
    match format {
        Format::Json => json_lines(records),
        Format::Human => human(records),
    }
}
