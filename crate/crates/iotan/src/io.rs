//! Dataset ingestion and report serialization.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::dataset::{default_labels, Dataset};
use crate::error::{Error, Result};
use crate::report::TrendReport;

/// Selects an input column by header name or 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColumnSelector {
    Name(String),
    Index(usize),
}

impl FromStr for ColumnSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::UnknownColumn(String::new()));
        }
        match s.parse::<usize>() {
            Ok(index) => Ok(ColumnSelector::Index(index)),
            Err(_) => Ok(ColumnSelector::Name(s.to_string())),
        }
    }
}

/// CSV ingestion options.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvOptions {
    /// Whether the first record carries column labels. Without a header,
    /// columns are labeled "S1".."SN".
    pub has_header: bool,
    pub delimiter: u8,
    /// Optional column sub-selection, applied (and validated) before the
    /// dimension checks, so wide files can be narrowed into range.
    pub columns: Option<Vec<ColumnSelector>>,
}

impl Default for CsvOptions {
    fn default() -> Self {
        CsvOptions {
            has_header: true,
            delimiter: b',',
            columns: None,
        }
    }
}

/// Parses CSV bytes (RFC-4180-style quoting) into a validated [`Dataset`].
///
/// Numeric parsing is locale-independent: dot decimal separator only.
/// Every malformed input yields a diagnostic with its line and column;
/// missing or non-numeric cells are hard errors.
pub fn parse_csv(bytes: &[u8], options: &CsvOptions) -> Result<Dataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .delimiter(options.delimiter)
        .flexible(true)
        .from_reader(bytes);

    let mut records = Vec::new();
    for result in reader.records() {
        let record = result.map_err(csv_error)?;
        // a blank record (e.g. trailing newline artifacts) carries no data
        if record.len() == 1 && record.get(0).is_some_and(|c| c.trim().is_empty()) {
            continue;
        }
        let line = record.position().map_or(0, |p| p.line());
        records.push((line, record));
    }

    let mut rows = records.into_iter();
    let (labels, width) = if options.has_header {
        match rows.next() {
            Some((_, header)) => {
                let labels: Vec<String> =
                    header.iter().map(|cell| cell.trim().to_string()).collect();
                let width = labels.len();
                (labels, width)
            }
            None => return Err(Error::TooFewObservations(0)),
        }
    } else {
        let rows: Vec<_> = rows.collect();
        let width = rows.first().map_or(0, |(_, r)| r.len());
        if width == 0 {
            return Err(Error::TooFewObservations(0));
        }
        return build_dataset(default_labels(width), width, rows, options);
    };
    build_dataset(labels, width, rows.collect(), options)
}

fn build_dataset(
    labels: Vec<String>,
    width: usize,
    rows: Vec<(u64, csv::StringRecord)>,
    options: &CsvOptions,
) -> Result<Dataset> {
    for (line, record) in &rows {
        if record.len() != width {
            return Err(Error::RaggedRow {
                row: *line as usize,
                expected: width,
                got: record.len(),
            });
        }
    }

    // resolve the selection before any numeric validation, so unselected
    // columns are never parsed and the dimension check sees the narrowed set
    let selected: Vec<usize> = match &options.columns {
        Some(selectors) => selectors
            .iter()
            .map(|selector| match selector {
                ColumnSelector::Name(name) => labels
                    .iter()
                    .position(|l| l == name)
                    .ok_or_else(|| Error::UnknownColumn(name.clone())),
                ColumnSelector::Index(index) => {
                    if *index == 0 || *index > width {
                        Err(Error::ColumnIndexOutOfRange {
                            got: *index,
                            max: width,
                        })
                    } else {
                        Ok(index - 1)
                    }
                }
            })
            .collect::<Result<_>>()?,
        None => (0..width).collect(),
    };
    let selected_labels: Vec<String> = selected.iter().map(|&k| labels[k].clone()).collect();

    let mut data_rows = Vec::with_capacity(rows.len());
    for (line, record) in &rows {
        let mut row = Vec::with_capacity(selected.len());
        for (slot, &k) in selected.iter().enumerate() {
            let cell = record.get(k).unwrap_or("").trim();
            let value: f64 = cell.parse().map_err(|_| Error::NonNumericCell {
                row: *line as usize,
                column: selected_labels[slot].clone(),
                value: cell.to_string(),
            })?;
            if !value.is_finite() {
                return Err(Error::NonFiniteValue {
                    row: *line as usize,
                    column: selected_labels[slot].clone(),
                });
            }
            row.push(value);
        }
        data_rows.push(row);
    }

    Dataset::new(selected_labels, data_rows)
}

fn csv_error(err: csv::Error) -> Error {
    let line = err.position().map_or(0, csv::Position::line);
    Error::CsvParse {
        line,
        message: err.to_string(),
    }
}

/// Output encodings for a [`TrendReport`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReportFormat {
    /// Aligned plain text, 4-decimal values, p floored as "<0.0001".
    /// Trends with p below `alpha` are marked with an asterisk.
    Table { alpha: f64 },
    /// Full-precision JSON with schema metadata; round-trips losslessly.
    Json,
    /// Machine-readable CSV, one row per trend, full precision.
    Csv,
}

/// Renders a report. All formats list trends in enumeration order and the
/// output is byte-deterministic for a fixed report.
pub fn serialize_report(report: &TrendReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Table { alpha } => table(report, alpha),
        ReportFormat::Json => {
            let mut out = serde_json::to_string_pretty(report).expect("report serializes");
            out.push('\n');
            out
        }
        ReportFormat::Csv => csv_text(report),
    }
}

fn table(report: &TrendReport, alpha: f64) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "n = {}  variables = {} ({})",
        report.n_observations,
        report.dimension,
        report.columns.join(", ")
    );
    let _ = writeln!(
        out,
        "pairs = {}  effective (m) = {}  tied = {}",
        report.effective_pairs + report.tied_pairs,
        report.effective_pairs,
        report.tied_pairs
    );
    let _ = writeln!(
        out,
        "r_p = {}  sigma = {}",
        fmt4(report.reliable_point),
        fmt4(report.sigma)
    );
    if let Some(config) = &report.permutation {
        let _ = writeln!(
            out,
            "permutation: K = {}  seed = {}",
            config.replicates, config.seed
        );
    }
    out.push('\n');

    let label_width = report
        .trends
        .iter()
        .map(|t| t.label.len())
        .max()
        .unwrap_or(5)
        .max("trend".len());
    let has_perm = report.permutation.is_some();
    let _ = write!(
        out,
        "{:<label_width$}  {:>8}  {:>8}  {:>8}",
        "trend", "delta", "iota", "p"
    );
    if has_perm {
        let _ = write!(out, "  {:>8}", "perm_p");
    }
    out.push('\n');

    for entry in &report.trends {
        let _ = write!(
            out,
            "{:<label_width$}  {:>8}  {:>8}  {:>8}",
            entry.label,
            fmt4(entry.delta),
            fmt4(entry.iota),
            fmt_p(entry.p)
        );
        if let Some(p) = entry.permutation_p {
            let _ = write!(out, "  {:>8}", fmt_p(p));
        }
        if entry.p < alpha {
            out.push_str(" *");
        }
        out.push('\n');
    }
    out
}

fn csv_text(report: &TrendReport) -> String {
    let has_perm = report.permutation.is_some();
    let mut out = String::from("index,label,count,delta,iota,z,p");
    if has_perm {
        out.push_str(",permutation_p");
    }
    out.push('\n');
    for entry in &report.trends {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{}",
            entry.index, entry.label, entry.count, entry.delta, entry.iota, entry.z, entry.p
        );
        if has_perm {
            let _ = write!(out, ",{}", entry.permutation_p.unwrap_or(f64::NAN));
        }
        out.push('\n');
    }
    out
}

/// Four decimals, ties rounded to even.
fn fmt4(value: f64) -> String {
    format!("{value:.4}")
}

/// Table p display floors tiny values as "<0.0001"; full precision lives in
/// the JSON and CSV encodings.
fn fmt_p(p: f64) -> String {
    if p < 0.0001 {
        "<0.0001".to_string()
    } else {
        fmt4(p)
    }
}
