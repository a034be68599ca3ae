use crate::trend::{MAX_DIMENSION, MIN_DIMENSION};

/// Errors produced by dataset construction, CSV ingestion and analysis.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("number of variables must be between {MIN_DIMENSION} and {MAX_DIMENSION}, got {0}")]
    DimensionOutOfRange(usize),

    #[error("need at least 2 observations, got {0}")]
    TooFewObservations(usize),

    #[error("row {row} has {got} values, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("non-numeric value {value:?} at row {row}, column {column}")]
    NonNumericCell {
        row: usize,
        column: String,
        value: String,
    },

    #[error("non-finite value at row {row}, column {column}")]
    NonFiniteValue { row: usize, column: String },

    #[error("column label {0:?} appears more than once")]
    DuplicateColumnLabel(String),

    #[error("column labels must be nonempty")]
    EmptyColumnLabel,

    #[error("unknown column {0:?}")]
    UnknownColumn(String),

    #[error("column index {got} out of range (valid: 1..={max})")]
    ColumnIndexOutOfRange { got: usize, max: usize },

    #[error("malformed CSV at line {line}: {message}")]
    CsvParse { line: u64, message: String },

    #[error("degenerate dataset: every observation pair is tied{}", constant_column_note(constant_columns))]
    DegenerateDataset { constant_columns: Vec<String> },

    #[error("trend index {got} out of range for {dimension} variables (valid: 0..{count})")]
    TrendIndexOutOfRange {
        got: usize,
        dimension: usize,
        count: usize,
    },

    #[error("permutation replicates must be at least 99, got {0}")]
    TooFewReplicates(usize),
}

fn constant_column_note(columns: &[String]) -> String {
    if columns.is_empty() {
        " (no constant columns; ties arise pairwise)".to_string()
    } else {
        format!(" (constant columns: {})", columns.join(", "))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
