//! Validated observation matrices.

use crate::error::{Error, Result};
use crate::trend::check_dimension;

/// An n x N matrix of jointly observed values with unique column labels.
///
/// Rows are observations, columns are variables. Values are validated finite
/// on construction; the analysis only ever compares values pairwise, so no
/// rank transform is applied or stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    labels: Vec<String>,
    /// Row-major storage, `n_observations * dimension` values.
    values: Vec<f64>,
}

impl Dataset {
    /// Builds a dataset from observation rows.
    pub fn new(labels: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let dimension = labels.len();
        check_dimension(dimension)?;
        check_labels(&labels)?;
        if rows.len() < 2 {
            return Err(Error::TooFewObservations(rows.len()));
        }
        let mut values = Vec::with_capacity(rows.len() * dimension);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dimension {
                return Err(Error::RaggedRow {
                    row: i + 1,
                    expected: dimension,
                    got: row.len(),
                });
            }
            for (k, &value) in row.iter().enumerate() {
                if !value.is_finite() {
                    return Err(Error::NonFiniteValue {
                        row: i + 1,
                        column: labels[k].clone(),
                    });
                }
                values.push(value);
            }
        }
        Ok(Dataset { labels, values })
    }

    /// Builds a dataset from per-variable series (columns of equal length).
    pub fn from_columns(labels: Vec<String>, columns: Vec<Vec<f64>>) -> Result<Self> {
        if columns.len() != labels.len() {
            return Err(Error::DimensionOutOfRange(columns.len()));
        }
        let n = columns.first().map_or(0, Vec::len);
        for (k, column) in columns.iter().enumerate() {
            if column.len() != n {
                return Err(Error::RaggedRow {
                    row: k + 1,
                    expected: n,
                    got: column.len(),
                });
            }
        }
        let rows = (0..n)
            .map(|i| columns.iter().map(|c| c[i]).collect())
            .collect();
        Dataset::new(labels, rows)
    }

    pub fn n_observations(&self) -> usize {
        self.values.len() / self.labels.len()
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.dimension();
        &self.values[i * n..(i + 1) * n]
    }

    pub fn column(&self, k: usize) -> Vec<f64> {
        let n = self.dimension();
        self.values.iter().skip(k).step_by(n).copied().collect()
    }

    /// Labels of columns whose values are all equal. Any such column forces
    /// every observation pair to tie.
    pub fn constant_columns(&self) -> Vec<String> {
        (0..self.dimension())
            .filter(|&k| {
                let first = self.values[k];
                (1..self.n_observations()).all(|i| self.row(i)[k] == first)
            })
            .map(|k| self.labels[k].clone())
            .collect()
    }

    /// Sub-selects and reorders columns; `indices` are zero-based positions
    /// into the current column order.
    pub fn select_columns(&self, indices: &[usize]) -> Result<Dataset> {
        for &k in indices {
            if k >= self.dimension() {
                return Err(Error::ColumnIndexOutOfRange {
                    got: k + 1,
                    max: self.dimension(),
                });
            }
        }
        let labels = indices.iter().map(|&k| self.labels[k].clone()).collect();
        let rows = (0..self.n_observations())
            .map(|i| indices.iter().map(|&k| self.row(i)[k]).collect())
            .collect();
        Dataset::new(labels, rows)
    }

    pub(crate) fn set_column(&mut self, k: usize, column: &[f64]) {
        let n = self.dimension();
        debug_assert_eq!(column.len(), self.n_observations());
        for (i, &value) in column.iter().enumerate() {
            self.values[i * n + k] = value;
        }
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    for (i, label) in labels.iter().enumerate() {
        if label.is_empty() {
            return Err(Error::EmptyColumnLabel);
        }
        if labels[..i].contains(label) {
            return Err(Error::DuplicateColumnLabel(label.clone()));
        }
    }
    Ok(())
}

/// Auto-generated labels "S1".."SN" used when the input has no header.
pub fn default_labels(dimension: usize) -> Vec<String> {
    (1..=dimension).map(|k| format!("S{k}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn rows_and_columns_agree() {
        let d = Dataset::from_columns(
            labels(&["a", "b"]),
            vec![vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]],
        )
        .unwrap();
        assert_eq!(d.n_observations(), 3);
        assert_eq!(d.dimension(), 2);
        assert_eq!(d.row(1), &[2.0, 5.0]);
        assert_eq!(d.column(1), vec![4.0, 5.0, 6.0]);
    }

    #[test]
    fn rejects_single_column() {
        let err = Dataset::from_columns(labels(&["a"]), vec![vec![1.0, 2.0]]).unwrap_err();
        assert_eq!(err, Error::DimensionOutOfRange(1));
    }

    #[test]
    fn rejects_single_row() {
        let err = Dataset::new(labels(&["a", "b"]), vec![vec![1.0, 2.0]]).unwrap_err();
        assert_eq!(err, Error::TooFewObservations(1));
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = Dataset::new(
            labels(&["a", "b"]),
            vec![vec![1.0, 2.0], vec![3.0]],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::RaggedRow {
                row: 2,
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn rejects_non_finite_values() {
        let err = Dataset::new(
            labels(&["a", "b"]),
            vec![vec![1.0, 2.0], vec![f64::NAN, 3.0]],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::NonFiniteValue {
                row: 2,
                column: "a".into()
            }
        );
    }

    #[test]
    fn rejects_duplicate_and_empty_labels() {
        let rows = vec![vec![1.0, 2.0], vec![3.0, 4.0]];
        assert_eq!(
            Dataset::new(labels(&["x", "x"]), rows.clone()).unwrap_err(),
            Error::DuplicateColumnLabel("x".into())
        );
        assert_eq!(
            Dataset::new(labels(&["x", ""]), rows).unwrap_err(),
            Error::EmptyColumnLabel
        );
    }

    #[test]
    fn finds_constant_columns() {
        let d = Dataset::from_columns(
            labels(&["a", "b", "c"]),
            vec![
                vec![7.0, 7.0, 7.0],
                vec![1.0, 2.0, 3.0],
                vec![4.0, 4.0, 4.0],
            ],
        )
        .unwrap();
        assert_eq!(d.constant_columns(), vec!["a".to_string(), "c".to_string()]);
    }

    #[test]
    fn select_columns_reorders() {
        let d = Dataset::from_columns(
            labels(&["a", "b", "c"]),
            vec![vec![1.0, 2.0], vec![3.0, 4.0], vec![5.0, 6.0]],
        )
        .unwrap();
        let s = d.select_columns(&[2, 0]).unwrap();
        assert_eq!(s.labels(), &["c".to_string(), "a".to_string()]);
        assert_eq!(s.row(0), &[5.0, 1.0]);
    }

    #[test]
    fn default_labels_match_series_naming() {
        assert_eq!(default_labels(3), vec!["S1", "S2", "S3"]);
    }
}
