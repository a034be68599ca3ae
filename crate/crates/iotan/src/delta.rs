//! Pair classification and individual trend coefficients.
//!
//! Every one of the n(n-1)/2 observation pairs either ties (some coordinate
//! difference is zero) or falls into exactly one paired orthant. Tied pairs
//! are excluded entirely: they appear in neither a trend's numerator nor the
//! shared denominator m, which is what makes the deltas sum to exactly 1.
//! Counts are exact integers; division happens only when a delta is read.

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::trend::{index_from_canonical_mask, trend_count, SignPattern};

/// Componentwise signum of a coordinate difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diff {
    Plus,
    Zero,
    Minus,
}

/// Componentwise signum of `later - earlier` over each coordinate.
pub fn sign_diff(later: &[f64], earlier: &[f64]) -> Vec<Diff> {
    debug_assert_eq!(later.len(), earlier.len());
    later
        .iter()
        .zip(earlier)
        .map(|(l, e)| {
            if l > e {
                Diff::Plus
            } else if l < e {
                Diff::Minus
            } else {
                Diff::Zero
            }
        })
        .collect()
}

/// Outcome of classifying one observation pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairClass {
    /// Index of the paired orthant holding the pair's difference signs.
    /// Orientation is discarded: both members of a pair count toward the
    /// same trend.
    Classified(usize),
    /// Some coordinate difference was zero.
    Tied,
}

/// Classifies a pair of equal-dimension rows by its difference sign vector.
pub fn classify_pair(later: &[f64], earlier: &[f64]) -> PairClass {
    match classify_mask(later, earlier) {
        Some(index) => PairClass::Classified(index),
        None => PairClass::Tied,
    }
}

#[inline]
fn classify_mask(later: &[f64], earlier: &[f64]) -> Option<usize> {
    let n = later.len();
    let mut plus = 0u16;
    for k in 0..n {
        if later[k] > earlier[k] {
            plus |= 1 << k;
        } else if later[k] == earlier[k] {
            return None;
        }
    }
    // canonicalize: the pair's trend is that of the first-sign-plus member
    if plus & 1 == 0 {
        plus = !plus & low_bits(n);
    }
    Some(index_from_canonical_mask(plus, n))
}

fn low_bits(len: usize) -> u16 {
    if len >= 16 {
        u16::MAX
    } else {
        (1u16 << len) - 1
    }
}

/// Per-trend pair tallies for one dataset.
///
/// Invariants held by construction: `sum(counts) = effective_pairs`, and
/// `effective_pairs + tied_pairs = n(n-1)/2` when produced by
/// [`compute_deltas`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaVector {
    dimension: usize,
    counts: Vec<u64>,
    effective_pairs: u64,
    tied_pairs: u64,
}

impl DeltaVector {
    /// Builds a delta vector from raw per-trend tallies, e.g. merged from
    /// partitioned workers. `counts` must have one entry per paired orthant
    /// and at least one untied pair in total.
    pub fn from_counts(dimension: usize, counts: Vec<u64>, tied_pairs: u64) -> Result<Self> {
        crate::trend::check_dimension(dimension)?;
        if counts.len() != trend_count(dimension) {
            return Err(Error::TrendIndexOutOfRange {
                got: counts.len(),
                dimension,
                count: trend_count(dimension),
            });
        }
        let effective_pairs: u64 = counts.iter().sum();
        if effective_pairs == 0 {
            return Err(Error::DegenerateDataset {
                constant_columns: vec![],
            });
        }
        Ok(DeltaVector {
            dimension,
            counts,
            effective_pairs,
            tied_pairs,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of trends, `2^(N-1)`.
    pub fn trend_count(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, trend: usize) -> u64 {
        self.counts[trend]
    }

    /// Number of untied pairs, the shared denominator m.
    pub fn effective_pairs(&self) -> u64 {
        self.effective_pairs
    }

    pub fn tied_pairs(&self) -> u64 {
        self.tied_pairs
    }

    pub fn total_pairs(&self) -> u64 {
        self.effective_pairs + self.tied_pairs
    }

    /// The trend's delta, `counts[trend] / m`.
    pub fn delta(&self, trend: usize) -> f64 {
        self.counts[trend] as f64 / self.effective_pairs as f64
    }

    pub fn deltas(&self) -> Vec<f64> {
        (0..self.trend_count()).map(|t| self.delta(t)).collect()
    }
}

/// Classifies all j > i observation pairs and tallies them per trend.
///
/// The result is independent of row order and iteration schedule: counting
/// is associative and commutative, so partitioned tallies merged by addition
/// give bit-identical results.
pub fn compute_deltas(data: &Dataset) -> Result<DeltaVector> {
    let dimension = data.dimension();
    let n = data.n_observations();
    let mut counts = vec![0u64; trend_count(dimension)];
    let mut tied_pairs = 0u64;
    for j in 1..n {
        let later = data.row(j);
        for i in 0..j {
            match classify_mask(later, data.row(i)) {
                Some(index) => counts[index] += 1,
                None => tied_pairs += 1,
            }
        }
    }
    let effective_pairs: u64 = counts.iter().sum();
    if effective_pairs == 0 {
        return Err(Error::DegenerateDataset {
            constant_columns: data.constant_columns(),
        });
    }
    Ok(DeltaVector {
        dimension,
        counts,
        effective_pairs,
        tied_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::default_labels;

    fn dataset(columns: Vec<Vec<f64>>) -> Dataset {
        Dataset::from_columns(default_labels(columns.len()), columns).unwrap()
    }

    #[test]
    fn sign_diff_examples() {
        assert_eq!(
            sign_diff(&[3.0, 5.0], &[1.0, 1.0]),
            vec![Diff::Plus, Diff::Plus]
        );
        assert_eq!(
            sign_diff(&[1.0, 7.0], &[1.0, 2.0]),
            vec![Diff::Zero, Diff::Plus]
        );
        assert_eq!(
            sign_diff(&[2.0, 9.0, 4.0], &[5.0, 9.0, 1.0]),
            vec![Diff::Minus, Diff::Zero, Diff::Plus]
        );
    }

    #[test]
    fn classify_pair_examples() {
        // concordant pair: ++/-- is trend 0
        assert_eq!(
            classify_pair(&[8.0, 15.0], &[5.0, 7.0]),
            PairClass::Classified(0)
        );
        // discordant pair: +-/-+ is trend 1
        assert_eq!(
            classify_pair(&[3.0, 21.0], &[1.0, 23.0]),
            PairClass::Classified(1)
        );
        assert_eq!(classify_pair(&[1.0, 9.0], &[1.0, 3.0]), PairClass::Tied);
    }

    #[test]
    fn classify_pair_discards_orientation() {
        let a = [1.0, 5.0, 2.0];
        let b = [4.0, 2.0, 9.0];
        assert_eq!(classify_pair(&a, &b), classify_pair(&b, &a));
    }

    #[test]
    fn identical_ascending_columns_are_fully_concordant() {
        let series: Vec<f64> = (0..12).map(|i| (2 * i + 1) as f64).collect();
        let dv = compute_deltas(&dataset(vec![series.clone(), series])).unwrap();
        assert_eq!(dv.counts(), &[66, 0]);
        assert_eq!(dv.effective_pairs(), 66);
        assert_eq!(dv.delta(0), 1.0);
        assert_eq!(dv.delta(1), 0.0);
    }

    #[test]
    fn row_order_does_not_matter() {
        let cols = vec![
            vec![5.0, 8.0, 9.0, 16.0, 12.0, 1.0],
            vec![7.0, 15.0, 3.0, 20.0, 24.0, 23.0],
        ];
        let forward = compute_deltas(&dataset(cols.clone())).unwrap();
        let reversed = compute_deltas(&dataset(
            cols.into_iter()
                .map(|c| c.into_iter().rev().collect())
                .collect(),
        ))
        .unwrap();
        assert_eq!(forward, reversed);
    }

    #[test]
    fn constant_column_is_degenerate_and_named() {
        let err = compute_deltas(&dataset(vec![
            vec![4.0, 4.0, 4.0],
            vec![1.0, 2.0, 3.0],
        ]))
        .unwrap_err();
        assert_eq!(
            err,
            Error::DegenerateDataset {
                constant_columns: vec!["S1".into()]
            }
        );
    }

    #[test]
    fn degenerate_without_constant_columns() {
        // every pair ties in some coordinate, yet no single column is constant
        let err = compute_deltas(&dataset(vec![
            vec![0.0, 0.0, 1.0],
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 0.0],
        ]))
        .unwrap_err();
        assert_eq!(
            err,
            Error::DegenerateDataset {
                constant_columns: vec![]
            }
        );
    }

    #[test]
    fn from_counts_validates() {
        assert!(DeltaVector::from_counts(2, vec![3, 4], 1).is_ok());
        assert!(matches!(
            DeltaVector::from_counts(2, vec![3, 4, 5], 0),
            Err(Error::TrendIndexOutOfRange { .. })
        ));
        assert!(matches!(
            DeltaVector::from_counts(2, vec![0, 0], 6),
            Err(Error::DegenerateDataset { .. })
        ));
    }

    #[test]
    fn tallies_account_for_every_pair() {
        let dv = compute_deltas(&dataset(vec![
            vec![5.0, 8.0, 9.0, 16.0, 12.0, 1.0, 14.0, 3.0, 15.0, 21.0, 13.0, 1.0],
            vec![7.0, 15.0, 3.0, 20.0, 24.0, 23.0, 24.0, 20.0, 21.0, 5.0, 23.0, 15.0],
        ]))
        .unwrap();
        assert_eq!(dv.total_pairs(), 66);
        assert_eq!(dv.effective_pairs(), 61);
        assert_eq!(dv.tied_pairs(), 5);
        assert_eq!(dv.counts(), &[30, 31]);
    }
}
