//! Seeded permutation test for trend coefficients.
//!
//! Validates the normal approximation empirically: under the null, permuting
//! the columns independently leaves each column's marginal distribution
//! intact while destroying any joint trend. Only columns 2..N are permuted;
//! permuting all N is equivalent under the null and holding one fixed saves
//! work.
//!
//! Reproducibility: replicate r draws its randomness from a ChaCha8 stream
//! keyed by (seed, r), so results do not depend on evaluation order and
//! replicates can run in parallel.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dataset::Dataset;
use crate::delta::compute_deltas;
use crate::error::{Error, Result};
use crate::stats::iota_from_deltas;
use crate::trend::trend_count;

/// Smallest permitted replicate count.
pub const MIN_REPLICATES: usize = 99;

/// Empirical two-sided p-value for one trend:
/// `(1 + #{replicates with |iota*| >= |iota_observed|}) / (K + 1)`.
pub fn permutation_null(
    data: &Dataset,
    trend: usize,
    replicates: usize,
    seed: u64,
) -> Result<f64> {
    let count = trend_count(data.dimension());
    if trend >= count {
        return Err(Error::TrendIndexOutOfRange {
            got: trend,
            dimension: data.dimension(),
            count,
        });
    }
    Ok(permutation_null_all(data, replicates, seed)?[trend])
}

/// Empirical two-sided p-values for every trend from a single set of
/// replicates. Same seed, same result, regardless of thread schedule.
pub fn permutation_null_all(data: &Dataset, replicates: usize, seed: u64) -> Result<Vec<f64>> {
    if replicates < MIN_REPLICATES {
        return Err(Error::TooFewReplicates(replicates));
    }
    let observed: Vec<f64> = iota_from_deltas(&compute_deltas(data)?)
        .iter()
        .map(|v| v.abs())
        .collect();

    let exceed = (0..replicates)
        .into_par_iter()
        .map(|replicate| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(replicate as u64 + 1);
            let mut permuted = data.clone();
            for k in 1..data.dimension() {
                let mut column = permuted.column(k);
                column.shuffle(&mut rng);
                permuted.set_column(k, &column);
            }
            let iota = iota_from_deltas(&compute_deltas(&permuted)?);
            let hits: Vec<u64> = iota
                .iter()
                .zip(&observed)
                .map(|(replicated, threshold)| u64::from(replicated.abs() >= *threshold))
                .collect();
            Ok(hits)
        })
        .try_reduce(
            || vec![0u64; observed.len()],
            |mut acc, hits| {
                for (a, h) in acc.iter_mut().zip(hits) {
                    *a += h;
                }
                Ok(acc)
            },
        )?;

    Ok(exceed
        .iter()
        .map(|&count| (1 + count) as f64 / (replicates + 1) as f64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::default_labels;

    fn dataset(columns: Vec<Vec<f64>>) -> Dataset {
        Dataset::from_columns(default_labels(columns.len()), columns).unwrap()
    }

    #[test]
    fn perfect_trend_survives_no_permutation() {
        let series: Vec<f64> = (0..12).map(|i| (2 * i + 1) as f64).collect();
        let data = dataset(vec![series.clone(), series]);
        let p = permutation_null(&data, 0, 999, 7).unwrap();
        assert!(p <= 0.002, "p = {p}");
    }

    #[test]
    fn same_seed_same_result() {
        let data = dataset(vec![
            vec![5.0, 8.0, 9.0, 16.0, 12.0, 1.0, 14.0, 3.0],
            vec![7.0, 15.0, 3.0, 20.0, 24.0, 23.0, 24.0, 20.0],
        ]);
        let a = permutation_null_all(&data, 200, 42).unwrap();
        let b = permutation_null_all(&data, 200, 42).unwrap();
        assert_eq!(a, b);
        let c = permutation_null_all(&data, 200, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn rejects_too_few_replicates() {
        let data = dataset(vec![vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert_eq!(
            permutation_null_all(&data, 98, 0).unwrap_err(),
            Error::TooFewReplicates(98)
        );
    }

    #[test]
    fn rejects_bad_trend_index() {
        let data = dataset(vec![vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert!(matches!(
            permutation_null(&data, 2, 99, 0),
            Err(Error::TrendIndexOutOfRange { got: 2, .. })
        ));
    }

    #[test]
    fn propagates_degenerate_dataset() {
        let data = dataset(vec![vec![1.0, 1.0], vec![3.0, 4.0]]);
        assert!(matches!(
            permutation_null_all(&data, 99, 0),
            Err(Error::DegenerateDataset { .. })
        ));
    }

    #[test]
    fn p_values_lie_in_unit_interval() {
        let data = dataset(vec![
            vec![5.0, 8.0, 9.0, 16.0, 12.0, 1.0],
            vec![7.0, 15.0, 3.0, 20.0, 24.0, 23.0],
            vec![1.0, 9.0, 4.0, 12.0, 2.0, 8.0],
        ]);
        for p in permutation_null_all(&data, 99, 1).unwrap() {
            assert!(p > 0.0 && p <= 1.0);
        }
    }
}
