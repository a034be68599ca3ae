//! End-to-end analysis producing a per-trend report.

use serde::{Deserialize, Serialize};

use crate::dataset::Dataset;
use crate::delta::compute_deltas;
use crate::error::Result;
use crate::permutation::permutation_null_all;
use crate::stats::{iota_from_deltas, p_two_sided, reliable_point, sigma_null, z_statistic};
use crate::trend::enumerate_paired_orthants;

/// Serialization schema version carried in JSON output.
pub const SCHEMA_VERSION: u32 = 1;

/// One trend's coefficients and significance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrendEntry {
    pub index: usize,
    /// Trend label, canonical pattern then negation: `"++/--"`.
    pub label: String,
    /// Untied pairs classified into this trend.
    pub count: u64,
    pub delta: f64,
    pub iota: f64,
    pub z: f64,
    pub p: f64,
    /// Empirical permutation p-value, present when a permutation test ran.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation_p: Option<f64>,
}

/// Permutation-test configuration echoed into the report for
/// reproducibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationConfig {
    pub replicates: usize,
    pub seed: u64,
}

/// Full analysis result: one entry per paired orthant, in enumeration
/// order, plus dataset-level metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrendReport {
    pub schema_version: u32,
    pub n_observations: usize,
    pub dimension: usize,
    pub columns: Vec<String>,
    /// The independence delta, `2 / 2^N`.
    pub reliable_point: f64,
    /// Untied pairs m; the shared delta denominator.
    pub effective_pairs: u64,
    pub tied_pairs: u64,
    /// Null standard deviation computed from the raw observation count.
    pub sigma: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<PermutationConfig>,
    pub trends: Vec<TrendEntry>,
}

impl TrendReport {
    /// The entry with the given trend label, if present.
    pub fn trend(&self, label: &str) -> Option<&TrendEntry> {
        self.trends.iter().find(|t| t.label == label)
    }
}

/// Runs the full pipeline: enumerate trends, tally pairs, compute iota, Z
/// and the two-sided normal p per trend.
pub fn analyze(data: &Dataset) -> Result<TrendReport> {
    build_report(data, None)
}

/// Like [`analyze`], with an additional seeded permutation test appended to
/// every trend.
pub fn analyze_with_permutation(
    data: &Dataset,
    replicates: usize,
    seed: u64,
) -> Result<TrendReport> {
    let permutation_p = permutation_null_all(data, replicates, seed)?;
    let mut report = build_report(data, Some(PermutationConfig { replicates, seed }))?;
    for (entry, p) in report.trends.iter_mut().zip(permutation_p) {
        entry.permutation_p = Some(p);
    }
    Ok(report)
}

fn build_report(data: &Dataset, permutation: Option<PermutationConfig>) -> Result<TrendReport> {
    let deltas = compute_deltas(data)?;
    let iota = iota_from_deltas(&deltas);
    let n = data.n_observations();
    let orthants = enumerate_paired_orthants(data.dimension())?;

    let trends = orthants
        .iter()
        .zip(iota)
        .enumerate()
        .map(|(index, (orthant, iota))| {
            let z = z_statistic(iota, n);
            TrendEntry {
                index,
                label: orthant.label(),
                count: deltas.count(index),
                delta: deltas.delta(index),
                iota,
                z,
                p: p_two_sided(z),
                permutation_p: None,
            }
        })
        .collect();

    Ok(TrendReport {
        schema_version: SCHEMA_VERSION,
        n_observations: n,
        dimension: data.dimension(),
        columns: data.labels().to_vec(),
        reliable_point: reliable_point(data.dimension()),
        effective_pairs: deltas.effective_pairs(),
        tied_pairs: deltas.tied_pairs(),
        sigma: sigma_null(n),
        permutation,
        trends,
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
    fn report_glues_the_pipeline_together() {
        let series: Vec<f64> = (0..12).map(|i| (2 * i + 1) as f64).collect();
        let report = analyze(&dataset(vec![series.clone(), series])).unwrap();
        assert_eq!(report.n_observations, 12);
        assert_eq!(report.dimension, 2);
        assert_eq!(report.reliable_point, 0.5);
        assert_eq!(report.effective_pairs, 66);
        assert_eq!(report.tied_pairs, 0);
        assert_eq!(report.trends.len(), 2);
        let top = report.trend("++/--").unwrap();
        assert_eq!(top.delta, 1.0);
        assert_eq!(top.iota, 1.0);
        assert!(top.p < 0.0001);
        assert_eq!(report.trend("+-/-+").unwrap().iota, -1.0);
    }

    #[test]
    fn entries_follow_enumeration_order() {
        let report = analyze(&dataset(vec![
            vec![1.0, 2.0, 5.0, 3.0],
            vec![4.0, 1.0, 2.0, 8.0],
            vec![2.0, 9.0, 4.0, 6.0],
        ]))
        .unwrap();
        let labels: Vec<&str> = report.trends.iter().map(|t| t.label.as_str()).collect();
        assert_eq!(labels, vec!["+++/---", "++-/--+", "+-+/-+-", "+--/-++"]);
        for (i, entry) in report.trends.iter().enumerate() {
            assert_eq!(entry.index, i);
            assert!(entry.p > 0.0 && entry.p <= 1.0);
            assert!((-1.0..=1.0).contains(&entry.iota));
            assert!((0.0..=1.0).contains(&entry.delta));
        }
    }

    #[test]
    fn permutation_config_is_echoed() {
        let report = analyze_with_permutation(
            &dataset(vec![vec![1.0, 2.0, 3.0, 4.0], vec![2.0, 1.0, 4.0, 3.0]]),
            99,
            11,
        )
        .unwrap();
        assert_eq!(
            report.permutation,
            Some(PermutationConfig {
                replicates: 99,
                seed: 11
            })
        );
        for entry in &report.trends {
            let p = entry.permutation_p.unwrap();
            assert!(p > 0.0 && p <= 1.0);
        }
    }
}
