//! Multivariate, non-parametric trend analysis based on paired orthants.
//!
//! For N jointly observed variables, every untied observation pair falls
//! into one of `2^(N-1)` paired orthants according to the signs of its
//! coordinate differences. The fraction of pairs per orthant (delta) and a
//! modified geometric mean over the deltas (iota, which reduces to Kendall's
//! tau at N = 2) describe which joint trend the data follows and how
//! strongly; a normal null approximation and an optional seeded permutation
//! test attach significance to each trend.
//!
//! ```
//! use iotan::{analyze, Dataset};
//!
//! let rising: Vec<f64> = (0..12).map(|i| (2 * i + 1) as f64).collect();
//! let data = Dataset::from_columns(
//!     vec!["S1".into(), "S2".into()],
//!     vec![rising.clone(), rising],
//! )
//! .unwrap();
//! let report = analyze(&data).unwrap();
//! let top = report.trend("++/--").unwrap();
//! assert_eq!(top.iota, 1.0);
//! assert!(top.p < 0.0001);
//! ```

pub mod dataset;
pub mod delta;
pub mod error;
pub mod io;
pub mod permutation;
pub mod report;
pub mod stats;
pub mod trend;

pub use dataset::Dataset;
pub use delta::{classify_pair, compute_deltas, sign_diff, DeltaVector, Diff, PairClass};
pub use error::{Error, Result};
pub use io::{parse_csv, serialize_report, ColumnSelector, CsvOptions, ReportFormat};
pub use permutation::{permutation_null, permutation_null_all};
pub use report::{analyze, analyze_with_permutation, PermutationConfig, TrendEntry, TrendReport};
pub use stats::{
    iota_from_deltas, normal_cdf, p_two_sided, reliable_point, sigma_null, z_statistic,
};
pub use trend::{
    canonicalize, enumerate_paired_orthants, trend_count, Orientation, PairedOrthant, Sign,
    SignPattern, MAX_DIMENSION, MIN_DIMENSION,
};
