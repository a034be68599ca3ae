//! Global trend coefficients and null-distribution statistics.

use crate::delta::DeltaVector;

/// The delta every trend takes under independence, `2 / 2^N`. Iota crosses
/// zero there.
pub fn reliable_point(dimension: usize) -> f64 {
    debug_assert!((2..=16).contains(&dimension));
    2.0f64.powi(1 - dimension as i32)
}

/// Null standard deviation `sqrt(2(2n+5) / (9n(n-1)))` for n observations.
///
/// Uses the raw observation count n, never the effective pair count m; no
/// tie correction is applied.
pub fn sigma_null(n_observations: usize) -> f64 {
    debug_assert!(n_observations >= 2);
    let n = n_observations as f64;
    (2.0 * (2.0 * n + 5.0) / (9.0 * n * (n - 1.0))).sqrt()
}

/// Standardized statistic `iota / sigma_null(n)`.
pub fn z_statistic(iota: f64, n_observations: usize) -> f64 {
    iota / sigma_null(n_observations)
}

/// Two-sided p-value `2 * Phi(-|z|)` under the normal null approximation.
pub fn p_two_sided(z: f64) -> f64 {
    (2.0 * normal_cdf(-z.abs())).min(1.0)
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// Global trend coefficients: for each trend i, the modified geometric mean
/// of its advantages over every other trend,
///
/// ```text
/// iota_i = [ prod_{j != i} (1 + (delta_i - delta_j)) ]^(1/(T-1)) - 1
/// ```
///
/// with T = 2^(N-1) trends. Values lie in [-1, 1]. The endpoints are exact:
/// a trend holding all mass gets exactly 1 and forces exactly -1 on every
/// other trend (some factor is exactly zero, decided on integer counts, not
/// floats). Positive factors are accumulated in the log domain so large N
/// cannot underflow the product.
pub fn iota_from_deltas(deltas: &DeltaVector) -> Vec<f64> {
    let trends = deltas.trend_count();
    let m = deltas.effective_pairs();
    let counts = deltas.counts();
    let mut out = Vec::with_capacity(trends);
    for i in 0..trends {
        if counts[i] == m {
            out.push(1.0);
            continue;
        }
        // factor (m + c_i - c_j)/m hits zero only when c_j = m (so c_i = 0)
        if counts.iter().any(|&c| c == m) {
            out.push(-1.0);
            continue;
        }
        if trends == 2 {
            // single factor: iota = delta_0 - delta_1 exactly (Kendall's tau)
            let other = counts[1 - i] as f64;
            out.push((counts[i] as f64 - other) / m as f64);
            continue;
        }
        let mut log_sum = 0.0;
        for j in 0..trends {
            if j != i {
                let advantage = (counts[i] as f64 - counts[j] as f64) / m as f64;
                log_sum += advantage.ln_1p();
            }
        }
        let iota = (log_sum / (trends - 1) as f64).exp_m1();
        out.push(iota.clamp(-1.0, 1.0));
    }
    out
}
