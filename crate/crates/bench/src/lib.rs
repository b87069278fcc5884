//! Deterministic inputs shared by the benchmarks.

use tdde_core::{base_solution, validate_series, DdeParams, DenseMatrix, FeatureMatrix, InfluenceSeries};

/// `base_solution` sampled on `[−half_width, half_width]` with `2k + 1` points.
pub fn exponential_series(a: f64, b: f64, p0: f64, half_width: f64, k: usize) -> InfluenceSeries {
    let params = DdeParams::new(a, b, p0, half_width).expect("valid parameters");
    let h = half_width / k as f64;
    let k = k as i64;
    let times: Vec<f64> = (-k..=k).map(|i| i as f64 * h).collect();
    let values: Vec<f64> = times
        .iter()
        .map(|&t| base_solution(&params, t).expect("exponential regime"))
        .collect();
    validate_series(&times, &values).expect("symmetric grid")
}

/// `m × n` feature table filled by a fixed linear congruential sequence.
pub fn feature_table(m: usize, n: usize) -> FeatureMatrix {
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let mut next = || {
        state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let entries: Vec<f64> = (0..m * n).map(|_| 10.0 * next()).collect();
    FeatureMatrix::new(
        (0..m).map(|i| format!("journal{i}")).collect(),
        (0..n).map(|j| format!("f{j}")).collect(),
        DenseMatrix::new(m, n, entries).expect("finite entries"),
    )
    .expect("valid table")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        assert_eq!(exponential_series(0.2, 0.6, 1.0, 3.0, 60).len(), 121);
        let t = feature_table(8, 5);
        assert_eq!((t.n_journals(), t.n_features()), (8, 5));
        assert_eq!(t, feature_table(8, 5));
    }
}
