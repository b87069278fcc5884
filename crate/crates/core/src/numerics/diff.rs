use crate::model::InfluenceSeries;

/// Finite-difference scheme for `p'(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FdMode {
    /// `(p(t+h) − p(t)) / h`, defined at every sample but the last.
    Forward,
    /// `(p(t+h) − p(t−h)) / 2h`, defined at interior samples.
    #[default]
    Central,
}

impl FdMode {
    /// Sample indices at which the scheme yields an estimate.
    pub fn support(&self, len: usize) -> std::ops::Range<usize> {
        match self {
            FdMode::Forward => 0..len.saturating_sub(1),
            FdMode::Central => 1..len.saturating_sub(1),
        }
    }
}

impl std::str::FromStr for FdMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "forward" => Ok(FdMode::Forward),
            "central" => Ok(FdMode::Central),
            other => Err(format!("unknown finite-difference mode `{other}`")),
        }
    }
}

/// Derivative estimates at the indices in `mode.support(series.len())`, in order.
pub fn finite_diff(series: &InfluenceSeries, mode: FdMode) -> Vec<f64> {
    let p = series.values();
    let h = series.step();
    mode.support(p.len())
        .map(|i| match mode {
            FdMode::Forward => (p[i + 1] - p[i]) / h,
            FdMode::Central => (p[i + 1] - p[i - 1]) / (2.0 * h),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::validate_series;

    fn sampled(f: impl Fn(f64) -> f64, h: f64, half: usize) -> InfluenceSeries {
        let times: Vec<f64> = (-(half as i64)..=half as i64).map(|i| i as f64 * h).collect();
        let values: Vec<f64> = times.iter().map(|&t| f(t)).collect();
        validate_series(&times, &values).unwrap()
    }

    #[test]
    fn quadratic() {
        let s = sampled(|t| t * t, 0.1, 11);
        let c = finite_diff(&s, FdMode::Central);
        let f = finite_diff(&s, FdMode::Forward);
        assert_eq!(c.len(), 21);
        assert_eq!(f.len(), 22);
        // t = 1 is sample 21; central output starts at sample 1
        assert!((s.times()[21] - 1.0).abs() < 1e-12);
        assert!((c[20] - 2.0).abs() < 1e-12);
        assert!((f[21] - 2.1).abs() < 1e-12);
    }

    #[test]
    fn sine_at_origin() {
        let h = 0.01;
        let s = sampled(f64::sin, h, 3);
        let c = finite_diff(&s, FdMode::Central);
        let expected = 1.0 - h * h / 6.0;
        assert!((c[s.origin_index() - 1] - expected).abs() < 1e-9);
    }

    #[test]
    fn minimal_series() {
        let s = sampled(|t| t, 1.0, 1);
        assert_eq!(finite_diff(&s, FdMode::Central), vec![1.0]);
        assert_eq!(finite_diff(&s, FdMode::Forward), vec![1.0, 1.0]);
    }
}
