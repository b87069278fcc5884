//! Least-squares recovery of the model from a sampled influence series.
//!
//! Two regressions run back to back. The first estimates `(a, b)` from
//! `p'(t) ≈ a·p(−t) + b·p(t)` using finite-difference derivatives. The second
//! multiplies the exponential solution by `e^{rt}`, which turns it into the
//! straight line `Y = w1·X + w2` with `X = e^{2rt}`, `Y = e^{rt}·p(t)`. The mode
//! amplitudes `A`, `B` then follow from `aA + bB = w1`, `aB + bA = w2`.

use thiserror::Error;

use crate::model::{DdeParams, InfluenceSeries, ModeCoefficients, ModelError, Regime, RegimeKind};
use crate::numerics::{finite_diff, solve_2x2, FdMode, NumericsError};

/// Pipeline stage an error came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitStage {
    FitAb,
    FitModes,
    ModesToAb,
}

impl FitStage {
    pub fn as_str(&self) -> &'static str {
        match self {
            FitStage::FitAb => "fit_ab",
            FitStage::FitModes => "fit_modes",
            FitStage::ModesToAb => "modes_to_AB",
        }
    }
}

impl std::fmt::Display for FitStage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FitError {
    #[error("{stage}: normal equations are singular (det = {det:e})")]
    DegenerateSystem { stage: FitStage, det: f64 },
    #[error("fit_modes: r must be positive, got {0}")]
    NonPositiveR(f64),
    #[error("{stage}: need at least {need} usable points, got {have}")]
    InsufficientPoints { stage: FitStage, have: usize, need: usize },
    #[error("{stage}: {source}")]
    Numerics { stage: FitStage, source: NumericsError },
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl FitError {
    fn at(stage: FitStage, err: NumericsError) -> FitError {
        match err {
            NumericsError::SingularSystem { det } => FitError::DegenerateSystem { stage, det },
            source => FitError::Numerics { stage, source },
        }
    }

    /// Stage the error is attributed to, if any.
    pub fn stage(&self) -> Option<FitStage> {
        match self {
            FitError::DegenerateSystem { stage, .. }
            | FitError::InsufficientPoints { stage, .. }
            | FitError::Numerics { stage, .. } => Some(*stage),
            FitError::NonPositiveR(_) => Some(FitStage::FitModes),
            FitError::Model(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    /// Estimated `a`, `b`; `p0` is the sample at `t = 0`.
    pub params: DdeParams,
    /// Present only in the exponential regime.
    pub modes: Option<ModeCoefficients>,
    pub regime: Regime,
    pub rss_ab: f64,
    pub rss_modes: Option<f64>,
    /// Samples in the input series.
    pub n_points: usize,
    /// Why `modes` is missing, when it is.
    pub note: Option<String>,
}

/// Least-squares `(a, b, rss)` for `z = a·x + b·y` with `z = p'(t)`,
/// `x = p(−t)`, `y = p(t)`.
pub fn fit_ab(series: &InfluenceSeries, mode: FdMode) -> Result<(f64, f64, f64), FitError> {
    let z = finite_diff(series, mode);
    let support = mode.support(series.len());
    if z.len() < 3 {
        return Err(FitError::InsufficientPoints {
            stage: FitStage::FitAb,
            have: z.len(),
            need: 3,
        });
    }
    let p = series.values();
    let rows: Vec<(f64, f64, f64)> = support
        .zip(&z)
        .map(|(i, &zi)| (p[series.mirror_index(i)], p[i], zi))
        .collect();

    let (mut sxx, mut sxy, mut syy, mut szx, mut szy) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for &(x, y, z) in &rows {
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        szx += z * x;
        szy += z * y;
    }
    let (a, b) = solve_2x2(sxx, sxy, sxy, syy, szx, szy).map_err(|e| FitError::at(FitStage::FitAb, e))?;
    let rss = rows.iter().map(|&(x, y, z)| (z - a * x - b * y).powi(2)).sum();
    Ok((a, b, rss))
}

/// Least-squares `(w1, w2, rss)` for `e^{rt}·p(t) = w1·e^{2rt} + w2`.
///
/// The residual is measured in the transformed `Y` space.
pub fn fit_modes(series: &InfluenceSeries, r: f64) -> Result<(f64, f64, f64), FitError> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(FitError::NonPositiveR(r));
    }
    let xy: Vec<(f64, f64)> = series
        .times()
        .iter()
        .zip(series.values())
        .map(|(&t, &p)| {
            let e = (r * t).exp();
            (e * e, e * p)
        })
        .collect();
    let n = xy.len() as f64;
    let (mut sxx, mut sx, mut sxy, mut sy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in &xy {
        sxx += x * x;
        sx += x;
        sxy += x * y;
        sy += y;
    }
    let (w1, w2) = solve_2x2(sxx, sx, sx, n, sxy, sy).map_err(|e| FitError::at(FitStage::FitModes, e))?;
    let rss = xy.iter().map(|&(x, y)| (y - w1 * x - w2).powi(2)).sum();
    Ok((w1, w2, rss))
}

/// Solves `aA + bB = w1`, `bA + aB = w2` for `(A, B)`.
pub fn modes_to_ab(w1: f64, w2: f64, a: f64, b: f64) -> Result<(f64, f64), NumericsError> {
    solve_2x2(a, b, b, a, w1, w2)
}

/// `fit_ab`, classification, and in the exponential regime `fit_modes` and
/// `modes_to_ab`.
pub fn fit_pipeline(series: &InfluenceSeries, mode: FdMode) -> Result<FitReport, FitError> {
    let (a, b, rss_ab) = fit_ab(series, mode)?;
    let half_width = series.times()[series.len() - 1];
    let params = DdeParams::new(a, b, series.origin_value(), half_width)?;
    let regime = params.regime();

    let (modes, rss_modes, note) = match regime.kind {
        RegimeKind::Exponential => {
            let (w1, w2, rss) = fit_modes(series, regime.r)?;
            let (mode_a, mode_b) = modes_to_ab(w1, w2, a, b).map_err(|e| FitError::at(FitStage::ModesToAb, e))?;
            let modes = ModeCoefficients { mode_a, mode_b, w1, w2 };
            (Some(modes), Some(rss), None)
        }
        RegimeKind::Oscillatory => (
            None,
            None,
            Some("b^2 < a^2: oscillatory regime, no real exponential modes to fit".to_string()),
        ),
        RegimeKind::Degenerate => (
            None,
            None,
            Some("b^2 = a^2: degenerate regime, the solution is linear and has no modes".to_string()),
        ),
    };

    Ok(FitReport {
        params,
        modes,
        regime,
        rss_ab,
        rss_modes,
        n_points: series.len(),
        note,
    })
}
