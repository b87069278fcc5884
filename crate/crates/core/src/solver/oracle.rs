//! Numerical reference for the base model.
//!
//! Writing `u(t) = p(t)` and `v(t) = p(−t)` for `t ≥ 0` turns the delay into an
//! ordinary system
//!
//! ```text
//! u' =   b·u + a·v
//! v' = −(b·v + a·u)
//! ```
//!
//! with `u(0) = v(0) = p0`, which RK4 integrates without knowing anything about
//! the closed forms.

use super::{base_solution, classify, degenerate_solution, oscillatory_solution, SolverError};
use crate::model::{DdeParams, RegimeKind};
use crate::numerics::{rk4_integrate, NumericsError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionSample {
    pub t: f64,
    pub p: f64,
}

/// Samples of `p` on `[−t_max, t_max]` in ascending `t`, valid in every regime.
pub fn oracle_solution(params: &DdeParams, t_max: f64, step: f64) -> Result<Vec<SolutionSample>, SolverError> {
    let (a, b) = (params.a(), params.b());
    let p0 = params.p0();
    let traj = rk4_integrate(|_, y| [b * y[0] + a * y[1], -(b * y[1] + a * y[0])], [p0, p0], t_max, step)?;

    let mut out = Vec::with_capacity(2 * traj.len() - 1);
    out.extend(traj.iter().rev().map(|&(t, y)| SolutionSample { t: -t, p: y[1] }));
    out.pop(); // t = 0 appears once, from u
    out.extend(traj.iter().map(|&(t, y)| SolutionSample { t, p: y[0] }));
    Ok(out)
}

/// Value at `t` if it coincides with a sample time (to 1e-9 of the spacing).
pub fn sample_at(samples: &[SolutionSample], t: f64) -> Option<f64> {
    let idx = samples.partition_point(|s| s.t < t);
    let tol = match samples {
        [first, second, ..] => 1e-9 * (second.t - first.t).abs(),
        _ => 1e-12,
    };
    [idx.checked_sub(1), Some(idx)]
        .into_iter()
        .flatten()
        .filter_map(|i| samples.get(i))
        .find(|s| (s.t - t).abs() <= tol)
        .map(|s| s.p)
}

/// Closed form for whatever regime `params` is in.
fn closed_form(params: &DdeParams, t: f64) -> Result<f64, SolverError> {
    match classify(params).kind {
        RegimeKind::Exponential => base_solution(params, t),
        RegimeKind::Degenerate => degenerate_solution(params, t),
        RegimeKind::Oscillatory => Ok(oscillatory_solution(params, t)?.value),
    }
}

/// Largest `|closed − oracle| / max(|oracle|, |p0|)` over the oracle grid.
pub fn oracle_deviation(params: &DdeParams, t_max: f64, step: f64) -> Result<f64, SolverError> {
    let samples = oracle_solution(params, t_max, step)?;
    let scale_floor = params.p0().abs();
    let mut worst = 0.0f64;
    for s in &samples {
        let exact = closed_form(params, s.t)?;
        let scale = s.p.abs().max(scale_floor);
        let dev = if scale > 0.0 { (exact - s.p).abs() / scale } else { (exact - s.p).abs() };
        if !dev.is_finite() {
            return Err(NumericsError::NonFiniteState { t: s.t }.into());
        }
        worst = worst.max(dev);
    }
    Ok(worst)
}
