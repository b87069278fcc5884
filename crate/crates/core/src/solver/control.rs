//! Model augmented with editorial reputation `θ(t)` and publisher goodwill `η`.
//!
//! The forced model is handled in its second-order form
//!
//! ```text
//! p'' − (b² − a²)·p = (a + b)·θ(t) + F_η(t)
//! ```
//!
//! with `F_η = k·e^{k1·t}` for time-exponential goodwill and
//! `F_η = (a + b)·η` for the constant article-based goodwill. The solution is
//! `c1·e^{rt} + c2·e^{−rt}` plus one particular integral per forcing term:
//!
//! | forcing              | particular integral              |
//! |----------------------|----------------------------------|
//! | `θ` constant         | `θ / (a − b)`                    |
//! | `θ = A·t + B`        | `(A·t + B) / (a − b)`            |
//! | `θ = e^{A·t}`        | `(a + b)·e^{A·t} / (A² − r²)`    |
//! | `η` article-based    | `η / (a − b)`                    |
//! | `η = k·e^{k1·t}`     | `k·e^{k1·t} / (k1² − r²)`        |

use super::{require, SolverError};
use crate::model::{ControlConfig, DdeParams, EtaTerm, RegimeKind, ThetaTerm};
use crate::numerics::precision::Real;
use crate::numerics::solve_2x2;

/// `η = e^{−art} + α·(a − b)`, goodwill from the fraction of accepted
/// articles beyond the initial threshold.
pub fn eta_article(art: f64, alpha: f64, params: &DdeParams) -> Result<f64, SolverError> {
    if !(0.0..=1.0).contains(&art) {
        return Err(SolverError::OutOfRange(art));
    }
    Ok((-art).exp() + alpha * (params.a() - params.b()))
}

/// Raised (non-fatally) when the influence at `t = 0` comes out negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativeInfluenceWarning {
    pub p_at_zero: f64,
}

impl std::fmt::Display for NegativeInfluenceWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "influence at t = 0 is negative ({})", self.p_at_zero)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlValue {
    pub value: f64,
    pub warning: Option<NegativeInfluenceWarning>,
}

/// Forced model with fixed homogeneous amplitudes `c1`, `c2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlledModel {
    params: DdeParams,
    cfg: ControlConfig,
    c1: f64,
    c2: f64,
    r: f64,
    /// Constant article-based goodwill, if configured.
    eta_const: Option<f64>,
}

impl ControlledModel {
    pub fn new(params: DdeParams, cfg: ControlConfig, c1: f64, c2: f64) -> Result<Self, SolverError> {
        let regime = require("control_solution", &params, RegimeKind::Exponential)?;
        // re-check the resonance guards against these particular params
        let cfg = ControlConfig::new(cfg.theta(), cfg.eta(), &params)?;
        let eta_const = match cfg.eta() {
            EtaTerm::ArticleBased { alpha, art } => Some(eta_article(art, alpha, &params)?),
            _ => None,
        };
        Ok(Self {
            params,
            cfg,
            c1,
            c2,
            r: regime.r,
            eta_const,
        })
    }

    /// Amplitudes chosen so that `p(0) = p0` and `p'(0) = (a+b)·p0 + θ(0) + η(0)`.
    pub fn from_initial_conditions(params: DdeParams, cfg: ControlConfig) -> Result<Self, SolverError> {
        let (c1, c2) = initial_conditions_to_modes(&params, &cfg)?;
        Self::new(params, cfg, c1, c2)
    }

    pub fn params(&self) -> &DdeParams {
        &self.params
    }

    pub fn config(&self) -> &ControlConfig {
        &self.cfg
    }

    pub fn amplitudes(&self) -> (f64, f64) {
        (self.c1, self.c2)
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// Sum of the particular integrals at `t`.
    pub fn particular<T: Real>(&self, t: T) -> T {
        let a = T::from_f64(self.params.a());
        let b = T::from_f64(self.params.b());
        let r_sq = self.rate_sq::<T>();
        let theta_part = match self.cfg.theta() {
            ThetaTerm::Constant(theta) => T::from_f64(theta) / (a - b),
            ThetaTerm::Linear { slope, intercept } => {
                (T::from_f64(slope) * t + T::from_f64(intercept)) / (a - b)
            }
            ThetaTerm::Exponential { rate } => {
                let rate = T::from_f64(rate);
                (a + b) * (rate * t).exp() / (rate * rate - r_sq)
            }
        };
        let eta_part = match self.cfg.eta() {
            EtaTerm::None => T::from_f64(0.0),
            EtaTerm::ArticleBased { .. } => T::from_f64(self.eta_const.unwrap_or(0.0)) / (a - b),
            EtaTerm::TimeExponential { k, k1 } => {
                let k1 = T::from_f64(k1);
                T::from_f64(k) * (k1 * t).exp() / (k1 * k1 - r_sq)
            }
        };
        theta_part + eta_part
    }

    /// Derivative of [`particular`](Self::particular).
    pub fn particular_slope(&self, t: f64) -> f64 {
        let (a, b) = (self.params.a(), self.params.b());
        let r_sq = self.params.rate_sq();
        let theta_slope = match self.cfg.theta() {
            ThetaTerm::Constant(_) => 0.0,
            ThetaTerm::Linear { slope, .. } => slope / (a - b),
            ThetaTerm::Exponential { rate } => (a + b) * rate * (rate * t).exp() / (rate * rate - r_sq),
        };
        let eta_slope = match self.cfg.eta() {
            EtaTerm::TimeExponential { k, k1 } => k * k1 * (k1 * t).exp() / (k1 * k1 - r_sq),
            _ => 0.0,
        };
        theta_slope + eta_slope
    }

    /// Right-hand side `(a + b)·θ(t) + F_η(t)` of the second-order form.
    pub fn forcing<T: Real>(&self, t: T) -> T {
        let a = T::from_f64(self.params.a());
        let b = T::from_f64(self.params.b());
        let theta = match self.cfg.theta() {
            ThetaTerm::Constant(theta) => T::from_f64(theta),
            ThetaTerm::Linear { slope, intercept } => T::from_f64(slope) * t + T::from_f64(intercept),
            ThetaTerm::Exponential { rate } => (T::from_f64(rate) * t).exp(),
        };
        let eta = match self.cfg.eta() {
            EtaTerm::None => T::from_f64(0.0),
            EtaTerm::ArticleBased { .. } => (a + b) * T::from_f64(self.eta_const.unwrap_or(0.0)),
            EtaTerm::TimeExponential { k, k1 } => T::from_f64(k) * (T::from_f64(k1) * t).exp(),
        };
        (a + b) * theta + eta
    }

    /// `b² − a²` in the requested precision.
    pub fn rate_sq<T: Real>(&self) -> T {
        let a = T::from_f64(self.params.a());
        let b = T::from_f64(self.params.b());
        b * b - a * a
    }

    /// `p(t)` evaluated entirely in `T`.
    pub fn eval_in<T: Real>(&self, t: T) -> T {
        let r = self.rate_sq::<T>().sqrt();
        let rt = r * t;
        T::from_f64(self.c1) * rt.exp() + T::from_f64(self.c2) * (-rt).exp() + self.particular(t)
    }

    pub fn eval(&self, t: f64) -> f64 {
        let rt = self.r * t;
        self.c1 * rt.exp() + self.c2 * (-rt).exp() + self.particular(t)
    }

    pub fn initial_value(&self) -> f64 {
        self.eval(0.0)
    }

    pub fn warning(&self) -> Option<NegativeInfluenceWarning> {
        let p_at_zero = self.initial_value();
        (p_at_zero < 0.0).then_some(NegativeInfluenceWarning { p_at_zero })
    }
}

/// `θ(0) + η(0)` as it enters the initial slope.
fn forcing_at_origin(params: &DdeParams, cfg: &ControlConfig) -> Result<f64, SolverError> {
    let theta = cfg.theta().value(0.0);
    let eta = match cfg.eta() {
        EtaTerm::None => 0.0,
        EtaTerm::ArticleBased { alpha, art } => eta_article(art, alpha, params)?,
        EtaTerm::TimeExponential { k, .. } => k,
    };
    Ok(theta + eta)
}

/// `(c1, c2)` solving `p(0) = p0` and `p'(0) = (a+b)·p0 + θ(0) + η(0)`.
pub fn initial_conditions_to_modes(params: &DdeParams, cfg: &ControlConfig) -> Result<(f64, f64), SolverError> {
    let bare = ControlledModel::new(*params, *cfg, 0.0, 0.0)?;
    let r = bare.r();
    let p0 = params.p0();
    let slope0 = (params.a() + params.b()) * p0 + forcing_at_origin(params, cfg)?;
    let rhs_value = p0 - bare.particular(0.0);
    let rhs_slope = slope0 - bare.particular_slope(0.0);
    // c1 + c2 = rhs_value, r·c1 − r·c2 = rhs_slope; non-singular since r > 0
    let (c1, c2) = solve_2x2(1.0, 1.0, r, -r, rhs_value, rhs_slope)?;
    Ok((c1, c2))
}

/// Forced solution at `t` with explicit homogeneous amplitudes.
pub fn control_solution(
    params: &DdeParams,
    cfg: &ControlConfig,
    c1: f64,
    c2: f64,
    t: f64,
) -> Result<ControlValue, SolverError> {
    let model = ControlledModel::new(*params, *cfg, c1, c2)?;
    Ok(ControlValue {
        value: model.eval(t),
        warning: model.warning(),
    })
}
