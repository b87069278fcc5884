//! Closed-form solutions of the time-reversed influence model.
//!
//! Under `p'(t) = a·p(−t) + b·p(t)` differentiating once more gives
//! `p'' = (b² − a²)·p`, so the sign of `b² − a²` selects the solution family:
//! two real exponentials, a trigonometric pair, or (at the boundary) a
//! straight line. [`oracle`] integrates the same model numerically as an
//! independent check.

mod control;
mod oracle;

use thiserror::Error;

use crate::model::{DdeParams, ModelError, Regime, RegimeKind};
use crate::numerics::precision::Real;
use crate::numerics::NumericsError;

pub use control::{
    control_solution, eta_article, initial_conditions_to_modes, ControlValue, ControlledModel,
    NegativeInfluenceWarning,
};
pub use oracle::{oracle_deviation, oracle_solution, sample_at, SolutionSample};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("{operation} needs the {expected} regime but the parameters are {actual}")]
    WrongRegime {
        operation: &'static str,
        expected: RegimeKind,
        actual: RegimeKind,
    },
    #[error("coefficient `{0}` must be non-zero")]
    ZeroCoefficient(&'static str),
    #[error("accepted-article fraction must lie in [0, 1], got {0}")]
    OutOfRange(f64),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Regime of `params`; see [`Regime::of`].
pub fn classify(params: &DdeParams) -> Regime {
    params.regime()
}

fn require(operation: &'static str, params: &DdeParams, expected: RegimeKind) -> Result<Regime, SolverError> {
    let regime = classify(params);
    if regime.kind != expected {
        return Err(SolverError::WrongRegime {
            operation,
            expected,
            actual: regime.kind,
        });
    }
    Ok(regime)
}

/// `p(t) = (p0/2r)(r+a+b)e^{rt} + (p0/2r)(r−a−b)e^{−rt}` for an explicit `r`.
///
/// Only a solution of the model when `r = √(b² − a²)`; exposed separately so
/// limits (`r → 0`) can be probed directly.
pub fn exponential_closed_form<T: Real>(a: T, b: T, p0: T, r: T, t: T) -> T {
    // same expression regrouped as p0·(cosh(rt) + ((a+b)/r)·sinh(rt)), exact at t = 0
    let two = T::from_f64(2.0);
    let (up, down) = ((r * t).exp(), (-(r * t)).exp());
    let cosh = (up + down) / two;
    let sinh = (up - down) / two;
    p0 * (cosh + (a + b) / r * sinh)
}

/// Exponential-regime solution; `p(0) = p0`, `p'(0) = (a+b)·p0`.
pub fn base_solution(params: &DdeParams, t: f64) -> Result<f64, SolverError> {
    let regime = require("base_solution", params, RegimeKind::Exponential)?;
    Ok(exponential_closed_form(params.a(), params.b(), params.p0(), regime.r, t))
}

/// The `r → 0` limit `p0·(1 + (a+b)·t)`, valid when `b² = a²`.
pub fn degenerate_solution(params: &DdeParams, t: f64) -> Result<f64, SolverError> {
    require("degenerate_solution", params, RegimeKind::Degenerate)?;
    Ok(params.p0() * (1.0 + (params.a() + params.b()) * t))
}

/// Marker carried by every oscillatory evaluation: such solutions have no
/// fixed period and are not admissible influence curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Infeasible;

#[derive(Debug, Clone, Copy, PartialEq)]
#[must_use = "oscillatory values are infeasible and the flag must be surfaced"]
pub struct OscillatoryValue {
    pub value: f64,
    pub flag: Infeasible,
}

/// `p0·cos(ωt) + p0·((a+b)/ω)·sin(ωt)` with `ω = √(a² − b²)`.
pub fn oscillatory_solution(params: &DdeParams, t: f64) -> Result<OscillatoryValue, SolverError> {
    let regime = require("oscillatory_solution", params, RegimeKind::Oscillatory)?;
    let omega = regime.r;
    let s = params.a() + params.b();
    let p0 = params.p0();
    Ok(OscillatoryValue {
        value: p0 * (omega * t).cos() + p0 * (s / omega) * (omega * t).sin(),
        flag: Infeasible,
    })
}

/// Result of the history-free model `a_c·p' = b_c + c_c·p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NonsymmetricValue {
    Exponential(f64),
    /// `c_c = 0`: pure linear growth.
    Linear(f64),
}

impl NonsymmetricValue {
    pub fn value(&self) -> f64 {
        match *self {
            NonsymmetricValue::Exponential(v) | NonsymmetricValue::Linear(v) => v,
        }
    }
}

/// `p(t) = −b_c/c_c + (p0 + b_c/c_c)·e^{(c_c/a_c)·t}`, via the integrating factor
/// `e^{−(c_c/a_c)t}`.
pub fn nonsymmetric_solution(a_c: f64, b_c: f64, c_c: f64, p0: f64, t: f64) -> Result<NonsymmetricValue, SolverError> {
    if a_c == 0.0 {
        return Err(SolverError::ZeroCoefficient("a_c"));
    }
    if c_c == 0.0 {
        return Ok(NonsymmetricValue::Linear(p0 + (b_c / a_c) * t));
    }
    let shift = b_c / c_c;
    Ok(NonsymmetricValue::Exponential(-shift + (p0 + shift) * ((c_c / a_c) * t).exp()))
}

/// Symmetric-influence case `p(t) = p(−t)`, where `p'' = 0`:
/// `p(t) = p0 + (b_c/a_c + (c_c/a_c)·p0)·t`.
pub fn linear_growth_solution(a_c: f64, b_c: f64, c_c: f64, p0: f64, t: f64) -> Result<f64, SolverError> {
    if a_c == 0.0 {
        return Err(SolverError::ZeroCoefficient("a_c"));
    }
    Ok(p0 + (b_c / a_c + (c_c / a_c) * p0) * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rk4_integrate;
    use proptest::prelude::*;
    use std::f64::consts::{E, FRAC_PI_2};

    fn params(a: f64, b: f64, p0: f64) -> DdeParams {
        DdeParams::new(a, b, p0, 5.0).unwrap()
    }

    fn central(f: impl Fn(f64) -> f64, t: f64, h: f64) -> f64 {
        (f(t + h) - f(t - h)) / (2.0 * h)
    }

    #[test]
    fn classify_examples() {
        let r = classify(&params(0.3, 0.5, 1.0));
        assert_eq!(r.kind, RegimeKind::Exponential);
        assert!((r.r - 0.4).abs() < 1e-15);
        assert_eq!(classify(&params(0.5, 0.3, 1.0)).kind, RegimeKind::Oscillatory);
        let d = classify(&params(0.4, 0.4, 1.0));
        assert_eq!((d.kind, d.r), (RegimeKind::Degenerate, 0.0));
    }

    #[test]
    fn base_solution_examples() {
        let v = base_solution(&params(0.0, 1.0, 1.0), 1.0).unwrap();
        assert!((v - E).abs() < 1e-14);
        let p = params(0.3, 0.5, 1.7);
        assert_eq!(base_solution(&p, 0.0).unwrap(), 1.7);
        assert!(matches!(
            base_solution(&params(0.5, 0.3, 1.0), 1.0),
            Err(SolverError::WrongRegime { .. })
        ));
        assert!(base_solution(&params(0.4, 0.4, 1.0), 1.0).is_err());
    }

    #[test]
    fn base_solution_initial_slope() {
        let p = params(0.3, 0.5, 2.0);
        let slope = central(|t| base_solution(&p, t).unwrap(), 0.0, 1e-5);
        assert!((slope - 0.8 * 2.0).abs() < 1e-8);
    }

    #[test]
    fn base_solution_against_mirror_rk4() {
        // independent of oracle.rs: integrate u' = bu + av, v' = −(bv + au) directly
        let (a, b, p0) = (0.3, 0.5, 1.0);
        let traj = rk4_integrate(|_, y| [b * y[0] + a * y[1], -(b * y[1] + a * y[0])], [p0, p0], 2.0, 1e-3).unwrap();
        let (t, y) = *traj.last().unwrap();
        let p = params(a, b, p0);
        let exact = base_solution(&p, t).unwrap();
        assert!((y[0] - exact).abs() <= 1e-6 * exact.abs());
        let mirrored = base_solution(&p, -t).unwrap();
        assert!((y[1] - mirrored).abs() <= 1e-6 * mirrored.abs());
    }

    #[test]
    fn degenerate_examples() {
        let p = params(0.4, 0.4, 1.0);
        assert_eq!(degenerate_solution(&p, 0.0).unwrap(), 1.0);
        assert!((degenerate_solution(&p, 1.0).unwrap() - 1.8).abs() < 1e-15);
        let q = params(-0.4, 0.4, 2.0);
        for t in [-3.0, 0.0, 0.5, 7.0] {
            assert_eq!(degenerate_solution(&q, t).unwrap(), 2.0);
        }
        assert!(degenerate_solution(&params(0.3, 0.5, 1.0), 1.0).is_err());
    }

    #[test]
    fn degenerate_is_limit_of_closed_form() {
        let (a, b, p0) = (0.4, 0.4, 1.3);
        let lim = degenerate_solution(&params(a, b, p0), 2.0).unwrap();
        let near = exponential_closed_form(a, b, p0, 1e-6, 2.0);
        assert!((lim - near).abs() <= 1e-6 * lim.abs());
    }

    #[test]
    fn oscillatory_examples() {
        let p = params(0.5, 0.3, 1.5);
        let v = oscillatory_solution(&p, 0.0).unwrap();
        assert_eq!(v.value, 1.5);
        assert_eq!(v.flag, Infeasible);
        let q = params(1.0, 0.0, 1.0);
        let v = oscillatory_solution(&q, FRAC_PI_2).unwrap();
        assert!((v.value - 1.0).abs() < 1e-15);
        assert!(oscillatory_solution(&params(0.3, 0.5, 1.0), 0.0).is_err());
    }

    #[test]
    fn oscillatory_satisfies_the_model() {
        let p = params(0.7, -0.2, 1.1);
        let f = |t: f64| oscillatory_solution(&p, t).unwrap().value;
        for t in [-2.0, -0.3, 0.0, 1.4, 3.0] {
            let res = central(f, t, 1e-5) - p.a() * f(-t) - p.b() * f(t);
            assert!(res.abs() < 1e-8, "t = {t}: {res}");
        }
    }

    #[test]
    fn nonsymmetric_examples() {
        assert_eq!(nonsymmetric_solution(2.0, 0.5, 1.0, 3.0, 0.0).unwrap().value(), 3.0);
        let v = nonsymmetric_solution(2.0, 0.0, 0.6, 1.5, 1.2).unwrap();
        assert!((v.value() - 1.5 * (0.3f64 * 1.2).exp()).abs() < 1e-14);
        // RK4 on p' = 1 + p, p(0) = 0
        let traj = rk4_integrate(|_, y| [1.0 + y[0], 0.0], [0.0, 0.0], 1.0, 1e-3).unwrap();
        let v = nonsymmetric_solution(1.0, 1.0, 1.0, 0.0, 1.0).unwrap();
        assert!((v.value() - traj.last().unwrap().1[0]).abs() < 1e-10);
        assert!((v.value() - (E - 1.0)).abs() < 1e-14);
        assert_eq!(
            nonsymmetric_solution(2.0, 1.0, 0.0, 1.0, 4.0).unwrap(),
            NonsymmetricValue::Linear(3.0)
        );
        assert!(matches!(
            nonsymmetric_solution(0.0, 1.0, 1.0, 1.0, 1.0),
            Err(SolverError::ZeroCoefficient("a_c"))
        ));
    }

    #[test]
    fn linear_growth_examples() {
        assert_eq!(linear_growth_solution(1.0, 2.0, 0.0, 5.0, 0.0).unwrap(), 5.0);
        assert_eq!(linear_growth_solution(1.0, 2.0, 0.0, 5.0, 3.0).unwrap(), 11.0);
        assert!(linear_growth_solution(0.0, 2.0, 0.0, 5.0, 3.0).is_err());
    }

    proptest! {
        #[test]
        fn linear_growth_has_zero_second_difference(
            a_c in 0.1f64..3.0, b_c in -2.0f64..2.0, c_c in -2.0f64..2.0, p0 in -3.0f64..3.0
        ) {
            let h = 0.25;
            let f = |t: f64| linear_growth_solution(a_c, b_c, c_c, p0, t).unwrap();
            for i in -8..8 {
                let t = i as f64 * h;
                let d2 = f(t + h) - 2.0 * f(t) + f(t - h);
                prop_assert!(d2.abs() <= 1e-10);
            }
        }

        #[test]
        fn base_solution_dde_residual(a in -1.0f64..1.0, b in -1.0f64..1.0, p0 in 0.1f64..2.0) {
            prop_assume!(b * b - a * a > 1e-3);
            let p = params(a, b, p0);
            let f = |t: f64| base_solution(&p, t).unwrap();
            prop_assert_eq!(f(0.0), p0);
            for i in -50..=50 {
                let t = i as f64 * 0.1;
                let res = central(f, t, 1e-5) - a * f(-t) - b * f(t);
                prop_assert!(res.abs() <= 1e-7, "t = {}: residual {}", t, res);
            }
        }
    }
}
