//! Time-reversed delay-differential model of journal influence.
//!
//! The model couples the rate of change of influence to its mirrored history,
//! `p'(t) = a·p(−t) + b·p(t)`, with `p(0) = p0`. This crate provides
//!
//! * closed-form solutions for every regime of the model plus forcing terms
//!   for editorial reputation and publisher goodwill ([`solver`]),
//! * an independent RK4 mirror-system oracle for checking them,
//! * least-squares recovery of the coefficients from sampled influence
//!   series ([`fitting`]),
//! * the recursive L1-norm SVD journal ranking ([`ranking`]),
//! * the small numerical kernels everything above is built on ([`numerics`]).
//!
//! Shared domain types live in [`model`] and are re-exported at the crate root.

pub mod fitting;
pub mod model;
pub mod numerics;
pub mod ranking;
pub mod solver;

pub use fitting::{fit_ab, fit_modes, fit_pipeline, modes_to_ab, FitError, FitReport, FitStage};
pub use model::{
    validate_series, ControlConfig, DdeParams, EtaTerm, FeatureMatrix, InfluenceSeries,
    ModeCoefficients, ModelError, RankingEntry, RankingResult, Regime, RegimeKind, ThetaTerm,
};
pub use numerics::{DenseMatrix, FdMode, NumericsError};
pub use ranking::{rank_journals, standardize, EliminationStep, EliminationTrace, RankingError};
pub use solver::{
    base_solution, classify, control_solution, degenerate_solution, eta_article,
    initial_conditions_to_modes, linear_growth_solution, nonsymmetric_solution,
    oracle_solution, oscillatory_solution, ControlValue, ControlledModel, NonsymmetricValue,
    OscillatoryValue, SolutionSample, SolverError,
};
