//! Domain types shared by the solver, fitting, ranking and the CLI.
//!
//! Everything here is immutable once built; constructors reject values that
//! break an invariant instead of clamping them.

use std::collections::HashSet;

use thiserror::Error;

use crate::numerics::DenseMatrix;

/// Relative tolerance used for every "is this quantity zero" guard on
/// `b² − a²` style expressions.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// Relative tolerance on grid spacing and mirror symmetry.
pub const GRID_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("times and values differ in length ({times} vs {values})")]
    LengthMismatch { times: usize, values: usize },
    #[error("series needs at least 3 samples, got {len}")]
    TooShort { len: usize },
    #[error("grid is not uniform at index {index}")]
    NonUniformGrid { index: usize },
    #[error("grid is not symmetric about 0: {detail}")]
    AsymmetricGrid { detail: String },
    #[error("non-finite value at index {index}")]
    NonFiniteValue { index: usize },
    #[error("parameter `{name}` is not finite")]
    NonFiniteParameter { name: &'static str },
    #[error("half width must be positive, got {0}")]
    NonPositiveHalfWidth(f64),
    #[error("accepted-article fraction must lie in [0, 1], got {0}")]
    ArticleFractionOutOfRange(f64),
    #[error("{term} rate² = {rate_sq} resonates with b² − a² = {r_sq}")]
    ResonantForcing {
        term: &'static str,
        rate_sq: f64,
        r_sq: f64,
    },
    #[error("mode coefficients violate w1 = aA + bB, w2 = aB + bA")]
    ModeInvariant,
    #[error("empty {0} name")]
    EmptyName(&'static str),
    #[error("duplicate journal name `{0}`")]
    DuplicateJournal(String),
    #[error("duplicate feature name `{0}`")]
    DuplicateFeature(String),
    #[error("feature matrix needs at least one journal")]
    NoJournals,
    #[error("feature matrix needs at least two features, got {0}")]
    TooFewFeatures(usize),
    #[error("data is {rows}x{cols} but names describe {journals}x{features}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        journals: usize,
        features: usize,
    },
    #[error("non-finite entry at row {row}, column {col}")]
    NonFiniteEntry { row: usize, col: usize },
    #[error("invalid ranking: {0}")]
    InvalidRanking(String),
}

// ---------------------------------------------------------------------------
// Influence series
// ---------------------------------------------------------------------------

/// Influence samples `p(t)` on a uniform grid that is symmetric about 0.
///
/// Symmetry is what lets the fitting code read `p(−t)` straight from the
/// data: the mirror of sample `i` is sample `len − 1 − i`.
#[derive(Debug, Clone, PartialEq)]
pub struct InfluenceSeries {
    times: Vec<f64>,
    values: Vec<f64>,
    step: f64,
}

impl InfluenceSeries {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Index of the sample at `−t_i`.
    pub fn mirror_index(&self, i: usize) -> usize {
        self.times.len() - 1 - i
    }

    /// Index of the `t = 0` sample.
    pub fn origin_index(&self) -> usize {
        self.times.len() / 2
    }

    /// Value at `t = 0`.
    pub fn origin_value(&self) -> f64 {
        self.values[self.origin_index()]
    }

    /// Same grid, values multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<InfluenceSeries, ModelError> {
        let values: Vec<f64> = self.values.iter().map(|v| v * factor).collect();
        validate_series(&self.times, &values)
    }
}

/// Build an [`InfluenceSeries`], inferring the step from the first spacing.
pub fn validate_series(raw_times: &[f64], raw_values: &[f64]) -> Result<InfluenceSeries, ModelError> {
    if raw_times.len() != raw_values.len() {
        return Err(ModelError::LengthMismatch {
            times: raw_times.len(),
            values: raw_values.len(),
        });
    }
    let n = raw_times.len();
    if n < 3 {
        return Err(ModelError::TooShort { len: n });
    }
    if let Some(index) = raw_times.iter().position(|t| !t.is_finite()) {
        return Err(ModelError::NonFiniteValue { index });
    }
    if let Some(index) = raw_values.iter().position(|v| !v.is_finite()) {
        return Err(ModelError::NonFiniteValue { index });
    }

    let step = raw_times[1] - raw_times[0];
    if step <= 0.0 {
        return Err(ModelError::NonUniformGrid { index: 1 });
    }
    let tol = GRID_TOL * step;
    for i in 0..n {
        let mirror = raw_times[n - 1 - i];
        if (raw_times[i] + mirror).abs() > tol {
            return Err(ModelError::AsymmetricGrid {
                detail: format!("t = {} has no mirror sample", raw_times[i]),
            });
        }
    }
    for (i, w) in raw_times.windows(2).enumerate() {
        if ((w[1] - w[0]) - step).abs() > tol {
            return Err(ModelError::NonUniformGrid { index: i + 1 });
        }
    }
    if n.is_multiple_of(2) {
        return Err(ModelError::AsymmetricGrid {
            detail: "grid does not contain t = 0".to_string(),
        });
    }

    Ok(InfluenceSeries {
        times: raw_times.to_vec(),
        values: raw_values.to_vec(),
        step,
    })
}

// ---------------------------------------------------------------------------
// Model parameters and regimes
// ---------------------------------------------------------------------------

/// Coefficients of `p'(t) = a·p(−t) + b·p(t)`, `p(0) = p0`, on `[−d, d]`.
///
/// `a` weighs the mirrored history, `b` the present.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DdeParams {
    a: f64,
    b: f64,
    p0: f64,
    half_width: f64,
}

impl DdeParams {
    pub fn new(a: f64, b: f64, p0: f64, half_width: f64) -> Result<Self, ModelError> {
        for (name, v) in [("a", a), ("b", b), ("p0", p0), ("half_width", half_width)] {
            if !v.is_finite() {
                return Err(ModelError::NonFiniteParameter { name });
            }
        }
        if half_width <= 0.0 {
            return Err(ModelError::NonPositiveHalfWidth(half_width));
        }
        Ok(Self { a, b, p0, half_width })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    /// `b² − a²`, the squared growth rate (negative when oscillatory).
    pub fn rate_sq(&self) -> f64 {
        self.b * self.b - self.a * self.a
    }

    pub fn regime(&self) -> Regime {
        Regime::of(self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegimeKind {
    Exponential,
    Oscillatory,
    Degenerate,
}

impl RegimeKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegimeKind::Exponential => "Exponential",
            RegimeKind::Oscillatory => "Oscillatory",
            RegimeKind::Degenerate => "Degenerate",
        }
    }
}

impl std::fmt::Display for RegimeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Solution class selected by the sign of `b² − a²`, with `r = √|b² − a²|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Regime {
    pub kind: RegimeKind,
    pub r: f64,
}

impl Regime {
    pub fn of(a: f64, b: f64) -> Regime {
        let rate_sq = b * b - a * a;
        let scale = (a * a + b * b).max(1.0);
        let kind = if rate_sq.abs() <= DEGENERACY_TOL * scale {
            RegimeKind::Degenerate
        } else if rate_sq > 0.0 {
            RegimeKind::Exponential
        } else {
            RegimeKind::Oscillatory
        };
        let r = match kind {
            RegimeKind::Degenerate => 0.0,
            _ => rate_sq.abs().sqrt(),
        };
        Regime { kind, r }
    }
}

/// Mode amplitudes `A`, `B` together with their images
/// `w1 = aA + bB`, `w2 = aB + bA`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeCoefficients {
    pub mode_a: f64,
    pub mode_b: f64,
    pub w1: f64,
    pub w2: f64,
}

impl ModeCoefficients {
    /// Checks the `w` images against `(a, b)` to 1e-9 absolute.
    pub fn new(mode_a: f64, mode_b: f64, w1: f64, w2: f64, a: f64, b: f64) -> Result<Self, ModelError> {
        let expected = Self::from_amplitudes(mode_a, mode_b, a, b);
        if (expected.w1 - w1).abs() > 1e-9 || (expected.w2 - w2).abs() > 1e-9 {
            return Err(ModelError::ModeInvariant);
        }
        Ok(Self { mode_a, mode_b, w1, w2 })
    }

    pub fn from_amplitudes(mode_a: f64, mode_b: f64, a: f64, b: f64) -> Self {
        Self {
            mode_a,
            mode_b,
            w1: a * mode_a + b * mode_b,
            w2: a * mode_b + b * mode_a,
        }
    }
}

// ---------------------------------------------------------------------------
// Control variables
// ---------------------------------------------------------------------------

/// Editorial reputation `θ(t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThetaTerm {
    Constant(f64),
    /// `θ(t) = slope·t + intercept`
    Linear { slope: f64, intercept: f64 },
    /// `θ(t) = e^{rate·t}`
    Exponential { rate: f64 },
}

impl ThetaTerm {
    pub fn value(&self, t: f64) -> f64 {
        match *self {
            ThetaTerm::Constant(theta) => theta,
            ThetaTerm::Linear { slope, intercept } => slope * t + intercept,
            ThetaTerm::Exponential { rate } => (rate * t).exp(),
        }
    }
}

/// Publisher goodwill `η`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EtaTerm {
    None,
    /// Time-independent goodwill from the accepted-article fraction `art`.
    ArticleBased { alpha: f64, art: f64 },
    /// Goodwill forcing `k·e^{k1·t}` in the second-order form.
    TimeExponential { k: f64, k1: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlConfig {
    theta: ThetaTerm,
    eta: EtaTerm,
}

impl ControlConfig {
    pub fn new(theta: ThetaTerm, eta: EtaTerm, params: &DdeParams) -> Result<Self, ModelError> {
        let finite = |name, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(ModelError::NonFiniteParameter { name })
            }
        };
        match theta {
            ThetaTerm::Constant(v) => finite("theta", v)?,
            ThetaTerm::Linear { slope, intercept } => {
                finite("theta_slope", slope)?;
                finite("theta_intercept", intercept)?;
            }
            ThetaTerm::Exponential { rate } => {
                finite("theta_rate", rate)?;
                check_resonance("theta", rate, params)?;
            }
        }
        match eta {
            EtaTerm::None => {}
            EtaTerm::ArticleBased { alpha, art } => {
                finite("alpha", alpha)?;
                finite("art", art)?;
                if !(0.0..=1.0).contains(&art) {
                    return Err(ModelError::ArticleFractionOutOfRange(art));
                }
            }
            EtaTerm::TimeExponential { k, k1 } => {
                finite("k", k)?;
                finite("k1", k1)?;
                check_resonance("eta", k1, params)?;
            }
        }
        Ok(Self { theta, eta })
    }

    /// No editorial or goodwill forcing.
    pub fn none() -> Self {
        Self {
            theta: ThetaTerm::Constant(0.0),
            eta: EtaTerm::None,
        }
    }

    pub fn theta(&self) -> ThetaTerm {
        self.theta
    }

    pub fn eta(&self) -> EtaTerm {
        self.eta
    }
}

fn check_resonance(term: &'static str, rate: f64, params: &DdeParams) -> Result<(), ModelError> {
    let rate_sq = rate * rate;
    let r_sq = params.rate_sq();
    let scale = (rate_sq + r_sq.abs()).max(1.0);
    if (rate_sq - r_sq).abs() <= DEGENERACY_TOL * scale {
        return Err(ModelError::ResonantForcing { term, rate_sq, r_sq });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Ranking data
// ---------------------------------------------------------------------------

/// Journal-by-metric table: one row per journal, one column per feature.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMatrix {
    journal_names: Vec<String>,
    feature_names: Vec<String>,
    data: DenseMatrix,
}

impl FeatureMatrix {
    pub fn new(
        journal_names: Vec<String>,
        feature_names: Vec<String>,
        data: DenseMatrix,
    ) -> Result<Self, ModelError> {
        if journal_names.is_empty() {
            return Err(ModelError::NoJournals);
        }
        if feature_names.len() < 2 {
            return Err(ModelError::TooFewFeatures(feature_names.len()));
        }
        if data.rows() != journal_names.len() || data.cols() != feature_names.len() {
            return Err(ModelError::ShapeMismatch {
                rows: data.rows(),
                cols: data.cols(),
                journals: journal_names.len(),
                features: feature_names.len(),
            });
        }
        let mut seen = HashSet::new();
        for name in &journal_names {
            if name.is_empty() {
                return Err(ModelError::EmptyName("journal"));
            }
            if !seen.insert(name.as_str()) {
                return Err(ModelError::DuplicateJournal(name.clone()));
            }
        }
        let mut seen = HashSet::new();
        for name in &feature_names {
            if name.is_empty() {
                return Err(ModelError::EmptyName("feature"));
            }
            if !seen.insert(name.as_str()) {
                return Err(ModelError::DuplicateFeature(name.clone()));
            }
        }
        for row in 0..data.rows() {
            for col in 0..data.cols() {
                if !data.get(row, col).is_finite() {
                    return Err(ModelError::NonFiniteEntry { row, col });
                }
            }
        }
        Ok(Self {
            journal_names,
            feature_names,
            data,
        })
    }

    pub fn journal_names(&self) -> &[String] {
        &self.journal_names
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn data(&self) -> &DenseMatrix {
        &self.data
    }

    pub fn n_journals(&self) -> usize {
        self.journal_names.len()
    }

    pub fn n_features(&self) -> usize {
        self.feature_names.len()
    }

    pub fn feature_index(&self, name: &str) -> Option<usize> {
        self.feature_names.iter().position(|f| f == name)
    }

    /// Keeps only the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> FeatureMatrix {
        let data = self.data.select_rows(rows);
        FeatureMatrix {
            journal_names: rows.iter().map(|&r| self.journal_names[r].clone()).collect(),
            feature_names: self.feature_names.clone(),
            data,
        }
    }

    /// Same names, replaced data. The caller keeps the shape.
    pub(crate) fn with_data(&self, data: DenseMatrix) -> FeatureMatrix {
        debug_assert_eq!(data.rows(), self.data.rows());
        debug_assert_eq!(data.cols(), self.data.cols());
        FeatureMatrix {
            journal_names: self.journal_names.clone(),
            feature_names: self.feature_names.clone(),
            data,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankingEntry {
    pub journal: String,
    pub elimination_step: usize,
    pub singval: f64,
    pub rank: usize,
}

/// Final ranking, ordered by rank (best first).
#[derive(Debug, Clone, PartialEq)]
pub struct RankingResult {
    entries: Vec<RankingEntry>,
}

impl RankingResult {
    /// Ranks `(journal, elimination_step, singval)` triples: ascending
    /// singval, ties to the earlier elimination step.
    pub fn from_scores(scores: Vec<(String, usize, f64)>) -> Result<Self, ModelError> {
        let m = scores.len();
        let mut steps: Vec<usize> = scores.iter().map(|s| s.1).collect();
        steps.sort_unstable();
        if steps.iter().enumerate().any(|(i, &s)| s != i + 1) {
            return Err(ModelError::InvalidRanking(
                "elimination steps are not a permutation of 1..m".into(),
            ));
        }
        if let Some(bad) = scores.iter().find(|s| !(s.2.is_finite() && s.2 >= 0.0)) {
            return Err(ModelError::InvalidRanking(format!(
                "singval for `{}` is {}",
                bad.0, bad.2
            )));
        }
        let mut ordered = scores;
        ordered.sort_by(|x, y| x.2.total_cmp(&y.2).then(x.1.cmp(&y.1)));
        let entries = ordered
            .into_iter()
            .enumerate()
            .map(|(i, (journal, elimination_step, singval))| RankingEntry {
                journal,
                elimination_step,
                singval,
                rank: i + 1,
            })
            .collect::<Vec<_>>();
        debug_assert_eq!(entries.len(), m);
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[RankingEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rank_of(&self, journal: &str) -> Option<usize> {
        self.entries.iter().find(|e| e.journal == journal).map(|e| e.rank)
    }
}
