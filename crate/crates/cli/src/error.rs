use std::fmt;

use tdde_core::{FitError, ModelError, NumericsError, RankingError, SolverError};

/// Failure of a subcommand: exit status, error kind and a one-line detail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub detail: String,
}

impl CliError {
    pub fn new(code: i32, kind: &'static str, detail: impl Into<String>) -> Self {
        Self {
            code,
            kind,
            detail: detail.into(),
        }
    }

    pub fn usage(detail: impl Into<String>) -> Self {
        Self::new(2, "Usage", detail)
    }

    pub fn input(detail: impl Into<String>) -> Self {
        Self::new(2, "MalformedInput", detail)
    }

    pub fn io(err: std::io::Error) -> Self {
        Self::new(1, "Io", err.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // the message must stay on one line
        let detail = self.detail.replace(['\n', '\r'], " ");
        write!(f, "ERROR {}: {}: {}", self.code, self.kind, detail)
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        let kind = match &e {
            ModelError::LengthMismatch { .. } => "LengthMismatch",
            ModelError::TooShort { .. } => "TooShort",
            ModelError::NonUniformGrid { .. } => "NonUniformGrid",
            ModelError::AsymmetricGrid { .. } => "AsymmetricGrid",
            ModelError::NonFiniteValue { .. } => "NonFiniteValue",
            ModelError::NonFiniteParameter { .. } => "NonFiniteParameter",
            ModelError::NonPositiveHalfWidth(_) => "NonPositiveHalfWidth",
            ModelError::ArticleFractionOutOfRange(_) => "OutOfRange",
            ModelError::ResonantForcing { .. } => return Self::new(3, "ResonantForcing", e.to_string()),
            ModelError::ModeInvariant => "ModeInvariant",
            ModelError::EmptyName(_) => "EmptyName",
            ModelError::DuplicateJournal(_) => "DuplicateJournal",
            ModelError::DuplicateFeature(_) => "DuplicateFeature",
            ModelError::NoJournals => "NoJournals",
            ModelError::TooFewFeatures(_) => "TooFewFeatures",
            ModelError::ShapeMismatch { .. } => "ShapeMismatch",
            ModelError::NonFiniteEntry { .. } => "NonFiniteEntry",
            ModelError::InvalidRanking(_) => return Self::new(1, "InvalidRanking", e.to_string()),
        };
        Self::new(2, kind, e.to_string())
    }
}

impl From<NumericsError> for CliError {
    fn from(e: NumericsError) -> Self {
        let kind = match &e {
            NumericsError::ConvergenceFailure(_) => "ConvergenceFailure",
            NumericsError::SingularSystem { .. } => "SingularSystem",
            NumericsError::DimensionMismatch(_) => "DimensionMismatch",
            NumericsError::NonFiniteState { .. } => "NonFiniteState",
            NumericsError::InvalidArgument(_) => "InvalidArgument",
        };
        Self::new(1, kind, e.to_string())
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::WrongRegime { .. } => Self::new(3, "WrongRegime", e.to_string()),
            SolverError::ZeroCoefficient(_) => Self::new(2, "ZeroCoefficient", e.to_string()),
            SolverError::OutOfRange(_) => Self::new(2, "OutOfRange", e.to_string()),
            SolverError::Model(inner) => inner.into(),
            SolverError::Numerics(inner) => inner.into(),
        }
    }
}

impl From<FitError> for CliError {
    fn from(e: FitError) -> Self {
        match e {
            FitError::DegenerateSystem { .. } => Self::new(4, "DegenerateSystem", e.to_string()),
            FitError::InsufficientPoints { .. } => Self::new(2, "TooShort", e.to_string()),
            FitError::NonPositiveR(_) => Self::new(4, "NonPositiveR", e.to_string()),
            FitError::Numerics { .. } => Self::new(1, "Numerics", e.to_string()),
            FitError::Model(inner) => inner.into(),
        }
    }
}

impl From<RankingError> for CliError {
    fn from(e: RankingError) -> Self {
        match e {
            RankingError::UnknownResponseFeature(_) => Self::new(2, "UnknownResponseFeature", e.to_string()),
            RankingError::ZeroVarianceColumn { .. } => Self::new(5, "ZeroVarianceColumn", e.to_string()),
            RankingError::InvalidLambda(_) => Self::new(2, "InvalidLambda", e.to_string()),
            RankingError::Numerics(inner) => inner.into(),
            RankingError::Model(inner) => inner.into(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::io(e)
    }
}
