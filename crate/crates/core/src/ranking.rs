//! Recursive L1-norm SVD ranking of journals.
//!
//! Each round standardizes the surviving journals, Lasso-regresses a response
//! metric on the other metrics and records the singular value of the
//! coefficient row. The journal whose mean absolute standardized profile is
//! closest to the mean absolute coefficient is removed, and the loop repeats.
//! Journals are ranked by the singular value of the round that removed them,
//! lowest first.

use thiserror::Error;

use crate::model::{FeatureMatrix, ModelError, RankingResult};
use crate::numerics::{lasso_fit, svd_values, DenseMatrix, NumericsError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RankingError {
    #[error("response feature `{0}` is not a column of the matrix")]
    UnknownResponseFeature(String),
    #[error("column `{column}` has zero variance at elimination step {step}")]
    ZeroVarianceColumn { column: String, step: usize },
    #[error("lambda must be finite and non-negative, got {0}")]
    InvalidLambda(f64),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct EliminationStep {
    pub step_index: usize,
    pub journal: String,
    pub row_norm: f64,
    pub chosen_col_norm: f64,
    pub singval: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct EliminationTrace {
    pub steps: Vec<EliminationStep>,
}

/// Z-scores every column with the population standard deviation.
pub fn standardize(matrix: &FeatureMatrix) -> Result<FeatureMatrix, RankingError> {
    standardize_at(matrix, 0)
}

fn standardize_at(matrix: &FeatureMatrix, step: usize) -> Result<FeatureMatrix, RankingError> {
    let data = matrix.data();
    let m = data.rows() as f64;
    let mut columns = Vec::with_capacity(data.cols());
    for c in 0..data.cols() {
        let col = data.column(c);
        let mean = col.iter().sum::<f64>() / m;
        let var = col.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / m;
        let sd = var.sqrt();
        // relative guard so that constant columns with rounding noise still count
        if sd.is_nan() || sd <= 1e-12 * mean.abs().max(1.0) {
            return Err(RankingError::ZeroVarianceColumn {
                column: matrix.feature_names()[c].clone(),
                step,
            });
        }
        columns.push(col.iter().map(|v| (v - mean) / sd).collect::<Vec<_>>());
    }
    Ok(matrix.with_data(DenseMatrix::from_columns(&columns)?))
}

fn mean_abs(v: &[f64]) -> f64 {
    v.iter().map(|x| x.abs()).sum::<f64>() / v.len() as f64
}

/// Ranks the journals of `matrix`, regressing `response` on the other
/// features with Lasso penalty `lambda`.
pub fn rank_journals(
    matrix: &FeatureMatrix,
    response: &str,
    lambda: f64,
) -> Result<(RankingResult, EliminationTrace), RankingError> {
    let target = matrix
        .feature_index(response)
        .ok_or_else(|| RankingError::UnknownResponseFeature(response.to_string()))?;
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(RankingError::InvalidLambda(lambda));
    }

    let m = matrix.n_journals();
    let mut alive: Vec<usize> = (0..m).collect();
    let mut trace = EliminationTrace::default();
    let mut last_singval = 0.0;
    let mut last_row_norm = 0.0;
    let mut last_col_norms: Vec<f64> = vec![0.0];

    while alive.len() > 1 {
        let step = trace.steps.len() + 1;
        let current = standardize_at(&matrix.select_rows(&alive), step)?;
        let data = current.data();
        let y = data.column(target);
        let x = data.without_column(target);
        let w = lasso_fit(&x, &y, lambda)?;

        let singval = svd_values(&DenseMatrix::new(1, w.len(), w.clone())?)?[0];
        let row_norm = mean_abs(&w);
        let col_norms: Vec<f64> = (0..data.rows()).map(|j| mean_abs(data.row(j))).collect();

        // strict comparison keeps the lowest index on ties
        let mut pick = 0;
        for j in 1..col_norms.len() {
            if (col_norms[j] - row_norm).abs() < (col_norms[pick] - row_norm).abs() {
                pick = j;
            }
        }

        trace.steps.push(EliminationStep {
            step_index: step,
            journal: matrix.journal_names()[alive[pick]].clone(),
            row_norm,
            chosen_col_norm: col_norms[pick],
            singval,
        });
        alive.remove(pick);
        last_col_norms = col_norms;
        last_col_norms.remove(pick);
        last_singval = singval;
        last_row_norm = row_norm;
    }

    trace.steps.push(EliminationStep {
        step_index: m,
        journal: matrix.journal_names()[alive[0]].clone(),
        row_norm: last_row_norm,
        chosen_col_norm: last_col_norms[0],
        singval: last_singval,
    });

    let scores = trace
        .steps
        .iter()
        .map(|s| (s.journal.clone(), s.step_index, s.singval))
        .collect();
    Ok((RankingResult::from_scores(scores)?, trace))
}
