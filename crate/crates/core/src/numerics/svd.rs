//! Singular values by one-sided (Hestenes) Jacobi rotations.

use super::{DenseMatrix, NumericsError};

/// Sweep cap for the Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Singular values of `m`, sorted descending, `min(rows, cols)` of them.
///
/// Columns of the (tall) working copy are rotated pairwise until every pair
/// is orthogonal to `1e-12` relative; the singular values are then the
/// column norms.
pub fn svd_values(m: &DenseMatrix) -> Result<Vec<f64>, NumericsError> {
    // Work on the orientation with at least as many rows as columns.
    let work = if m.rows() < m.cols() { m.transpose() } else { m.clone() };
    let rows = work.rows();
    let cols = work.cols();
    let mut columns: Vec<Vec<f64>> = (0..cols).map(|c| work.column(c)).collect();

    let mut converged = cols < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..cols - 1 {
            for q in p + 1..cols {
                let (alpha, beta, gamma) = gram(&columns[p], &columns[q]);
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                if gamma.abs() <= OFF_DIAGONAL_TOL * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = columns.split_at_mut(q);
                let col_p = &mut left[p];
                let col_q = &mut right[0];
                for i in 0..rows {
                    let xp = col_p[i];
                    let xq = col_q[i];
                    col_p[i] = c * xp - s * xq;
                    col_q[i] = s * xp + c * xq;
                }
            }
        }
        converged = !rotated;
    }
    if !converged {
        return Err(NumericsError::ConvergenceFailure("jacobi svd"));
    }

    let mut values: Vec<f64> = columns
        .iter()
        .map(|c| c.iter().map(|v| v * v).sum::<f64>().sqrt())
        .collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

fn gram(p: &[f64], q: &[f64]) -> (f64, f64, f64) {
    let mut alpha = 0.0;
    let mut beta = 0.0;
    let mut gamma = 0.0;
    for (x, y) in p.iter().zip(q) {
        alpha += x * x;
        beta += y * y;
        gamma += x * y;
    }
    (alpha, beta, gamma)
}
