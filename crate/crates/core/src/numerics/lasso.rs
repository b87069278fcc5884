//! L1-penalised least squares by cyclic coordinate descent.

use super::{DenseMatrix, NumericsError};

/// `sign(z)·max(|z| − gamma, 0)`
pub fn soft_threshold(z: f64, gamma: f64) -> f64 {
    if z > gamma {
        z - gamma
    } else if z < -gamma {
        z + gamma
    } else {
        0.0
    }
}

/// Solver settings for `min_w (1/2m)·‖y − Xw‖² + λ‖w‖₁`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lasso {
    pub lambda: f64,
    /// Stop once no coefficient moves more than this in a sweep.
    pub tol: f64,
    pub max_sweeps: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LassoSolution {
    pub coefficients: Vec<f64>,
    pub sweeps: usize,
    /// Objective before the first sweep, then after every sweep.
    pub objective_history: Vec<f64>,
}

impl Lasso {
    pub fn new(lambda: f64) -> Self {
        Self {
            lambda,
            tol: 1e-8,
            max_sweeps: 10_000,
        }
    }

    pub fn objective(&self, x: &DenseMatrix, y: &[f64], w: &[f64]) -> f64 {
        let m = x.rows() as f64;
        let rss: f64 = (0..x.rows())
            .map(|i| {
                let fit: f64 = x.row(i).iter().zip(w).map(|(a, b)| a * b).sum();
                (y[i] - fit).powi(2)
            })
            .sum();
        rss / (2.0 * m) + self.lambda * w.iter().map(|v| v.abs()).sum::<f64>()
    }

    /// Columns are visited in ascending order; zero columns keep a zero
    /// coefficient.
    pub fn fit(&self, x: &DenseMatrix, y: &[f64]) -> Result<LassoSolution, NumericsError> {
        let m = x.rows();
        let k = x.cols();
        if y.len() != m {
            return Err(NumericsError::DimensionMismatch(format!(
                "design has {m} rows but response has {} entries",
                y.len()
            )));
        }
        if m < 2 {
            return Err(NumericsError::InvalidArgument("lasso needs at least 2 observations".into()));
        }
        if !(self.lambda >= 0.0 && self.lambda.is_finite()) {
            return Err(NumericsError::InvalidArgument(format!(
                "lambda must be finite and non-negative, got {}",
                self.lambda
            )));
        }
        if y.iter().any(|v| !v.is_finite()) {
            return Err(NumericsError::InvalidArgument("response must be finite".into()));
        }

        let mf = m as f64;
        let columns: Vec<Vec<f64>> = (0..k).map(|j| x.column(j)).collect();
        let col_scale: Vec<f64> = columns
            .iter()
            .map(|c| c.iter().map(|v| v * v).sum::<f64>() / mf)
            .collect();

        let mut w = vec![0.0; k];
        let mut residual = y.to_vec();
        let mut history = vec![self.objective(x, y, &w)];

        for sweep in 1..=self.max_sweeps {
            let mut max_change = 0.0f64;
            for j in 0..k {
                if col_scale[j] == 0.0 {
                    continue;
                }
                let col = &columns[j];
                let old = w[j];
                // partial residual correlation: x_jᵀ(r + x_j·w_j)/m
                let rho = col.iter().zip(&residual).map(|(a, r)| a * r).sum::<f64>() / mf
                    + col_scale[j] * old;
                let new = soft_threshold(rho, self.lambda) / col_scale[j];
                let delta = new - old;
                if delta != 0.0 {
                    for (r, a) in residual.iter_mut().zip(col) {
                        *r -= a * delta;
                    }
                    w[j] = new;
                }
                max_change = max_change.max(delta.abs());
            }
            history.push(self.objective(x, y, &w));
            if max_change <= self.tol {
                return Ok(LassoSolution {
                    coefficients: w,
                    sweeps: sweep,
                    objective_history: history,
                });
            }
        }
        Err(NumericsError::ConvergenceFailure("lasso coordinate descent"))
    }
}

/// Lasso coefficients with the default tolerance (1e-8) and sweep cap (10 000).
///
/// Columns of `x` are expected to be standardised by the caller.
pub fn lasso_fit(x: &DenseMatrix, y: &[f64], lambda: f64) -> Result<Vec<f64>, NumericsError> {
    Lasso::new(lambda).fit(x, y).map(|s| s.coefficients)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Column-standardised design with a fixed, well-conditioned structure.
    fn design() -> (DenseMatrix, Vec<f64>) {
        let raw = [
            [1.0, 0.3, -2.0],
            [2.0, -1.1, 0.5],
            [0.5, 2.2, 1.0],
            [-1.5, 0.4, 0.2],
            [0.0, -0.8, -1.4],
            [3.0, 1.5, 0.9],
            [-2.0, -2.5, 0.3],
        ];
        let mut cols: Vec<Vec<f64>> = (0..3).map(|j| raw.iter().map(|r| r[j]).collect()).collect();
        for c in &mut cols {
            let n = c.len() as f64;
            let mean = c.iter().sum::<f64>() / n;
            let sd = (c.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n).sqrt();
            c.iter_mut().for_each(|v| *v = (*v - mean) / sd);
        }
        let y: Vec<f64> = (0..7)
            .map(|i| 0.7 * cols[0][i] - 0.4 * cols[1][i] + 0.1 * cols[2][i] + 0.05 * ((i as f64) - 3.0))
            .collect();
        (DenseMatrix::from_columns(&cols).unwrap(), y)
    }

    /// Gaussian elimination with partial pivoting on XᵀX w = Xᵀy.
    fn normal_equations(x: &DenseMatrix, y: &[f64]) -> Vec<f64> {
        let k = x.cols();
        let mut a = vec![vec![0.0; k + 1]; k];
        for i in 0..k {
            for j in 0..k {
                a[i][j] = (0..x.rows()).map(|r| x.get(r, i) * x.get(r, j)).sum();
            }
            a[i][k] = (0..x.rows()).map(|r| x.get(r, i) * y[r]).sum();
        }
        for col in 0..k {
            let piv = (col..k).max_by(|&p, &q| a[p][col].abs().total_cmp(&a[q][col].abs())).unwrap();
            a.swap(col, piv);
            for row in col + 1..k {
                let f = a[row][col] / a[col][col];
                for c in col..=k {
                    a[row][c] -= f * a[col][c];
                }
            }
        }
        let mut w = vec![0.0; k];
        for i in (0..k).rev() {
            let s: f64 = (i + 1..k).map(|j| a[i][j] * w[j]).sum();
            w[i] = (a[i][k] - s) / a[i][i];
        }
        w
    }

    #[test]
    fn soft_threshold_cases() {
        assert_eq!(soft_threshold(3.0, 1.0), 2.0);
        assert_eq!(soft_threshold(-3.0, 1.0), -2.0);
        assert_eq!(soft_threshold(0.5, 1.0), 0.0);
        assert_eq!(soft_threshold(-1.0, 1.0), 0.0);
    }

    #[test]
    fn zero_lambda_matches_least_squares() {
        let (x, y) = design();
        let w = lasso_fit(&x, &y, 0.0).unwrap();
        let ls = normal_equations(&x, &y);
        for (a, b) in w.iter().zip(&ls) {
            assert!((a - b).abs() < 1e-6, "{w:?} vs {ls:?}");
        }
        // residual orthogonal to the column space
        let r: Vec<f64> = (0..x.rows())
            .map(|i| y[i] - x.row(i).iter().zip(&w).map(|(a, b)| a * b).sum::<f64>())
            .collect();
        for j in 0..x.cols() {
            let dot: f64 = x.column(j).iter().zip(&r).map(|(a, b)| a * b).sum();
            assert!(dot.abs() < 1e-6);
        }
    }

    #[test]
    fn large_lambda_annihilates() {
        let (x, y) = design();
        let m = x.rows() as f64;
        let threshold = (0..x.cols())
            .map(|j| x.column(j).iter().zip(&y).map(|(a, b)| a * b).sum::<f64>().abs() / m)
            .fold(0.0, f64::max);
        let w = lasso_fit(&x, &y, threshold).unwrap();
        assert!(w.iter().all(|&v| v == 0.0));
        let w = lasso_fit(&x, &y, threshold * 0.99).unwrap();
        assert!(w.iter().any(|&v| v != 0.0));
    }

    #[test]
    fn orthonormal_design_is_soft_threshold() {
        // columns orthogonal with xᵀx = m, so the update decouples
        let cols = vec![
            vec![1.0, 1.0, -1.0, -1.0],
            vec![1.0, -1.0, 1.0, -1.0],
            vec![1.0, -1.0, -1.0, 1.0],
        ];
        let x = DenseMatrix::from_columns(&cols).unwrap();
        let y = [2.0, 0.5, -1.0, 0.25];
        let lambda = 0.3;
        let w = lasso_fit(&x, &y, lambda).unwrap();
        for j in 0..3 {
            let z = cols[j].iter().zip(&y).map(|(a, b)| a * b).sum::<f64>() / 4.0;
            assert!((w[j] - soft_threshold(z, lambda)).abs() < 1e-12);
        }
    }

    #[test]
    fn errors() {
        let (x, y) = design();
        assert!(matches!(
            lasso_fit(&x, &y[..3], 0.1),
            Err(NumericsError::DimensionMismatch(_))
        ));
        let tiny = Lasso { lambda: 0.0, tol: 0.0, max_sweeps: 3 };
        assert!(matches!(tiny.fit(&x, &y), Err(NumericsError::ConvergenceFailure(_))));
    }

    proptest! {
        #[test]
        fn objective_never_increases(lambda in 0.0f64..0.8, shift in -1.0f64..1.0) {
            let (x, mut y) = design();
            y.iter_mut().enumerate().for_each(|(i, v)| *v += shift * (i as f64 % 3.0 - 1.0));
            let sol = Lasso::new(lambda).fit(&x, &y).unwrap();
            for w in sol.objective_history.windows(2) {
                prop_assert!(w[1] <= w[0] + 1e-12 * w[0].abs().max(1.0));
            }
        }

        #[test]
        fn l1_norm_shrinks_with_lambda(l1 in 0.0f64..0.5, dl in 0.0f64..0.5) {
            let (x, y) = design();
            let n1: f64 = lasso_fit(&x, &y, l1).unwrap().iter().map(|v| v.abs()).sum();
            let n2: f64 = lasso_fit(&x, &y, l1 + dl).unwrap().iter().map(|v| v.abs()).sum();
            prop_assert!(n2 <= n1 + 1e-7);
        }
    }
}
