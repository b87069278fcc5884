use super::NumericsError;

/// Solves `[[m11, m12], [m21, m22]] · (x, y) = (r1, r2)` by Cramer's rule.
///
/// Singular when `|det|` is at most `1e-12` times the product of the row norms.
pub fn solve_2x2(
    m11: f64,
    m12: f64,
    m21: f64,
    m22: f64,
    r1: f64,
    r2: f64,
) -> Result<(f64, f64), NumericsError> {
    let det = m11 * m22 - m12 * m21;
    let row1 = m11.hypot(m12);
    let row2 = m21.hypot(m22);
    if !det.is_finite() || det.abs() <= 1e-12 * row1 * row2 || det == 0.0 {
        return Err(NumericsError::SingularSystem { det });
    }
    let x = (r1 * m22 - m12 * r2) / det;
    let y = (m11 * r2 - r1 * m21) / det;
    Ok((x, y))
}
