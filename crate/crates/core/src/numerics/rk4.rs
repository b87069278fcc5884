use super::NumericsError;

pub type State2 = [f64; 2];

/// Classical fourth-order Runge–Kutta on `[0, t_end]`.
///
/// The interval is split into `ceil(t_end / step)` equal steps, so the last
/// sample lands exactly on `t_end` and the effective step never exceeds
/// `step`. Sample times are `i·h`, not accumulated sums.
pub fn rk4_integrate<F>(f: F, y0: State2, t_end: f64, step: f64) -> Result<Vec<(f64, State2)>, NumericsError>
where
    F: Fn(f64, State2) -> State2,
{
    if !(step > 0.0 && step.is_finite()) {
        return Err(NumericsError::InvalidArgument(format!("step must be positive, got {step}")));
    }
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(NumericsError::InvalidArgument(format!("t_end must be positive, got {t_end}")));
    }
    let n = ((t_end / step) - 1e-9).ceil().max(1.0) as usize;
    let h = t_end / n as f64;

    let add = |y: State2, k: State2, s: f64| [y[0] + s * k[0], y[1] + s * k[1]];
    let mut out = Vec::with_capacity(n + 1);
    let mut y = y0;
    out.push((0.0, y));
    for i in 0..n {
        let t = i as f64 * h;
        let k1 = f(t, y);
        let k2 = f(t + 0.5 * h, add(y, k1, 0.5 * h));
        let k3 = f(t + 0.5 * h, add(y, k2, 0.5 * h));
        let k4 = f(t + h, add(y, k3, h));
        for c in 0..2 {
            y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        }
        let t_next = if i + 1 == n { t_end } else { (i + 1) as f64 * h };
        if !(y[0].is_finite() && y[1].is_finite()) {
            return Err(NumericsError::NonFiniteState { t: t_next });
        }
        out.push((t_next, y));
    }
    Ok(out)
}
