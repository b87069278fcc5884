use std::io::Write;

use tdde_core::{
    base_solution, degenerate_solution, oscillatory_solution, ControlConfig, ControlledModel, DdeParams, EtaTerm,
    RegimeKind, SolverError, ThetaTerm,
};

use crate::error::CliError;
use crate::format::fmt_g;
use crate::io::output;
use crate::SimulateArgs;

/// `t_i = (t_min·(steps − i) + t_max·i) / steps`, endpoints exact.
pub fn grid(t_min: f64, t_max: f64, steps: usize) -> Vec<f64> {
    let n = steps as f64;
    (0..=steps)
        .map(|i| {
            let i = i as f64;
            (t_min * (n - i) + t_max * i) / n
        })
        .collect()
}

fn controls(args: &SimulateArgs) -> Option<(ThetaTerm, EtaTerm)> {
    let theta = if let Some(c) = args.theta_const {
        Some(ThetaTerm::Constant(c))
    } else if let Some((slope, intercept)) = args.theta_lin {
        Some(ThetaTerm::Linear { slope, intercept })
    } else {
        args.theta_exp.map(|rate| ThetaTerm::Exponential { rate })
    };
    let eta = if let Some((k, k1)) = args.eta_exp {
        Some(EtaTerm::TimeExponential { k, k1 })
    } else {
        args.eta_article.map(|(art, alpha)| EtaTerm::ArticleBased { alpha, art })
    };
    let explicit_modes = args.c1.is_some() || args.c2.is_some();
    if theta.is_none() && eta.is_none() && !explicit_modes {
        return None;
    }
    Some((theta.unwrap_or(ThetaTerm::Constant(0.0)), eta.unwrap_or(EtaTerm::None)))
}

/// `(t, p, warning)`.
type Row = (f64, f64, Option<&'static str>);

fn evaluate(args: &SimulateArgs, times: &[f64]) -> Result<Vec<Row>, CliError> {
    let half_width = args.t_min.abs().max(args.t_max.abs());
    let params = DdeParams::new(args.a, args.b, args.p0, half_width)?;
    let regime = params.regime();

    if let Some((theta, eta)) = controls(args) {
        let cfg = ControlConfig::new(theta, eta, &params)?;
        let model = match (args.c1, args.c2) {
            (Some(c1), Some(c2)) => ControlledModel::new(params, cfg, c1, c2)?,
            (None, None) => ControlledModel::from_initial_conditions(params, cfg)?,
            _ => return Err(CliError::usage("--c1 and --c2 must be given together")),
        };
        let warning = model.warning();
        if let Some(w) = warning {
            eprintln!("WARNING: NegativeInfluence: {w}");
        }
        return Ok(times
            .iter()
            .map(|&t| {
                let p = model.eval(t);
                let flag = (warning.is_some() && p < 0.0).then_some("negative_influence");
                (t, p, flag)
            })
            .collect());
    }

    match regime.kind {
        RegimeKind::Exponential => times
            .iter()
            .map(|&t| Ok((t, base_solution(&params, t)?, None)))
            .collect(),
        RegimeKind::Degenerate => times
            .iter()
            .map(|&t| Ok((t, degenerate_solution(&params, t)?, None)))
            .collect(),
        RegimeKind::Oscillatory if args.allow_oscillatory => {
            eprintln!("WARNING: Infeasible: b^2 < a^2 gives an oscillatory solution with no fixed period");
            times
                .iter()
                .map(|&t| {
                    let v = oscillatory_solution(&params, t)?;
                    Ok((t, v.value, Some("infeasible_oscillatory")))
                })
                .collect()
        }
        RegimeKind::Oscillatory => Err(CliError::new(
            3,
            "WrongRegime",
            format!(
                "{}; the oscillatory solution is infeasible (pass --allow-oscillatory to emit it flagged)",
                SolverError::WrongRegime {
                    operation: "simulate",
                    expected: RegimeKind::Exponential,
                    actual: RegimeKind::Oscillatory,
                }
            ),
        )),
    }
}

pub fn run(args: &SimulateArgs) -> Result<(), CliError> {
    if args.steps == 0 {
        return Err(CliError::usage("--steps must be at least 1"));
    }
    if args.t_min >= args.t_max {
        return Err(CliError::usage("--t-min must be less than --t-max"));
    }
    let rows = evaluate(args, &grid(args.t_min, args.t_max, args.steps))?;
    let flagged = rows.iter().any(|r| r.2.is_some());

    let mut out = output(args.out.as_deref())?;
    if flagged {
        writeln!(out, "t,p,warning")?;
        for (t, p, w) in &rows {
            writeln!(out, "{},{},{}", fmt_g(*t), fmt_g(*p), w.unwrap_or(""))?;
        }
    } else {
        writeln!(out, "t,p")?;
        for (t, p, _) in &rows {
            writeln!(out, "{},{}", fmt_g(*t), fmt_g(*p))?;
        }
    }
    out.flush()?;
    Ok(())
}
