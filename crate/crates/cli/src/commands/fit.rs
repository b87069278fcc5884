use std::io::Write;

use tdde_core::{base_solution, degenerate_solution, fit_pipeline, FitReport, RegimeKind};

use crate::error::CliError;
use crate::format::fmt_g;
use crate::io::{output, parse_series, read_input};
use crate::FitArgs;

fn number(v: Option<f64>) -> String {
    match v {
        Some(v) if v.is_finite() => fmt_g(v),
        _ => "null".into(),
    }
}

fn string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Fitted solution at `t`; `None` in the oscillatory regime.
fn predict(report: &FitReport, t: f64) -> Result<Option<f64>, CliError> {
    Ok(match report.regime.kind {
        RegimeKind::Exponential => Some(base_solution(&report.params, t)?),
        RegimeKind::Degenerate => Some(degenerate_solution(&report.params, t)?),
        RegimeKind::Oscillatory => None,
    })
}

/// The report as a JSON object with a fixed key order.
pub fn render(report: &FitReport, prediction: Option<Option<f64>>) -> String {
    let modes = report.modes;
    let mut fields = vec![
        ("a", number(Some(report.params.a()))),
        ("b", number(Some(report.params.b()))),
        ("p0", number(Some(report.params.p0()))),
        ("r", number(Some(report.regime.r))),
        ("regime", string(report.regime.kind.as_str())),
        ("A", number(modes.map(|m| m.mode_a))),
        ("B", number(modes.map(|m| m.mode_b))),
        ("w1", number(modes.map(|m| m.w1))),
        ("w2", number(modes.map(|m| m.w2))),
        ("rss_ab", number(Some(report.rss_ab))),
        ("rss_modes", number(report.rss_modes)),
        ("n_points", report.n_points.to_string()),
    ];
    if let Some(note) = &report.note {
        fields.push(("note", string(note)));
    }
    if let Some(p) = prediction {
        fields.push(("prediction", number(p)));
    }
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("  {}: {}", string(k), v)).collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

pub fn run(args: &FitArgs) -> Result<(), CliError> {
    let series = parse_series(&read_input(&args.input)?)?;
    let report = fit_pipeline(&series, args.fd)?;
    let prediction = args.predict.map(|t| predict(&report, t)).transpose()?;
    let mut out = output(args.out.as_deref())?;
    out.write_all(render(&report, prediction).as_bytes())?;
    out.flush()?;
    Ok(())
}
