use tdde_core::numerics::FdMode;
use tdde_core::*;

fn sampled(params: &DdeParams, k: i64, h: f64) -> InfluenceSeries {
    let t: Vec<f64> = (-k..=k).map(|i| i as f64 * h).collect();
    let p: Vec<f64> = t.iter().map(|&t| base_solution(params, t).unwrap()).collect();
    validate_series(&t, &p).unwrap()
}

#[test]
fn fit_then_predict() {
    let truth = DdeParams::new(-0.1, 0.7, 2.0, 4.0).unwrap();
    let report = fit_pipeline(&sampled(&truth, 80, 0.05), FdMode::Central).unwrap();
    assert_eq!(report.regime.kind, RegimeKind::Exponential);
    for t in [-4.0, 0.0, 2.5, 6.0] {
        let want = base_solution(&truth, t).unwrap();
        let got = base_solution(&report.params, t).unwrap();
        assert!((got - want).abs() <= 1e-3 * want.abs().max(1.0), "t = {t}");
    }
}

#[test]
fn oracle_agrees_with_every_closed_form() {
    for (a, b) in [(0.1, 0.9), (0.8, -0.3), (0.5, -0.5)] {
        let p = DdeParams::new(a, b, 1.0, 3.0).unwrap();
        let samples = oracle_solution(&p, 3.0, 1e-3).unwrap();
        for s in samples.iter().step_by(500) {
            let exact = match classify(&p).kind {
                RegimeKind::Exponential => base_solution(&p, s.t).unwrap(),
                RegimeKind::Degenerate => degenerate_solution(&p, s.t).unwrap(),
                RegimeKind::Oscillatory => oscillatory_solution(&p, s.t).unwrap().value,
            };
            assert!((exact - s.p).abs() < 1e-9, "({a}, {b}) t = {}", s.t);
        }
    }
}

#[test]
fn controlled_model_reduces_to_base_without_forcing() {
    let p = DdeParams::new(0.2, 0.6, 1.5, 3.0).unwrap();
    let (c1, c2) = initial_conditions_to_modes(&p, &ControlConfig::none()).unwrap();
    let v = control_solution(&p, &ControlConfig::none(), c1, c2, 1.7).unwrap();
    assert!((v.value - base_solution(&p, 1.7).unwrap()).abs() < 1e-12);
}

#[test]
fn ranking_end_to_end() {
    let data = DenseMatrix::from_rows(&[
        vec![1.2, 3.4, 0.5, 8.0],
        vec![2.2, 1.1, 0.9, 6.5],
        vec![0.4, 2.8, 1.7, 9.1],
        vec![3.3, 0.2, 1.1, 7.7],
    ])
    .unwrap();
    let names = |p: &str, n: usize| (0..n).map(|i| format!("{p}{i}")).collect::<Vec<_>>();
    let matrix = FeatureMatrix::new(names("J", 4), names("F", 4), data).unwrap();
    let (result, trace) = rank_journals(&matrix, "F3", 0.1).unwrap();
    assert_eq!(result.len(), 4);
    assert_eq!(trace.steps.len(), 4);
    let singvals: Vec<f64> = result.entries().iter().map(|e| e.singval).collect();
    assert!(singvals.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(rank_journals(&matrix, "F3", 0.1).unwrap(), (result, trace));
}
