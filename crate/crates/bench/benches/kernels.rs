use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use tdde_bench::{exponential_series, feature_table};
use tdde_core::numerics::{lasso_fit, rk4_integrate, svd_values};
use tdde_core::{fit_pipeline, oracle_solution, rank_journals, DdeParams, FdMode};

fn solver(c: &mut Criterion) {
    let params = DdeParams::new(0.3, 0.5, 1.0, 5.0).unwrap();
    c.bench_function("oracle_solution t_max=5 step=1e-3", |b| {
        b.iter(|| oracle_solution(black_box(&params), 5.0, 1e-3).unwrap())
    });
    c.bench_function("rk4 scalar exp 1000 steps", |b| {
        b.iter(|| rk4_integrate(|_, y| [y[0], 0.0], black_box([1.0, 0.0]), 1.0, 1e-3).unwrap())
    });
}

fn fitting(c: &mut Criterion) {
    let series = exponential_series(0.2, 0.6, 1.0, 3.0, 60);
    c.bench_function("fit_pipeline 121 points", |b| {
        b.iter(|| fit_pipeline(black_box(&series), FdMode::Central).unwrap())
    });
}

fn ranking(c: &mut Criterion) {
    let table = feature_table(40, 7);
    let y = table.data().column(0);
    let x = table.data().without_column(0);
    c.bench_function("lasso 40x6", |b| b.iter(|| lasso_fit(black_box(&x), &y, 0.1).unwrap()));
    c.bench_function("svd 40x7", |b| b.iter(|| svd_values(black_box(table.data())).unwrap()));
    c.bench_function("rank_journals 40x7", |b| {
        b.iter(|| rank_journals(black_box(&table), "f0", 0.1).unwrap())
    });
}

criterion_group!(benches, solver, fitting, ranking);
criterion_main!(benches);
