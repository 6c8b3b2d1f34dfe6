use criterion::{criterion_group, criterion_main, Criterion};
use hitchin_bench::{medium_context, mixed_section};
use hitchin_core::parmod::verify_nonfibration;
use hitchin_core::spectral::fibre_report;
use hitchin_core::sweep::chart_fuzz;
use std::hint::black_box;

fn bench_enumerate_strata(c: &mut Criterion) {
    let ctx = medium_context();
    c.bench_function("enumerate_strata deg-6 three points", |b| {
        b.iter(|| black_box(ctx.enumerate_strata()))
    });
}

fn bench_fibre_report(c: &mut Criterion) {
    let (base, sec) = mixed_section();
    c.bench_function("fibre_report mixed singularities", |b| {
        b.iter(|| black_box(fibre_report(&base, &sec).expect("report")))
    });
}

fn bench_nonfibration(c: &mut Criterion) {
    c.bench_function("nonfibration overlap m=6", |b| {
        b.iter(|| assert!(verify_nonfibration(black_box(6))))
    });
}

fn bench_chart_trials(c: &mut Criterion) {
    c.bench_function("chart fuzz 10 trials", |b| {
        b.iter(|| {
            let report = chart_fuzz(black_box(11), 10);
            assert!(report.failures.is_empty());
        })
    });
}

criterion_group!(
    benches,
    bench_enumerate_strata,
    bench_fibre_report,
    bench_nonfibration,
    bench_chart_trials
);
criterion_main!(benches);
