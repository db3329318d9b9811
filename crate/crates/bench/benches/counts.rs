//! Benchmarks for the truncated-series pipeline behind the n(g) table.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use deltamult::series::{euler_product_naive, euler_product_pentagonal, rational_curve_counts};

fn series_benches(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    group.bench_function("counts_g100", |b| {
        b.iter(|| black_box(rational_curve_counts(black_box(100))))
    });
    group.bench_function("euler_pentagonal_g500", |b| {
        b.iter(|| black_box(euler_product_pentagonal(black_box(500))))
    });
    group.bench_function("euler_naive_g200", |b| {
        b.iter(|| black_box(euler_product_naive(black_box(200))))
    });
    group.finish();
}

criterion_group!(benches, series_benches);
criterion_main!(benches);
