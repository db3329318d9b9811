//! Benchmarks for the Groebner-driven length computations: torus-knot
//! quotient dimensions and stable-map local lengths.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use deltamult::groebner::{buchberger, quotient_dimension};
use deltamult::moduli::{
    multiplicity_via_groebner, stable_map_local_length, torus_knot_ideal, StableMapProblem,
    DEFAULT_MARKED_DATA_SEED,
};
use deltamult::poly::{parse_polynomial, QPoly, Ring};

fn torus_knot_multiplicities(c: &mut Criterion) {
    let mut group = c.benchmark_group("torus_knot");
    for (p, q) in [(2u64, 3u64), (3, 4), (4, 5)] {
        group.bench_function(format!("multiplicity_{p}_{q}"), |b| {
            b.iter(|| black_box(multiplicity_via_groebner(black_box(p), black_box(q)).unwrap()))
        });
    }
    group.bench_function("buchberger_4_5", |b| {
        let ideal = torus_knot_ideal(4, 5).unwrap();
        b.iter(|| {
            let basis = buchberger(black_box(&ideal)).unwrap();
            black_box(quotient_dimension(&basis))
        })
    });
    group.finish();
}

fn conic_curve() -> StableMapProblem {
    let st = Ring::of(&["s", "t"]);
    let xyz = Ring::of(&["x", "y", "z"]);
    let p = |ring: &std::sync::Arc<Ring>, s: &str| -> QPoly { parse_polynomial(ring, s).unwrap() };
    StableMapProblem::with_auto_marked_data(
        2,
        [p(&st, "t^2"), p(&st, "s*t"), p(&st, "s^2")],
        p(&xyz, "x*z - y^2"),
        DEFAULT_MARKED_DATA_SEED,
    )
    .unwrap()
}

fn cuspidal_curve() -> StableMapProblem {
    let st = Ring::of(&["s", "t"]);
    let xyz = Ring::of(&["x", "y", "z"]);
    let p = |ring: &std::sync::Arc<Ring>, s: &str| -> QPoly { parse_polynomial(ring, s).unwrap() };
    StableMapProblem::with_auto_marked_data(
        3,
        [p(&st, "t^2*s"), p(&st, "t^3"), p(&st, "s^3")],
        p(&xyz, "z*y^2 - x^3"),
        DEFAULT_MARKED_DATA_SEED,
    )
    .unwrap()
}

fn stable_map_lengths(c: &mut Criterion) {
    let mut group = c.benchmark_group("stable_map");
    group.sample_size(10);
    let conic = conic_curve();
    group.bench_function("conic_length", |b| {
        b.iter(|| black_box(stable_map_local_length(black_box(&conic)).unwrap()))
    });
    let cuspidal = cuspidal_curve();
    group.bench_function("cuspidal_cubic_length", |b| {
        b.iter(|| black_box(stable_map_local_length(black_box(&cuspidal)).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, torus_knot_multiplicities, stable_map_lengths);
criterion_main!(benches);
