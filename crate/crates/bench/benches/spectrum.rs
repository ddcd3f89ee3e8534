use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use predual_core::exemplars::{gen_structure, search, SearchSpec};
use predual_core::{check_axioms, enumerate_spectrum, enumerate_spectrum_exhaustive};

fn spectrum(c: &mut Criterion) {
    let mut g = c.benchmark_group("spectrum");
    for n in [8, 12, 16] {
        let s = gen_structure(n, 7);
        g.bench_with_input(BenchmarkId::new("principal", n), &s, |b, s| b.iter(|| enumerate_spectrum(black_box(s))));
        g.bench_with_input(BenchmarkId::new("exhaustive", n), &s, |b, s| {
            b.iter(|| enumerate_spectrum_exhaustive(black_box(s)))
        });
    }
    g.finish();
}

fn axioms(c: &mut Criterion) {
    let mut g = c.benchmark_group("check_axioms");
    for n in [8, 16, 24] {
        let s = gen_structure(n, 7);
        g.bench_with_input(BenchmarkId::from_parameter(n), &s, |b, s| b.iter(|| check_axioms(black_box(s))));
    }
    g.finish();
}

fn searches(c: &mut Criterion) {
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    for (property, max_size) in [
        ("prime-extension-without-distributivity", 5),
        ("finite-predomain-with-strict-prec-above-bottom", 4),
    ] {
        let spec = SearchSpec { property: property.to_string(), max_size, seed: 0, budget: u64::MAX };
        g.bench_function(property, |b| b.iter(|| search(black_box(&spec)).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, spectrum, axioms, searches);
criterion_main!(benches);
