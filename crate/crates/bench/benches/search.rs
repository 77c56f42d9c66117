use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cyclespan_bench::{path_inputs, spectrum_inputs};
use cyclespan_core::gadget::{exact_length_path_between, exact_length_path_oracle, ExactOptions, OracleConfig};
use cyclespan_core::generators;
use cyclespan_core::spectrum::{cycle_spectrum_exact, cycle_spectrum_lower};
use cyclespan_core::subdivision::find_balanced_subdivision;

fn spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum");
    for (name, g) in spectrum_inputs() {
        group.bench_with_input(BenchmarkId::new("exact", name), &g, |b, g| {
            b.iter(|| cycle_spectrum_exact(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("lower", name), &g, |b, g| {
            b.iter(|| cycle_spectrum_lower(black_box(g), 20_000, 7))
        });
    }
    group.finish();
}

fn exact_paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_path");
    for (name, g, x, y, len) in path_inputs() {
        group.bench_function(BenchmarkId::new("oracle", name), |b| {
            b.iter(|| exact_length_path_oracle(black_box(&g), x, y, len, &OracleConfig::default()).unwrap())
        });
        group.bench_function(BenchmarkId::new("constructive", name), |b| {
            b.iter(|| exact_length_path_between(black_box(&g), x, y, len, &[], &ExactOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn tk_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("tk_search");
    group.sample_size(20);
    let cases = [
        ("petersen_k4", generators::petersen(), 4, (1, 3)),
        ("k_4_4_k4", generators::complete_bipartite(4, 4), 4, (1, 4)),
        ("hypercube_3_k3", generators::hypercube(3), 3, (1, 3)),
    ];
    for (name, g, k, range) in cases {
        group.bench_function(name, |b| b.iter(|| find_balanced_subdivision(black_box(&g), k, range, 5_000_000).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, spectrum, exact_paths, tk_search);
criterion_main!(benches);
