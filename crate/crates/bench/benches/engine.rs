use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use wormhole_bench::{random_closed, random_gated};
use wormhole_core::engine::{self, Evaluator, FusionShape};
use wormhole_core::fixtures;

fn z_powers(c: &mut Criterion) {
    let mut g = c.benchmark_group("bracket_z_power");
    for m in [4, 6, 8] {
        let z = fixtures::z_power(m);
        g.bench_with_input(BenchmarkId::from_parameter(m), &z, |b, z| b.iter(|| engine::bracket(black_box(z))));
    }
    g.finish();
}

fn evaluators(c: &mut Criterion) {
    let ds = random_closed(11, 20);
    let mut g = c.benchmark_group("closed_evaluators");
    g.bench_function("transfer", |b| {
        b.iter(|| ds.iter().map(|d| engine::eval_s3(d, Evaluator::Transfer).unwrap()).collect::<Vec<_>>())
    });
    g.sample_size(10);
    g.bench_function("brute_force", |b| {
        b.iter(|| ds.iter().filter_map(|d| engine::eval_s3(d, Evaluator::BruteForce).ok()).count())
    });
    g.finish();
}

fn gated(c: &mut Criterion) {
    let ds = random_gated(5, 10);
    let mut g = c.benchmark_group("gated");
    for shape in [FusionShape::LeftComb, FusionShape::Balanced] {
        g.bench_function(format!("{shape:?}"), |b| {
            b.iter(|| ds.iter().map(|d| engine::bracket_with(d, shape, Evaluator::Transfer).unwrap()).collect::<Vec<_>>())
        });
    }
    g.bench_function("two_gate_knot", |b| b.iter(|| engine::bracket(black_box(&fixtures::two_gate_knot()))));
    g.finish();
}

criterion_group!(benches, z_powers, evaluators, gated);
criterion_main!(benches);
