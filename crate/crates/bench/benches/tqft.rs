use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wormhole_core::fixtures;
use wormhole_core::tqft;
use wormhole_core::wrt::{self, RootSpec};

fn gram(c: &mut Criterion) {
    let mut g = c.benchmark_group("catalan_gram");
    g.sample_size(10);
    for n in [2, 3, 4] {
        g.bench_with_input(BenchmarkId::new("matrix", n), &n, |b, &n| b.iter(|| tqft::catalan_gram(n).unwrap()));
    }
    let g3 = tqft::catalan_gram(3).unwrap();
    g.bench_function("determinant_3", |b| b.iter(|| g3.determinant()));
    g.finish();
}

fn wrt_ratio(c: &mut Criterion) {
    let mut g = c.benchmark_group("wrt_ratio");
    g.sample_size(10);
    let k = fixtures::two_gate_knot();
    for r in [5, 8] {
        let spec = RootSpec::new(r).unwrap();
        g.bench_with_input(BenchmarkId::new("two_gate_knot", r), &spec, |b, s| b.iter(|| wrt::wrt_ratio(&k, s).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, gram, wrt_ratio);
criterion_main!(benches);
