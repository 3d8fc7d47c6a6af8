use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hessdot::orientations::sink_ascent_table;
use hessdot::{build_graph, decompose, partitions_of, poincare, Composition, HessenbergFunction};

fn hf(v: &[usize]) -> HessenbergFunction {
    HessenbergFunction::new(v.to_vec()).unwrap()
}

fn bench_decompose(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    group.sample_size(10);
    for h in [hf(&[3, 4, 5, 6, 6, 6]), hf(&[3, 4, 5, 6, 7, 7, 7])] {
        group.bench_with_input(BenchmarkId::from_parameter(&h), &h, |b, h| {
            b.iter(|| decompose(black_box(h)).unwrap())
        });
    }
    group.finish();
}

fn bench_poincare(c: &mut Criterion) {
    let h = hf(&[3, 4, 5, 6, 7, 7, 7]);
    let mut group = c.benchmark_group("poincare");
    group.sample_size(10);
    for nu in [vec![7], vec![4, 3], vec![1; 7]] {
        let nu = Composition::new(nu);
        group.bench_with_input(BenchmarkId::from_parameter(&nu), &nu, |b, nu| {
            b.iter(|| poincare(black_box(nu), &h).unwrap())
        });
    }
    group.finish();
}

fn bench_orientations(c: &mut Criterion) {
    let mut group = c.benchmark_group("sink_ascent_table");
    for h in [
        hf(&[3, 4, 5, 6, 6, 6]),
        hf(&[3, 4, 5, 6, 7, 7, 7]),
        HessenbergFunction::full(7),
    ] {
        let graph = build_graph(&h);
        group.bench_with_input(BenchmarkId::from_parameter(&h), &graph, |b, g| {
            b.iter(|| sink_ascent_table(black_box(g)))
        });
    }
    group.finish();
}

fn bench_partitions(c: &mut Criterion) {
    c.bench_function("partitions_of(10)", |b| {
        b.iter(|| partitions_of(black_box(10)).len())
    });
}

criterion_group!(
    benches,
    bench_decompose,
    bench_poincare,
    bench_orientations,
    bench_partitions
);
criterion_main!(benches);
