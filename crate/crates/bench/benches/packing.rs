use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rectlevel_bench::{sparse_random, SEED};
use rectlevel_core::generate::{gen_clustered, gen_tightness};
use rectlevel_core::packing_number_exact;

fn packing(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_packing");
    for n in [16, 32, 64] {
        let f = sparse_random(n);
        group.bench_with_input(BenchmarkId::new("random", n), &f, |b, f| {
            b.iter(|| packing_number_exact(f, 64))
        });
    }
    let f = gen_clustered(64, 8, SEED).unwrap();
    group.bench_function("clustered/64x8", |b| b.iter(|| packing_number_exact(&f, 64)));
    let f = gen_tightness(64, 6).unwrap();
    group.bench_function("tightness/64,6", |b| b.iter(|| packing_number_exact(&f, 64)));
    group.finish();
}

criterion_group!(benches, packing);
criterion_main!(benches);
