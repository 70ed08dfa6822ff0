use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pogp::series::{exp_integral, k_sigma_k_counts};
use pogp::CountSeq;

fn recurrences(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    for len in [32, 128, 256] {
        let ones = CountSeq::constant(1, len);
        group.bench_with_input(BenchmarkId::new("exp_integral", len), &ones, |b, f| {
            b.iter(|| exp_integral(black_box(f)))
        });
        group.bench_with_input(BenchmarkId::new("k_sigma_k_counts", len), &ones, |b, f| {
            b.iter(|| k_sigma_k_counts(black_box(f)))
        });
    }
    group.finish();
}

criterion_group!(benches, recurrences);
criterion_main!(benches);
