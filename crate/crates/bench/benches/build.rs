use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use isaw_bench::random_text;
use isaw_core::{DenseIndex, LinearIndex, Text};

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    group.sample_size(10);
    for log_n in [12, 16] {
        let n = 1usize << log_n;
        let codes = random_text(n, 2, 7).codes().to_vec();
        group.throughput(Throughput::Elements(n as u64));
        // A fresh text each time so the cached suffix data is rebuilt too.
        group.bench_with_input(BenchmarkId::new("linear", n), &codes, |b, codes| {
            b.iter(|| LinearIndex::build(&Text::from_codes(codes.clone(), 2).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("dense", n), &codes, |b, codes| {
            b.iter(|| DenseIndex::build(&Text::from_codes(codes.clone(), 2).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, build);
criterion_main!(benches);
