//! Compares the rayon-backed and sequential execution paths of the bulk
//! enumerations. Build with `--no-default-features` to measure a binary
//! where the parallel path degrades to the sequential loop.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use incidence::latin::{
    enumerate_latin_squares, find_intercalates_with, latin_square_no_principal,
};
use incidence::outerplanar::reducibility_inspection_with;
use incidence::par::ExecMode;

fn modes() -> [(&'static str, ExecMode); 2] {
    [("seq", ExecMode::Sequential), ("par", ExecMode::Parallel)]
}

fn bench_inspection(c: &mut Criterion) {
    let mut group = c.benchmark_group("reducibility_inspection");
    group.sample_size(20);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                let report = reducibility_inspection_with(mode);
                assert!(report.residual.is_empty());
                report.non_extendable.len()
            })
        });
    }
    group.finish();
}

fn bench_intercalate_scan(c: &mut Criterion) {
    let square = latin_square_no_principal(96).unwrap();
    let mut group = c.benchmark_group("intercalate_scan_order96");
    group.sample_size(20);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| find_intercalates_with(&square, false, mode).len())
        });
    }
    group.finish();
}

fn bench_order4_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_latin_order4");
    group.sample_size(20);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| enumerate_latin_squares(4, false, mode).len())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_inspection,
    bench_intercalate_scan,
    bench_order4_enumeration
);
criterion_main!(benches);
