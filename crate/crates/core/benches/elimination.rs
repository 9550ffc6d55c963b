use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cyclodet_core::matrix::determinant_with;
use cyclodet_core::theorems::{build_s, singular_scan_with};
use cyclodet_core::{Exec, Field};

fn elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("det_s");
    group.sample_size(10);
    for q in [125u64, 243, 343] {
        let field = Field::of_order(q, 4096).unwrap();
        let s = build_s(&field);
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), q), &s, |b, s| {
                b.iter(|| determinant_with(&field, s, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("singular_scan_confirmed");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| {
            b.iter(|| singular_scan_with(7, 200, true, 4096, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, elimination, scan);
criterion_main!(benches);
