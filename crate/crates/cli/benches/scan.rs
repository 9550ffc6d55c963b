use criterion::{criterion_group, criterion_main, Criterion};
use cyclodet::scan::{run_verify, ScanConfig, Selector};

fn verify(c: &mut Criterion) {
    let workers = std::thread::available_parallelism().map_or(2, |n| n.get().max(2));
    let mut group = c.benchmark_group("verify_all_3_to_125");
    group.sample_size(10);
    for jobs in [1, workers] {
        group.bench_function(format!("jobs_{jobs}"), |b| {
            b.iter_batched(
                || tempfile::tempdir().unwrap(),
                |dir| {
                    let mut cfg = ScanConfig::new(Selector::All, 3, 125, dir.path().join("r.jsonl"));
                    cfg.jobs = jobs;
                    cfg.max_q = 4096;
                    run_verify(&cfg).unwrap()
                },
                criterion::BatchSize::PerIteration,
            )
        });
    }
    group.finish();
}

criterion_group!(benches, verify);
criterion_main!(benches);
