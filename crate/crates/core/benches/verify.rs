use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use crkit_core::catalog::{self, verify_entry};
use crkit_core::kernel::{self, KernelConfig};
use crkit_core::parallel::{self, Execution};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn verify_names(names: &[String], exec: Execution) -> usize {
    parallel::map(exec, names, |n| {
        let e = catalog::by_name(n).expect("shipped entry");
        verify_entry(&e).expect("verifies").passed()
    })
    .into_iter()
    .filter(|&ok| ok)
    .count()
}

fn bench_catalog(c: &mut Criterion) {
    let names: Vec<String> = catalog::names().into_iter().filter(|n| n.starts_with("quadric(")).collect();
    let mut group = c.benchmark_group("catalog-verify-quadrics");
    group.sample_size(10);
    for (label, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(label), &exec, |b, &exec| {
            b.iter(|| black_box(verify_names(&names, exec)))
        });
    }
    group.finish();
}

fn bench_kernel(c: &mut Criterion) {
    let cfg = KernelConfig { seed: 7, algebras: 40, triples_per_algebra: 10 };
    let mut group = c.benchmark_group("kernel-suite");
    group.sample_size(10);
    for (label, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(label), &exec, |b, &exec| {
            b.iter(|| black_box(kernel::run(&cfg, exec).total()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_catalog, bench_kernel);
criterion_main!(benches);
