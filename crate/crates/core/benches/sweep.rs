//! Sweep workloads on a one-thread pool against the default rayon pool.
//!
//! `cargo bench -p mckay-core --bench sweep`

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mckay_core::algebra::{
    cartan_matrix, cartan_matrix_oracle, check_confluence, DEFAULT_PATH_CAP,
};
use mckay_core::mckay::verify_mckay_consistency;
use mckay_core::quiver::build_gamma;
use mckay_core::sweep::standard_sweep;
use mckay_core::{parallel, WeightVector};
use rayon::{ThreadPool, ThreadPoolBuilder};

fn pools() -> Vec<(&'static str, ThreadPool)> {
    let one = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let all = ThreadPoolBuilder::new().build().unwrap();
    vec![("sequential", one), ("parallel", all)]
}

fn cartan_sweep(c: &mut Criterion) {
    let sweep = standard_sweep();
    let mut group = c.benchmark_group("cartan_sweep");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::new(name, sweep.len()), |b| {
            b.iter(|| {
                pool.install(|| {
                    parallel::map(&sweep, |w| cartan_matrix(&build_gamma(w)).unwrap().size())
                })
            })
        });
    }
    group.finish();
}

fn mckay_sweep(c: &mut Criterion) {
    let sweep = standard_sweep();
    let mut group = c.benchmark_group("mckay_sweep");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::new(name, sweep.len()), |b| {
            b.iter(|| {
                pool.install(|| {
                    parallel::map(&sweep, |w| verify_mckay_consistency(w).is_consistent())
                })
            })
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let g = build_gamma(&WeightVector::new(&[1, 2, 3, 4]).unwrap());
    let mut group = c.benchmark_group("oracle_1234");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(name, |b| {
            b.iter(|| pool.install(|| cartan_matrix_oracle(&g, DEFAULT_PATH_CAP).unwrap()))
        });
    }
    group.finish();
}

fn confluence(c: &mut Criterion) {
    let g = build_gamma(&WeightVector::new(&[1, 1, 2, 3]).unwrap());
    let mut group = c.benchmark_group("confluence_1123");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(name, |b| {
            b.iter(|| pool.install(|| check_confluence(&g, 500, 7).is_confluent()))
        });
    }
    group.finish();
}

criterion_group!(benches, cartan_sweep, mckay_sweep, oracle, confluence);
criterion_main!(benches);
