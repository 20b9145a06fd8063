//! Theorem residual sweep over the catalog grid, sequential vs rayon.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sheffer_core::catalog::grid_instances;
use sheffer_core::verify::{self, Check};

fn theorem_grid(max_n: usize) -> Vec<Check> {
    grid_instances()
        .into_iter()
        .flat_map(|(name, params)| verify::grid(name, &params, &verify::theorem_kinds(), max_n))
        .collect()
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem-sweep");
    group.sample_size(10);
    for max_n in [6, 10] {
        let checks = theorem_grid(max_n);
        group.bench_with_input(BenchmarkId::new("sequential", max_n), &checks, |b, checks| {
            b.iter(|| verify::run_sequential(checks))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", max_n), &checks, |b, checks| {
            b.iter(|| verify::run_parallel(checks))
        });
    }
    group.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);
