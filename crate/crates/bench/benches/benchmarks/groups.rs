use std::hint::black_box;

use basesize::groups::ActionCatalog;
use basesize::DEFAULT_ELEMENT_BUDGET;
use basesize_bench::spec;
use criterion::{criterion_group, BenchmarkId, Criterion};

fn bench_base_size_set(c: &mut Criterion) {
    let mut group = c.benchmark_group("base_size_set");
    group.sample_size(10);
    for (name, points) in [("D:15", 40), ("D:18", 36), ("Z:3,9", 39)] {
        let catalog = ActionCatalog::for_spec(&spec(name), DEFAULT_ELEMENT_BUDGET).unwrap();
        group.bench_with_input(BenchmarkId::new(name, points), &points, |b, &n| {
            b.iter(|| catalog.base_size_set(black_box(n)))
        });
    }
    group.finish();
}

fn bench_subgroups(c: &mut Criterion) {
    let g = spec("D:30");
    c.bench_function("subgroup classes/D:30", |b| {
        b.iter(|| ActionCatalog::for_spec(black_box(&g), DEFAULT_ELEMENT_BUDGET))
    });
}

criterion_group!(benches, bench_base_size_set, bench_subgroups);
