use std::hint::black_box;

use basesize::groups::natural_dihedral_action;
use basesize::{greedy_base, min_base_size};
use basesize_bench::{dpq_groups, spec};
use criterion::{criterion_group, BenchmarkId, Criterion};

fn bench_min_base(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_base_size");
    for (name, g) in dpq_groups() {
        g.closure().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| b.iter(|| min_base_size(black_box(g))));
    }
    let z = spec("Z:2,2,2,3").regular_representation().unwrap();
    z.closure().unwrap();
    group.bench_function("regular Z2^3+Z3", |b| b.iter(|| min_base_size(black_box(&z))));
    group.finish();
}

fn bench_greedy(c: &mut Criterion) {
    let g = natural_dihedral_action(60).unwrap();
    g.closure().unwrap();
    c.bench_function("greedy_base/natural D60", |b| b.iter(|| greedy_base(black_box(&g))));
}

criterion_group!(benches, bench_min_base, bench_greedy);
