use std::hint::black_box;

use basesize::graphs::automorphism_group_with;
use basesize::DEFAULT_ELEMENT_BUDGET;
use basesize_bench::{frucht, pendant};
use criterion::{criterion_group, BenchmarkId, Criterion};

fn bench_automorphisms(c: &mut Criterion) {
    let mut group = c.benchmark_group("automorphism_group");
    group.sample_size(20);
    let graphs =
        [("frucht D:15", frucht("D:15")), ("frucht Z:3,9", frucht("Z:3,9")), ("pendant-cycle 27", pendant(27))];
    for (name, g) in graphs {
        let n = g.vertex_count();
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| automorphism_group_with(black_box(g), n, DEFAULT_ELEMENT_BUDGET))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_automorphisms);
