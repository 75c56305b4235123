//! Benchmarks

mod benchmarks;

use criterion::criterion_main;

criterion_main! {
    benchmarks::bases::benches,
    benchmarks::graphs::benches,
    benchmarks::groups::benches,
}
