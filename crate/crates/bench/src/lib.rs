//! Shared fixtures for the benchmarks.

use basesize::graphs::{frucht_graph, pendant_cycle};
use basesize::groups::dpq_representation;
use basesize::{AbstractGroupSpec, Graph, PermutationGroup};

pub fn spec(s: &str) -> AbstractGroupSpec {
    s.parse().expect("valid descriptor")
}

/// The two-orbit `D_pq` actions used throughout.
pub fn dpq_groups() -> Vec<(String, PermutationGroup)> {
    [(3, 5), (3, 7), (5, 7)]
        .into_iter()
        .map(|(p, q)| (format!("D{}", p * q), dpq_representation(p, q).unwrap()))
        .collect()
}

pub fn frucht(s: &str) -> Graph {
    let g = spec(s);
    frucht_graph(&g, &g.standard_generators()).unwrap()
}

pub fn pendant(n: usize) -> Graph {
    pendant_cycle(n).unwrap()
}
