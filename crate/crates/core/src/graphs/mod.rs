//! Simple undirected graphs, their automorphism groups and determining numbers.

mod automorphism;
mod constructions;
mod corpus;
mod io;
mod recognize;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use automorphism::{
    automorphism_group, automorphism_group_with, determining_number, determining_number_with, determining_set,
    DEFAULT_VERTEX_BUDGET,
};
pub use constructions::{cyclic_gadget, frucht_graph, hub_decorated, pendant_cycle, rigid_tree, sun, HubBase};
pub use corpus::{standard_corpus, standard_corpus_with, CorpusEntry, GraphCorpus};
pub use io::{parse_graph, write_graph};
pub use recognize::is_isomorphic_to;

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); vertex_count];
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(Error::PointOutOfRange { point: x, degree: vertex_count });
                }
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidArgument(format!("repeated edge {u} {v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph { adj: vec![Vec::new(); vertex_count] }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// True if `p` maps edges onto edges. For a bijection this also maps
    /// non-edges onto non-edges.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.vertex_count()
            && self.adj.iter().enumerate().all(|(u, list)| list.iter().all(|&v| self.has_edge(p.apply(u), p.apply(v))))
    }

    /// The cycle `C_n`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid")
    }

    /// `a` followed by `b`, with `b`'s vertices shifted by `a.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + shift).collect()));
        Graph { adj }
    }
}

/// Incremental construction helper for the graph families.
#[derive(Default)]
pub(crate) struct GraphBuilder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn with_vertices(n: usize) -> Self {
        GraphBuilder { n, edges: Vec::new() }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Hangs a path of `len` new vertices off `at`.
    pub fn hang_path(&mut self, at: usize, len: usize) {
        let mut prev = at;
        for _ in 0..len {
            let v = self.add_vertex();
            self.add_edge(prev, v);
            prev = v;
        }
    }

    pub fn build(self) -> Result<Graph> {
        Graph::new(self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_families() {
        let c = Graph::cycle(5).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (5, 5));
        assert!((0..5).all(|v| c.degree(v) == 2));
        assert!(Graph::cycle(2).is_err());
        let p = Graph::path(2);
        assert_eq!(p.edges(), vec![(0, 1)]);
        assert_eq!(Graph::path(1).edge_count(), 0);
        assert_eq!(Graph::complete(4).edge_count(), 6);
    }

    #[test]
    fn disjoint_union_shifts() {
        let g = Graph::path(2).disjoint_union(&Graph::cycle(3).unwrap());
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges(), vec![(0, 1), (2, 3), (2, 4), (3, 4)]);
        let c = Graph::cycle(4).unwrap();
        assert_eq!(c.disjoint_union(&Graph::empty(0)), c);
    }

    #[test]
    fn invalid_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn automorphism_predicate() {
        let c = Graph::cycle(4).unwrap();
        let rot = Permutation::from_cycles(4, &[[0, 1, 2, 3]]).unwrap();
        let bad = Permutation::from_cycles(4, &[[0, 1]]).unwrap();
        assert!(c.is_automorphism(&rot));
        assert!(!c.is_automorphism(&bad));
    }
}
