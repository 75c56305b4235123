//! Finite families of graphs whose automorphism group is a given group.
//!
//! A corpus stands in for "every graph with automorphism group G". Each
//! candidate is kept only after its automorphism group has been computed and
//! recognized as G; anything else is dropped with a reason.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::automorphism::automorphism_group_with;
use super::constructions::{build_frucht, cyclic_gadget, hub_decorated, pendant_cycle, rigid_tree, sun, HubBase};
use super::recognize::is_isomorphic_to;
use super::Graph;
use crate::arith;
use crate::bases::{min_base, Base};
use crate::error::{Error, Result};
use crate::groups::AbstractGroupSpec;
use crate::perm::{PermutationGroup, DEFAULT_ELEMENT_BUDGET};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub label: String,
    pub graph: Graph,
    pub automorphisms: PermutationGroup,
    pub determining_set: Base,
}

impl CorpusEntry {
    pub fn determining_number(&self) -> usize {
        self.determining_set.len()
    }
}

#[derive(Clone, Debug)]
pub struct GraphCorpus {
    pub target: AbstractGroupSpec,
    pub entries: Vec<CorpusEntry>,
    /// One line per rejected candidate: `label: reason`.
    pub dropped: Vec<String>,
}

impl GraphCorpus {
    /// Verifies each candidate against `target`, keeping input order.
    pub fn from_candidates(
        target: &AbstractGroupSpec,
        candidates: Vec<(String, Result<Graph>)>,
        size_budget: usize,
        element_budget: usize,
    ) -> Result<GraphCorpus> {
        let checked: Vec<std::result::Result<CorpusEntry, String>> = candidates
            .into_par_iter()
            .map(|(label, graph)| {
                let graph = graph.map_err(|e| format!("{label}: {e}"))?;
                check_candidate(target, label, graph, size_budget, element_budget)
            })
            .collect();
        let mut entries = Vec::new();
        let mut dropped = Vec::new();
        for c in checked {
            match c {
                Ok(e) => entries.push(e),
                Err(reason) => dropped.push(reason),
            }
        }
        if entries.is_empty() {
            return Err(Error::EmptyCorpus(format!("no verified graph for {target}")));
        }
        Ok(GraphCorpus { target: target.clone(), entries, dropped })
    }

    pub fn determining_numbers(&self) -> BTreeSet<usize> {
        self.entries.iter().map(CorpusEntry::determining_number).collect()
    }
}

fn check_candidate(
    target: &AbstractGroupSpec,
    label: String,
    graph: Graph,
    size_budget: usize,
    element_budget: usize,
) -> std::result::Result<CorpusEntry, String> {
    let n = graph.vertex_count();
    if n > size_budget {
        return Err(format!("{label}: {n} vertices exceeds size budget {size_budget}"));
    }
    let verify = || -> Result<std::result::Result<CorpusEntry, String>> {
        let aut = automorphism_group_with(&graph, size_budget, element_budget)?;
        if !is_isomorphic_to(&aut, target)? {
            return Ok(Err(format!("{label}: automorphism group of order {} is not {target}", aut.order()?)));
        }
        let determining_set = min_base(&aut)?;
        Ok(Ok(CorpusEntry { label: label.clone(), graph: graph.clone(), automorphisms: aut, determining_set }))
    };
    verify().unwrap_or_else(|e| Err(format!("{label}: {e}")))
}

/// The built-in corpus for a dihedral or abelian group, limited to graphs
/// with at most `size_budget` vertices.
pub fn standard_corpus(spec: &AbstractGroupSpec, size_budget: usize) -> Result<GraphCorpus> {
    standard_corpus_with(spec, size_budget, DEFAULT_ELEMENT_BUDGET)
}

pub fn standard_corpus_with(
    spec: &AbstractGroupSpec,
    size_budget: usize,
    element_budget: usize,
) -> Result<GraphCorpus> {
    let candidates = match spec {
        AbstractGroupSpec::Dihedral { n } => dihedral_candidates(spec, *n as usize),
        AbstractGroupSpec::Abelian { divisors } => abelian_candidates(spec, divisors),
    };
    GraphCorpus::from_candidates(spec, candidates, size_budget, element_budget)
}

fn dihedral_candidates(spec: &AbstractGroupSpec, n: usize) -> Vec<(String, Result<Graph>)> {
    let tree = rigid_tree();
    let mut out: Vec<(String, Result<Graph>)> = vec![
        ("frucht".into(), build_frucht(spec, &spec.standard_generators())),
        (format!("pendant-cycle({n})"), pendant_cycle(n)),
        (format!("pendant-cycle({n}) + rigid-tree"), pendant_cycle(n).map(|g| g.disjoint_union(&tree))),
    ];
    if n == 2 {
        out.push(("path(2) + path(3)".into(), Ok(Graph::path(2).disjoint_union(&Graph::path(3)))));
    }
    if n >= 3 {
        out.push((format!("cycle({n})"), Graph::cycle(n)));
        out.push((format!("sun({n})"), sun(n)));
        out.push((format!("cycle({n}) + rigid-tree"), Graph::cycle(n).map(|g| g.disjoint_union(&tree))));
    }
    let proper: Vec<usize> =
        arith::divisors(n as u64).into_iter().map(|d| d as usize).filter(|&d| d > 1 && d < n).collect();
    for &d in &proper {
        out.push((format!("pendant-cycle({n}) + hubs[{d}]"), hub_decorated(HubBase::PendantCycle, n, &[d])));
        out.push((format!("cycle({n}) + hubs[{d}]"), hub_decorated(HubBase::Cycle, n, &[d])));
    }
    if proper.len() > 1 {
        let all = join(&proper);
        out.push((format!("pendant-cycle({n}) + hubs[{all}]"), hub_decorated(HubBase::PendantCycle, n, &proper)));
        out.push((format!("cycle({n}) + hubs[{all}]"), hub_decorated(HubBase::Cycle, n, &proper)));
    }
    // D_{2m} = Z_2 x D_m for odd m
    if n.is_multiple_of(2) && (n / 2) % 2 == 1 && n / 2 >= 3 {
        let m = n / 2;
        let p2 = Graph::path(2);
        out.push((format!("path(2) + cycle({m})"), Graph::cycle(m).map(|g| p2.disjoint_union(&g))));
        out.push((format!("path(2) + sun({m})"), sun(m).map(|g| p2.disjoint_union(&g))));
        out.push((format!("path(2) + pendant-cycle({m})"), pendant_cycle(m).map(|g| p2.disjoint_union(&g))));
        out.push((
            format!("path(2) + cycle({m}) + rigid-tree"),
            Graph::cycle(m).map(|g| p2.disjoint_union(&g).disjoint_union(&tree)),
        ));
    }
    out
}

fn abelian_candidates(spec: &AbstractGroupSpec, divisors: &[u64]) -> Vec<(String, Result<Graph>)> {
    let cyclic_parts = |from: usize| -> Result<Graph> {
        let mut g = Graph::empty(0);
        for (i, &d) in divisors.iter().enumerate().skip(from) {
            g = g.disjoint_union(&cyclic_gadget(d as usize, i + 1)?);
        }
        Ok(g)
    };
    let mut out: Vec<(String, Result<Graph>)> = vec![
        ("frucht".into(), build_frucht(spec, &spec.standard_generators())),
        ("cyclic-gadgets".into(), cyclic_parts(0)),
        ("cyclic-gadgets + rigid-tree".into(), cyclic_parts(0).map(|g| g.disjoint_union(&rigid_tree()))),
    ];
    // a regular block for the first k factors, one cyclic gadget per remaining factor
    for k in 2..divisors.len() {
        let head = AbstractGroupSpec::Abelian { divisors: divisors[..k].to_vec() };
        let graph =
            build_frucht(&head, &head.standard_generators()).and_then(|f| Ok(f.disjoint_union(&cyclic_parts(k)?)));
        out.push((format!("frucht({head}) + cyclic-gadgets"), graph));
    }
    out
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}
