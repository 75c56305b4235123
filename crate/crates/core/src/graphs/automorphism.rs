//! Automorphism groups by individualization and equitable refinement.
//!
//! Two ordered partitions are refined in lockstep, one for the source
//! vertices and one for their images. At each node the first vertex of the
//! first non-singleton source cell is individualized against every vertex of
//! the matching target cell. A branch survives only if both refinements leave
//! the same trace. A discrete pair of partitions gives a candidate map,
//! which is kept if it preserves edges. Every automorphism is reached exactly
//! once.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use super::Graph;
use crate::bases::{min_base, Base};
use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup, DEFAULT_ELEMENT_BUDGET};

pub const DEFAULT_VERTEX_BUDGET: usize = 64;

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    graph: &'a Graph,
    found: Vec<Permutation>,
    element_budget: usize,
}

impl Search<'_> {
    fn initial(&self) -> Cells {
        let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.graph.vertex_count() {
            by_degree.entry(self.graph.degree(v)).or_default().push(v);
        }
        by_degree.into_values().collect()
    }

    /// Splits cells by the multiset of neighbour cells until stable.
    fn refine(&self, mut cells: Cells) -> (Cells, u64) {
        let n = self.graph.vertex_count();
        let mut trace = DefaultHasher::new();
        let mut cell_of = vec![0u32; n];
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i as u32;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            let mut split = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let mut sig: Vec<u32> = self.graph.neighbors(v).iter().map(|&w| cell_of[w]).collect();
                    sig.sort_unstable();
                    groups.entry(sig).or_default().push(v);
                }
                split |= groups.len() > 1;
                for (sig, members) in groups {
                    sig.hash(&mut trace);
                    members.len().hash(&mut trace);
                    next.push(members);
                }
            }
            cells = next;
            if !split {
                break;
            }
        }
        (cells, trace.finish())
    }

    fn individualize(cells: &Cells, t: usize, v: usize) -> Cells {
        let mut out = Vec::with_capacity(cells.len() + 1);
        out.extend_from_slice(&cells[..t]);
        out.push(vec![v]);
        out.push(cells[t].iter().copied().filter(|&x| x != v).collect());
        out.extend_from_slice(&cells[t + 1..]);
        out
    }

    fn run(&mut self, src: &Cells, dst: &Cells) -> Result<()> {
        let n = self.graph.vertex_count();
        if src.len() == n {
            let mut images = vec![0; n];
            for (a, b) in src.iter().zip(dst) {
                images[a[0]] = b[0];
            }
            let p = Permutation::from_images(images).expect("cells pair up bijectively");
            if self.graph.is_automorphism(&p) {
                if self.found.len() >= self.element_budget {
                    return Err(Error::ElementBudget { budget: self.element_budget });
                }
                self.found.push(p);
            }
            return Ok(());
        }
        let t = src.iter().position(|c| c.len() > 1).expect("not discrete");
        let v = src[t][0];
        let (src_next, src_trace) = self.refine(Self::individualize(src, t, v));
        for &w in &dst[t] {
            let (dst_next, dst_trace) = self.refine(Self::individualize(dst, t, w));
            if src_trace == dst_trace
                && src_next.len() == dst_next.len()
                && src_next.iter().zip(&dst_next).all(|(a, b)| a.len() == b.len())
            {
                self.run(&src_next, &dst_next)?;
            }
        }
        Ok(())
    }
}

/// The full automorphism group, with default budgets.
pub fn automorphism_group(g: &Graph) -> Result<PermutationGroup> {
    automorphism_group_with(g, DEFAULT_VERTEX_BUDGET, DEFAULT_ELEMENT_BUDGET)
}

pub fn automorphism_group_with(g: &Graph, vertex_budget: usize, element_budget: usize) -> Result<PermutationGroup> {
    let n = g.vertex_count();
    if n > vertex_budget {
        return Err(Error::VertexBudget { vertices: n, budget: vertex_budget });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("graph has no vertices".into()));
    }
    let mut search = Search { graph: g, found: Vec::new(), element_budget };
    let (root, _) = search.refine(search.initial());
    search.run(&root, &root)?;
    Ok(PermutationGroup::from_elements(n, search.found, element_budget))
}

/// Base size of the automorphism group acting on the vertices.
pub fn determining_number(g: &Graph) -> Result<usize> {
    determining_number_with(g, DEFAULT_VERTEX_BUDGET, DEFAULT_ELEMENT_BUDGET)
}

pub fn determining_number_with(g: &Graph, vertex_budget: usize, element_budget: usize) -> Result<usize> {
    Ok(determining_set(g, vertex_budget, element_budget)?.len())
}

/// A minimum determining set, as a base of the automorphism group.
pub fn determining_set(g: &Graph, vertex_budget: usize, element_budget: usize) -> Result<Base> {
    min_base(&automorphism_group_with(g, vertex_budget, element_budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(g: &Graph) -> usize {
        automorphism_group(g).unwrap().order().unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order(&Graph::cycle(4).unwrap()), 8);
        assert_eq!(order(&Graph::cycle(6).unwrap()), 12);
        assert_eq!(order(&Graph::complete(3)), 6);
        assert_eq!(order(&Graph::complete(5)), 120);
        assert_eq!(order(&Graph::path(2)), 2);
        assert_eq!(order(&Graph::path(1)), 1);
        assert_eq!(order(&Graph::empty(4)), 24);
    }

    #[test]
    fn path_plus_triangle() {
        let g = Graph::path(2).disjoint_union(&Graph::cycle(3).unwrap());
        let aut = automorphism_group(&g).unwrap();
        assert_eq!(aut.order().unwrap(), 12);
        let mut sizes: Vec<usize> = aut.orbits().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3]);
        assert_eq!(determining_number(&g).unwrap(), 3);
    }

    #[test]
    fn determining_numbers() {
        for n in 3..=12 {
            assert_eq!(determining_number(&Graph::cycle(n).unwrap()).unwrap(), 2, "C_{n}");
        }
        assert_eq!(determining_number(&Graph::path(3)).unwrap(), 1);
        assert_eq!(determining_number(&Graph::path(1)).unwrap(), 0);
        let g = Graph::path(2).disjoint_union(&Graph::cycle(5).unwrap());
        assert_eq!(automorphism_group(&g).unwrap().order().unwrap(), 20);
        assert_eq!(determining_number(&g).unwrap(), 3);
    }

    #[test]
    fn budgets() {
        let big = Graph::cycle(70).unwrap();
        assert!(matches!(automorphism_group(&big), Err(Error::VertexBudget { .. })));
        assert_eq!(automorphism_group_with(&big, 70, 1000).unwrap().order().unwrap(), 140);
        let k6 = Graph::complete(6);
        assert!(matches!(automorphism_group_with(&k6, 64, 100), Err(Error::ElementBudget { .. })));
    }

    #[test]
    fn every_found_map_is_an_automorphism() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (3, 5)]).unwrap();
        let aut = automorphism_group(&g).unwrap();
        for p in aut.closure().unwrap() {
            assert!(g.is_automorphism(p));
        }
        assert_eq!(aut.order().unwrap(), 4);
    }
}
