//! Graph families with prescribed automorphism groups.

use super::automorphism::automorphism_group_with;
use super::recognize::is_isomorphic_to;
use super::{Graph, GraphBuilder};
use crate::bases::min_base_size;
use crate::error::{Error, Result};
use crate::groups::AbstractGroupSpec;
use crate::perm::DEFAULT_ELEMENT_BUDGET;

/// A graph whose automorphism group is the given group acting regularly on
/// the element vertices, so its determining number is 1.
///
/// Vertices `0..|G|` are the group elements. For the `k`-th generator `s`
/// (counting from 0) each element `u` is joined to `u*s` through a gadget:
///
/// * `s` of order > 2: a path `u - x - y - u*s`, with a pendant path of
///   `2k + 1` vertices at `x` and one of `2k + 2` at `y`;
/// * `s` an involution: a path `u - m - u*s` with a pendant path of
///   `2k + 1` vertices at `m`.
///
/// Left multiplication preserves every gadget. The result is checked: the
/// computed automorphism group must be isomorphic to the group and have base
/// size 1, otherwise [`Error::Construction`] is returned.
pub fn frucht_graph(spec: &AbstractGroupSpec, generators: &[usize]) -> Result<Graph> {
    let g = build_frucht(spec, generators)?;
    let aut = automorphism_group_with(&g, g.vertex_count(), DEFAULT_ELEMENT_BUDGET)?;
    if !is_isomorphic_to(&aut, spec)? {
        return Err(Error::Construction(format!("automorphism group of order {} is not {spec}", aut.order()?)));
    }
    let b = min_base_size(&aut)?;
    if b != 1 {
        return Err(Error::Construction(format!("determining number {b}, expected 1")));
    }
    Ok(g)
}

pub(crate) fn build_frucht(spec: &AbstractGroupSpec, generators: &[usize]) -> Result<Graph> {
    let order = spec.order() as usize;
    if order < 2 {
        return Err(Error::InvalidArgument("group must be nontrivial".into()));
    }
    for (i, &s) in generators.iter().enumerate() {
        if s == 0 || s >= order {
            return Err(Error::InvalidArgument(format!("generator index {s} is not a non-identity element")));
        }
        if generators[..i].contains(&s) {
            return Err(Error::InvalidArgument(format!("generator {s} repeated")));
        }
    }
    let mut reached = vec![false; order];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(x) = stack.pop() {
        for &s in generators {
            let y = spec.multiply(x, s);
            if !reached[y] {
                reached[y] = true;
                stack.push(y);
            }
        }
    }
    if reached.iter().any(|r| !r) {
        return Err(Error::InvalidArgument(format!("generators do not generate {spec}")));
    }

    let mut b = GraphBuilder::with_vertices(order);
    for (k, &s) in generators.iter().enumerate() {
        let involution = spec.multiply(s, s) == 0;
        for u in 0..order {
            let v = spec.multiply(u, s);
            if involution {
                if u > v {
                    continue;
                }
                let m = b.add_vertex();
                b.add_edge(u, m);
                b.add_edge(m, v);
                b.hang_path(m, 2 * k + 1);
            } else {
                let x = b.add_vertex();
                let y = b.add_vertex();
                b.add_edge(u, x);
                b.add_edge(x, y);
                b.add_edge(y, v);
                b.hang_path(x, 2 * k + 1);
                b.hang_path(y, 2 * k + 2);
            }
        }
    }
    b.build()
}

/// `C_{3n}` with a pendant vertex on every third cycle vertex.
///
/// Its automorphism group is `D_n`. Cycle vertex `3i+1` carries the pendant;
/// the `2n` unmarked cycle vertices form a regular orbit, so the determining
/// number is 1.
pub fn pendant_cycle(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("pendant cycle needs n >= 2, got {n}")));
    }
    let len = 3 * n;
    let mut b = GraphBuilder::with_vertices(len);
    for i in 0..len {
        b.add_edge(i, (i + 1) % len);
    }
    for i in 0..n {
        b.hang_path(3 * i + 1, 1);
    }
    b.build()
}

/// `C_n` with one pendant vertex on every cycle vertex.
pub fn sun(n: usize) -> Result<Graph> {
    let mut b = GraphBuilder::with_vertices(n);
    if n < 3 {
        return Err(Error::InvalidArgument(format!("sun needs n >= 3, got {n}")));
    }
    for i in 0..n {
        b.add_edge(i, (i + 1) % n);
        b.hang_path(i, 1);
    }
    b.build()
}

/// `C_{3m}` with pendant paths of lengths `s` and `s + 1` on the second and
/// third vertex of every block of three; automorphism group `Z_m`.
///
/// Distinct `s` give non-isomorphic graphs for the same `m`.
pub fn cyclic_gadget(m: usize, s: usize) -> Result<Graph> {
    if m < 2 || s < 1 {
        return Err(Error::InvalidArgument(format!("cyclic gadget needs m >= 2, s >= 1 (got {m}, {s})")));
    }
    let len = 3 * m;
    let mut b = GraphBuilder::with_vertices(len);
    for i in 0..len {
        b.add_edge(i, (i + 1) % len);
    }
    for i in 0..m {
        b.hang_path(3 * i + 1, s);
        b.hang_path(3 * i + 2, s + 1);
    }
    b.build()
}

/// The 7-vertex tree with branches of lengths 1, 2 and 3 at one vertex.
/// It has no nontrivial automorphisms.
pub fn rigid_tree() -> Graph {
    Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).expect("valid tree")
}

/// Which `D_n` graph [`hub_decorated`] starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HubBase {
    /// `C_n`; hub `(d, c)` joins the cycle vertices `i` with `i = c (mod d)`.
    Cycle,
    /// [`pendant_cycle`]; hub `(d, c)` joins the marked vertices of the
    /// blocks `i` with `i = c (mod d)`.
    PendantCycle,
}

/// Adds, for each divisor `d` (with `1 < d < n`), an orbit of `d` hub
/// vertices on which `D_n` acts as on `Z_d`.
pub fn hub_decorated(base: HubBase, n: usize, divisors: &[usize]) -> Result<Graph> {
    for &d in divisors {
        if d <= 1 || d >= n || !n.is_multiple_of(d) {
            return Err(Error::InvalidArgument(format!("{d} is not a proper divisor of {n}")));
        }
    }
    let start = match base {
        HubBase::Cycle => Graph::cycle(n)?,
        HubBase::PendantCycle => pendant_cycle(n)?,
    };
    let mut b = GraphBuilder::with_vertices(start.vertex_count());
    for (u, v) in start.edges() {
        b.add_edge(u, v);
    }
    for &d in divisors {
        for c in 0..d {
            let hub = b.add_vertex();
            for i in (c..n).step_by(d) {
                let anchor = match base {
                    HubBase::Cycle => i,
                    HubBase::PendantCycle => 3 * i + 1,
                };
                b.add_edge(hub, anchor);
            }
        }
    }
    b.build()
}
