//! Permutations on `{0, .., n-1}` and the groups they generate.
//!
//! Composition is right-to-left: `a.compose(&b)` maps `x` to `a(b(x))`.
//! Every other module relies on this convention.

mod text;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

pub use text::{parse_generators, write_generators};

/// Default cap on the number of elements a closure may produce.
pub const DEFAULT_ELEMENT_BUDGET: usize = 1_000_000;

/// A bijection on `{0, .., degree-1}`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    /// Builds a permutation from an image table, rejecting anything that is
    /// not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::PointOutOfRange { point: x, degree: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::RepeatedPoint(x));
            }
        }
        Ok(Permutation { images: images.into_iter().map(|x| x as u32).collect() })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &x in cycle {
                if x >= n {
                    return Err(Error::PointOutOfRange { point: x, degree: n });
                }
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::RepeatedPoint(x));
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            k >>= 1;
        }
        acc
    }

    /// Least `m >= 1` with `self^m = id`, i.e. the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_decomposition().cycles.iter().fold(1, |acc, c| arith::lcm(acc, c.len() as u64))
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.apply(x) == x
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        let mut fixed_points = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() == 1 {
                fixed_points.push(start);
            } else {
                cycles.push(cycle);
            }
        }
        CycleDecomposition { degree: n, cycles, fixed_points }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in permutation product");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cd = self.cycle_decomposition();
        if cd.cycles.is_empty() {
            return f.write_str("()");
        }
        for c in &cd.cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Disjoint cycles (length >= 2, each starting at its minimum) plus fixed points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub degree: usize,
    pub cycles: Vec<Vec<usize>>,
    pub fixed_points: Vec<usize>,
}

impl CycleDecomposition {
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        l.sort_unstable();
        l
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.degree, &self.cycles).expect("canonical decomposition")
    }
}

/// A permutation group given by generators, with its full element set
/// computed on first use.
///
/// The element cache is filled at most once and readers on other threads
/// see either nothing or the complete sorted set.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    element_budget: usize,
    elements: OnceLock<Vec<Permutation>>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::InvalidArgument("generator list is empty".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        Ok(PermutationGroup { degree, generators, element_budget: DEFAULT_ELEMENT_BUDGET, elements: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, vec![Permutation::identity(degree)]).expect("degree checked by caller")
    }

    /// A group whose element set is already known. `elements` must be closed
    /// under composition; it becomes both the generator list and the cache.
    pub(crate) fn from_elements(degree: usize, mut elements: Vec<Permutation>, budget: usize) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let cache = OnceLock::new();
        let _ = cache.set(elements.clone());
        PermutationGroup { degree, generators: elements, element_budget: budget, elements: cache }
    }

    /// A group with generators plus the image of every abstract element
    /// under some homomorphism; duplicates collapse.
    pub(crate) fn with_known_elements(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
        budget: usize,
    ) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let cache = OnceLock::new();
        if elements.len() <= budget {
            let _ = cache.set(elements);
        }
        PermutationGroup { degree, generators, element_budget: budget, elements: cache }
    }

    pub fn with_element_budget(mut self, budget: usize) -> Self {
        self.element_budget = budget.max(1);
        if self.elements.get().is_some_and(|e| e.len() > self.element_budget) {
            self.elements = OnceLock::new();
        }
        self
    }

    pub fn element_budget(&self) -> usize {
        self.element_budget
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The full element set, sorted by image table. The identity is always first.
    pub fn closure(&self) -> Result<&[Permutation]> {
        self.closure_with_budget(self.element_budget)
    }

    pub fn closure_with_budget(&self, budget: usize) -> Result<&[Permutation]> {
        if let Some(e) = self.elements.get() {
            if e.len() > budget {
                return Err(Error::ElementBudget { budget });
            }
            return Ok(e);
        }
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for s in &self.generators {
                let y = s.compose_unchecked(&x);
                if !seen.contains(&y) {
                    if seen.len() >= budget {
                        return Err(Error::ElementBudget { budget });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        let _ = self.elements.set(elements);
        Ok(self.elements.get().expect("just set"))
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.closure()?.len())
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        Ok(self.closure()?.binary_search(p).is_ok())
    }

    fn check_point(&self, v: usize) -> Result<()> {
        if v >= self.degree {
            return Err(Error::PointOutOfRange { point: v, degree: self.degree });
        }
        Ok(())
    }

    /// The orbit of `v`, sorted.
    pub fn orbit(&self, v: usize) -> Result<Vec<usize>> {
        self.check_point(v)?;
        let mut seen = vec![false; self.degree];
        Ok(orbit_from(&self.generators, v, &mut seen))
    }

    /// All orbits, each sorted, ordered by their least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for v in 0..self.degree {
            if !seen[v] {
                out.push(orbit_from(&self.generators, v, &mut seen));
            }
        }
        out
    }

    /// The subgroup fixing every point in `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermutationGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let elements: Vec<Permutation> =
            self.closure()?.iter().filter(|g| points.iter().all(|&x| g.fixes(x))).cloned().collect();
        Ok(PermutationGroup::from_elements(self.degree, elements, self.element_budget))
    }

    /// True if both groups have the same degree and the same element set.
    pub fn same_elements(&self, other: &PermutationGroup) -> Result<bool> {
        Ok(self.degree == other.degree && self.closure()? == other.closure()?)
    }
}

fn orbit_from(generators: &[Permutation], v: usize, seen: &mut [bool]) -> Vec<usize> {
    let mut orbit = vec![v];
    seen[v] = true;
    let mut i = 0;
    while i < orbit.len() {
        let x = orbit[i];
        for g in generators {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
        i += 1;
    }
    orbit.sort_unstable();
    orbit
}

/// Orbits of an explicit element list (closed under the group operation).
pub(crate) fn orbits_of_elements(degree: usize, elements: &[&Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for v in 0..degree {
        if seen[v] {
            continue;
        }
        let mut orbit: Vec<usize> = elements.iter().map(|g| g.apply(v)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &x in &orbit {
            seen[x] = true;
        }
        out.push(orbit);
    }
    out
}
