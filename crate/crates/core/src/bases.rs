//! Bases of permutation groups.
//!
//! A base is a set of points whose pointwise stabilizer is trivial. The exact
//! search below runs iterative deepening over base size; at each node the next
//! point is drawn from one representative per nontrivial orbit of the current
//! partial stabilizer. Points fixed by the stabilizer cannot shrink it, and two
//! points in one orbit give conjugate stabilizers, so nothing is lost.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::{orbits_of_elements, Permutation, PermutationGroup};

/// An ordered base together with the orders of the successive pointwise
/// stabilizers: `|G| > |G_(b1)| > ... > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Base {
    pub points: Vec<usize>,
    pub witness_chain: Vec<usize>,
}

impl Base {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn is_base(g: &PermutationGroup, points: &[usize]) -> Result<bool> {
    for &p in points {
        if p >= g.degree() {
            return Err(Error::PointOutOfRange { point: p, degree: g.degree() });
        }
    }
    Ok(g.closure()?.iter().filter(|h| points.iter().all(|&x| h.fixes(x))).count() == 1)
}

/// Orders of `G, G_(p1), G_(p1,p2), ...` taken in the given point order.
pub fn stabilizer_chain(g: &PermutationGroup, points: &[usize]) -> Result<Vec<usize>> {
    let mut current: Vec<&Permutation> = g.closure()?.iter().collect();
    let mut chain = vec![current.len()];
    for &p in points {
        if p >= g.degree() {
            return Err(Error::PointOutOfRange { point: p, degree: g.degree() });
        }
        current.retain(|h| h.fixes(p));
        chain.push(current.len());
    }
    Ok(chain)
}

/// Greedy upper bound: repeatedly fix the lowest-numbered point of a largest
/// orbit of the current stabilizer.
pub fn greedy_base(g: &PermutationGroup) -> Result<Base> {
    let mut current: Vec<&Permutation> = g.closure()?.iter().collect();
    let mut points = Vec::new();
    let mut chain = vec![current.len()];
    while current.len() > 1 {
        let orbits = orbits_of_elements(g.degree(), &current);
        // orbits are ordered by least point, so max_by_key with a reversed
        // tie-break keeps the earliest largest orbit
        let best = orbits
            .iter()
            .enumerate()
            .max_by_key(|(i, o)| (o.len(), std::cmp::Reverse(*i)))
            .map(|(_, o)| o[0])
            .expect("a nontrivial group moves some point");
        points.push(best);
        current.retain(|h| h.fixes(best));
        chain.push(current.len());
    }
    Ok(Base { points, witness_chain: chain })
}

/// A base of minimum size.
pub fn min_base(g: &PermutationGroup) -> Result<Base> {
    let greedy = greedy_base(g)?;
    let elements: Vec<&Permutation> = g.closure()?.iter().collect();
    for depth in 0..greedy.len() {
        let mut chosen = Vec::with_capacity(depth);
        if search(g.degree(), &elements, depth, &mut chosen) {
            let witness_chain = stabilizer_chain(g, &chosen)?;
            return Ok(Base { points: chosen, witness_chain });
        }
    }
    Ok(greedy)
}

pub fn min_base_size(g: &PermutationGroup) -> Result<usize> {
    Ok(min_base(g)?.len())
}

fn search(degree: usize, stab: &[&Permutation], depth: usize, chosen: &mut Vec<usize>) -> bool {
    if stab.len() == 1 {
        return true;
    }
    if depth == 0 {
        return false;
    }
    let mut orbits: Vec<Vec<usize>> = orbits_of_elements(degree, stab).into_iter().filter(|o| o.len() > 1).collect();
    let widest = orbits.iter().map(Vec::len).max().unwrap_or(1);
    // each further point divides the stabilizer order by at most `widest`
    match widest.checked_pow(depth as u32) {
        Some(reach) if reach < stab.len() => return false,
        _ => {}
    }
    orbits.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    for orbit in &orbits {
        let v = orbit[0];
        let sub: Vec<&Permutation> = stab.iter().copied().filter(|h| h.fixes(v)).collect();
        chosen.push(v);
        if search(degree, &sub, depth - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Number of prime factors of the group order, with multiplicity. Bounds the
/// length of every stabilizer chain and hence every base size.
pub fn length_upper_bound(group_order: u64) -> Result<usize> {
    if group_order < 2 {
        return Err(Error::InvalidArgument(format!("group order {group_order} < 2")));
    }
    Ok(arith::omega(group_order))
}

/// `j + 1` with `j` the prime-factor count of `group_order / prime_power`.
///
/// If the group has an element of order `prime_power = p^k`, that element has
/// a `p^k`-cycle in every faithful action, so some point stabilizer has order
/// at most `|G| / p^k` and every base size is at most `j + 1`.
pub fn corollary_bound(group_order: u64, prime_power: u64) -> Result<usize> {
    if arith::prime_power(prime_power).is_none() {
        return Err(Error::InvalidArgument(format!("{prime_power} is not a prime power")));
    }
    if !group_order.is_multiple_of(prime_power) {
        return Err(Error::InvalidArgument(format!("{prime_power} does not divide {group_order}")));
    }
    Ok(arith::omega(group_order / prime_power) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, gens: &[&[&[usize]]]) -> PermutationGroup {
        let gens = gens.iter().map(|c| Permutation::from_cycles(n, c).unwrap()).collect();
        PermutationGroup::new(n, gens).unwrap()
    }

    fn natural_dihedral(n: usize) -> PermutationGroup {
        let rot: Vec<usize> = (0..n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        PermutationGroup::new(
            n,
            vec![Permutation::from_cycles(n, &[rot]).unwrap(), Permutation::from_images(refl).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn trivial_group_has_empty_base() {
        let g = PermutationGroup::trivial(4);
        assert!(is_base(&g, &[]).unwrap());
        assert_eq!(min_base_size(&g).unwrap(), 0);
        let b = greedy_base(&g).unwrap();
        assert!(b.is_empty());
        assert_eq!(b.witness_chain, vec![1]);
    }

    #[test]
    fn regular_cyclic_action() {
        let z6 = group(6, &[&[&[0, 1, 2, 3, 4, 5]]]);
        for v in 0..6 {
            assert!(is_base(&z6, &[v]).unwrap());
        }
        assert_eq!(greedy_base(&z6).unwrap().len(), 1);
        assert_eq!(min_base_size(&z6).unwrap(), 1);
    }

    #[test]
    fn cycle_graph_symmetry_needs_two_points() {
        let d6 = natural_dihedral(6);
        assert!(is_base(&d6, &[0, 1]).unwrap());
        assert!(!is_base(&d6, &[0, 3]).unwrap());
        for n in 3..=9 {
            assert_eq!(min_base_size(&natural_dihedral(n)).unwrap(), 2, "n = {n}");
        }
    }

    #[test]
    fn witness_chain_decreases_to_one() {
        let d6 = natural_dihedral(6);
        let b = min_base(&d6).unwrap();
        assert_eq!(b.witness_chain, vec![12, 2, 1]);
        assert_eq!(*b.witness_chain.last().unwrap(), 1);
    }

    #[test]
    fn direct_product_base_size() {
        // Z2 x D3 on 2 + 3 points
        let g = group(5, &[&[&[0, 1]], &[&[2, 3, 4]], &[&[3, 4]]]);
        assert_eq!(g.order().unwrap(), 12);
        assert_eq!(min_base_size(&g).unwrap(), 3);
    }

    #[test]
    fn bounds() {
        assert_eq!(length_upper_bound(30).unwrap(), 3);
        assert_eq!(length_upper_bound(8).unwrap(), 3);
        assert!(length_upper_bound(1).is_err());
        // dihedral of order 2p^k: bound 2; order 4p^k: bound 3; cyclic p^a: bound 1
        assert_eq!(corollary_bound(2 * 9, 9).unwrap(), 2);
        assert_eq!(corollary_bound(4 * 5, 5).unwrap(), 3);
        assert_eq!(corollary_bound(27, 27).unwrap(), 1);
        assert!(corollary_bound(20, 3).is_err());
        assert!(corollary_bound(12, 6).is_err());
    }

    #[test]
    fn out_of_range_point() {
        let g = PermutationGroup::trivial(2);
        assert!(is_base(&g, &[2]).is_err());
    }
}
