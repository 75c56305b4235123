use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup};

/// Largest group order accepted by [`FiniteGroup::subgroups`].
pub const SUBGROUP_SEARCH_LIMIT: usize = 512;

/// A set of element indices of a [`FiniteGroup`], sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    elements: Vec<u32>,
}

impl Subgroup {
    pub fn from_indices(mut elements: Vec<u32>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subgroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup { elements: self.elements.iter().copied().filter(|&x| other.contains(x)).collect() }
    }

    fn sort_key(&self) -> (usize, &[u32]) {
        (self.elements.len(), &self.elements)
    }
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    /// The least conjugate in (order, elements) order.
    pub representative: Subgroup,
    pub class_size: usize,
}

/// A permutation group together with its multiplication table.
///
/// Element `i` is the `i`-th permutation of the sorted closure, so the
/// identity is element 0.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    group: PermutationGroup,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<u32>,
}

impl FiniteGroup {
    pub fn new(group: &PermutationGroup) -> Result<Self> {
        let elements = group.closure()?;
        let n = elements.len();
        let index = |p: &Permutation| elements.binary_search(p).expect("closure is closed") as u32;
        let mut mul = Vec::with_capacity(n * n);
        for a in elements {
            for b in elements {
                mul.push(index(&a.compose_unchecked(b)));
            }
        }
        let inv = elements.iter().map(|a| index(&a.inverse())).collect();
        let generators = group.generators().iter().map(index).collect();
        Ok(FiniteGroup { group: group.clone(), mul, inv, generators })
    }

    pub fn permutation_group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.inv.len()
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.group.closure().expect("closure cached at construction")[i as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        let elements = self.group.closure().ok()?;
        elements.binary_search(p).ok().map(|i| i as u32)
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order() + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.generators
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { elements: (0..self.order() as u32).collect() }
    }

    /// The subgroup generated by the given elements.
    pub fn generate(&self, gens: &[u32]) -> Subgroup {
        let mut seen = vec![false; self.order()];
        let mut out = vec![0u32];
        seen[0] = true;
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &s in gens {
                let y = self.mul(s, x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_indices(out)
    }

    pub fn check_subgroup(&self, h: &Subgroup) -> Result<()> {
        let n = self.order() as u32;
        if h.elements.is_empty() || h.elements[0] != 0 {
            return Err(Error::NotASubgroup("missing identity".into()));
        }
        if h.elements.iter().any(|&x| x >= n) {
            return Err(Error::NotASubgroup("element index out of range".into()));
        }
        for &a in &h.elements {
            for &b in &h.elements {
                if !h.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("not closed: {a} * {b}")));
                }
            }
        }
        Ok(())
    }

    /// `x h x^-1`.
    pub fn conjugate(&self, h: &Subgroup, x: u32) -> Subgroup {
        let xi = self.inv(x);
        Subgroup::from_indices(h.elements.iter().map(|&e| self.mul(self.mul(x, e), xi)).collect())
    }

    /// Largest normal subgroup contained in `h`: the intersection of its conjugates.
    pub fn normal_core(&self, h: &Subgroup) -> Subgroup {
        let mut core = h.clone();
        for x in 0..self.order() as u32 {
            if core.is_trivial() {
                break;
            }
            core = core.intersect(&self.conjugate(h, x));
        }
        core
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators.iter().all(|&x| self.conjugate(h, x) == *h)
    }

    /// Every subgroup, sorted by (order, elements).
    ///
    /// Starts from the trivial subgroup and repeatedly adjoins one element to
    /// each subgroup found so far. Every subgroup is reached along some chain
    /// of single-element extensions, so the list is complete.
    pub fn subgroups(&self) -> Result<Vec<Subgroup>> {
        let n = self.order();
        if n > SUBGROUP_SEARCH_LIMIT {
            return Err(Error::TooLarge { order: n, limit: SUBGROUP_SEARCH_LIMIT });
        }
        let mut seen: HashSet<Subgroup> = HashSet::new();
        let mut list: Vec<(Subgroup, Vec<u32>)> = Vec::new();
        let trivial = self.trivial_subgroup();
        seen.insert(trivial.clone());
        list.push((trivial, Vec::new()));
        let mut i = 0;
        while i < list.len() {
            let (h, gens) = list[i].clone();
            let mut covered = vec![false; n];
            for &e in h.elements() {
                covered[e as usize] = true;
            }
            for g in 0..n as u32 {
                if covered[g as usize] {
                    continue;
                }
                let mut ext = gens.clone();
                ext.push(g);
                let k = self.generate(&ext);
                // any g' generating the same cyclic extension over h lands in k
                // as a generator of <g>; skip its other generators
                let ord = self.element_order(g);
                let mut x = g;
                for e in 1..ord {
                    if crate::arith::gcd(e as u64, ord as u64) == 1 {
                        covered[x as usize] = true;
                    }
                    x = self.mul(x, g);
                }
                if seen.insert(k.clone()) {
                    list.push((k, ext));
                }
            }
            i += 1;
        }
        let mut out: Vec<Subgroup> = list.into_iter().map(|(h, _)| h).collect();
        out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(out)
    }

    /// One representative per conjugacy class, ordered by (order, elements).
    pub fn subgroups_up_to_conjugacy(&self) -> Result<Vec<SubgroupClass>> {
        let all = self.subgroups()?;
        let mut assigned: HashSet<Subgroup> = HashSet::new();
        let mut classes = Vec::new();
        for h in all {
            if assigned.contains(&h) {
                continue;
            }
            let conjugates: HashSet<Subgroup> = (0..self.order() as u32).map(|x| self.conjugate(&h, x)).collect();
            let class_size = conjugates.len();
            assigned.extend(conjugates);
            classes.push(SubgroupClass { representative: h, class_size });
        }
        Ok(classes)
    }

    /// Left cosets `gH`, each as a sorted list, ordered by least element.
    pub fn left_cosets(&self, h: &Subgroup) -> Vec<Vec<u32>> {
        self.coset_labels(h).1
    }

    fn coset_labels(&self, h: &Subgroup) -> (Vec<u32>, Vec<Vec<u32>>) {
        let n = self.order();
        let mut label = vec![u32::MAX; n];
        let mut cosets = Vec::new();
        for g in 0..n as u32 {
            if label[g as usize] != u32::MAX {
                continue;
            }
            let id = cosets.len() as u32;
            let mut coset: Vec<u32> = h.elements.iter().map(|&e| self.mul(g, e)).collect();
            coset.sort_unstable();
            for &x in &coset {
                label[x as usize] = id;
            }
            cosets.push(coset);
        }
        (label, cosets)
    }

    /// The action by left multiplication on the disjoint union of the coset
    /// spaces `G/H_i`, with the points of `G/H_1` first.
    pub fn coset_action(&self, d: &ActionDescriptor) -> Result<PermutationGroup> {
        // (offset, coset label per element, least element of each coset)
        let mut labels = Vec::with_capacity(d.subgroups.len());
        let mut offset = 0;
        for h in &d.subgroups {
            self.check_subgroup(h)?;
            let (label, cosets) = self.coset_labels(h);
            let reps: Vec<u32> = cosets.iter().map(|c| c[0]).collect();
            labels.push((offset, label, reps));
            offset += cosets.len();
        }
        let degree = offset;
        if degree != d.total_points {
            return Err(Error::InvalidArgument(format!(
                "descriptor claims {} points, cosets give {degree}",
                d.total_points
            )));
        }
        let image_of = |s: u32| {
            let mut images = vec![0usize; degree];
            for (offset, label, reps) in &labels {
                for (c, &rep) in reps.iter().enumerate() {
                    images[offset + c] = offset + label[self.mul(s, rep) as usize] as usize;
                }
            }
            Permutation::from_images(images)
        };
        let gens = self.generators.iter().map(|&s| image_of(s)).collect::<Result<Vec<_>>>()?;
        let elements = (0..self.order() as u32).map(image_of).collect::<Result<Vec<_>>>()?;
        Ok(PermutationGroup::with_known_elements(degree, gens, elements, self.group.element_budget()))
    }
}

/// A finite action of a group, encoded as the list of subgroups whose coset
/// spaces make up its orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDescriptor {
    pub subgroups: Vec<Subgroup>,
    pub total_points: usize,
}

impl ActionDescriptor {
    pub fn new(group: &FiniteGroup, subgroups: Vec<Subgroup>) -> Self {
        let total_points = subgroups.iter().map(|h| group.order() / h.order()).sum();
        ActionDescriptor { subgroups, total_points }
    }

    /// Orbit sizes `[G:H_i]` in descriptor order.
    pub fn orbit_sizes(&self, group_order: usize) -> Vec<usize> {
        self.subgroups.iter().map(|h| group_order / h.order()).collect()
    }

    /// Kernel of the action: the intersection of the normal cores.
    pub fn kernel(&self, group: &FiniteGroup) -> Subgroup {
        self.subgroups.iter().fold(group.whole(), |acc, h| acc.intersect(&group.normal_core(h)))
    }

    pub fn is_faithful(&self, group: &FiniteGroup) -> bool {
        self.kernel(group).is_trivial()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::spec::AbstractGroupSpec;

    fn table(spec: &str) -> FiniteGroup {
        let spec: AbstractGroupSpec = spec.parse().unwrap();
        FiniteGroup::new(&spec.regular_representation().unwrap()).unwrap()
    }

    /// Subgroups by closing every subset of elements: exponential, only for tiny groups.
    fn brute_force_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
        let n = g.order();
        let mut out = HashSet::new();
        for mask in 1u32..(1 << n) {
            let set: Vec<u32> = (0..n as u32).filter(|i| mask & (1 << i) != 0).collect();
            let h = Subgroup::from_indices(set);
            if g.check_subgroup(&h).is_ok() {
                out.insert(h);
            }
        }
        let mut v: Vec<_> = out.into_iter().collect();
        v.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        v
    }

    #[test]
    fn cayley_table_is_consistent() {
        let g = table("D:5");
        assert_eq!(g.order(), 10);
        for a in 0..10 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.mul(0, a), a);
        }
        assert!(!g.is_abelian());
        assert!(table("Z:2,3").is_abelian());
    }

    #[test]
    fn subgroup_enumeration_matches_brute_force() {
        for spec in ["D:3", "Z:6", "Z:2,2", "D:4", "Z:2,2,2", "D:6", "Z:3,3"] {
            let g = table(spec);
            assert_eq!(g.subgroups().unwrap(), brute_force_subgroups(&g), "{spec}");
        }
    }

    #[test]
    fn conjugacy_classes() {
        let z6 = table("Z:6");
        let orders: Vec<usize> =
            z6.subgroups_up_to_conjugacy().unwrap().iter().map(|c| c.representative.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);

        let d3 = table("D:3");
        let classes = d3.subgroups_up_to_conjugacy().unwrap();
        let orders: Vec<usize> = classes.iter().map(|c| c.representative.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert_eq!(classes[1].class_size, 3);

        let d15 = table("D:15");
        let classes = d15.subgroups_up_to_conjugacy().unwrap();
        let mut orders: Vec<usize> = classes.iter().map(|c| c.representative.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 3, 5, 6, 10, 15, 30]);
        // 1 trivial + 3 + 5 + 15 + 1 (cyclic) + 15 + 5 + 3 (dihedral) + 1
        let total: usize = d15.subgroups().unwrap().len();
        assert_eq!(total, 1 + 15 + 1 + 5 + 1 + 3 + 1 + 1);
    }

    #[test]
    fn normal_cores() {
        let d15 = table("D:15");
        let f = d15.index_of(&d15.permutation_group().generators()[1].clone()).unwrap();
        let flip = d15.generate(&[f]);
        assert!(d15.normal_core(&flip).is_trivial());
        assert_eq!(d15.normal_core(&d15.whole()), d15.whole());
        assert!(d15.normal_core(&d15.trivial_subgroup()).is_trivial());
        let r = d15.generator_indices()[0];
        let rot = d15.generate(&[r]);
        assert_eq!(d15.normal_core(&rot), rot);
        assert!(d15.is_normal(&rot));
    }

    #[test]
    fn coset_actions() {
        let z4 = table("Z:4");
        let reg = z4.coset_action(&ActionDescriptor::new(&z4, vec![z4.trivial_subgroup()])).unwrap();
        assert_eq!((reg.degree(), reg.order().unwrap()), (4, 4));

        let half = z4.generate(&[2]);
        let d = ActionDescriptor::new(&z4, vec![half.clone()]);
        let act = z4.coset_action(&d).unwrap();
        assert_eq!(act.degree(), 2);
        assert_eq!(act.order().unwrap(), 2);
        assert!(!d.is_faithful(&z4));
        assert_eq!(d.kernel(&z4).order(), 2);

        let bogus = Subgroup::from_indices(vec![0, 1]);
        assert!(z4.coset_action(&ActionDescriptor::new(&z4, vec![bogus])).is_err());
    }
}
