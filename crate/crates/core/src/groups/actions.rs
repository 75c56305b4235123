use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::spec::AbstractGroupSpec;
use super::table::{ActionDescriptor, FiniteGroup, Subgroup, SubgroupClass};
use crate::arith;
use crate::bases::{corollary_bound, length_upper_bound, min_base, Base};
use crate::error::Result;
use crate::perm::{PermutationGroup, DEFAULT_ELEMENT_BUDGET};

/// The conjugacy classes of subgroups of a group and their normal cores,
/// from which faithful actions are assembled.
#[derive(Clone, Debug)]
pub struct ActionCatalog {
    spec: Option<AbstractGroupSpec>,
    group: FiniteGroup,
    classes: Vec<SubgroupClass>,
    cores: Vec<Subgroup>,
}

/// One achieved base size and the action that achieved it first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSizeWitness {
    pub base_size: usize,
    pub orbit_sizes: Vec<usize>,
    pub base: Base,
}

/// The base sizes achieved by all faithful actions on at most `max_points` points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSizeSet {
    pub group: String,
    pub group_order: usize,
    pub max_points: usize,
    pub actions_checked: usize,
    pub achieved: BTreeSet<usize>,
    pub upper_bound: usize,
    /// True when `achieved` is all of `1..=upper_bound`, so the point budget
    /// cannot hide any further value.
    pub certified: bool,
    pub witnesses: Vec<BaseSizeWitness>,
}

impl ActionCatalog {
    pub fn for_spec(spec: &AbstractGroupSpec, element_budget: usize) -> Result<Self> {
        let g = spec.regular_representation_with_budget(element_budget)?;
        let mut catalog = Self::for_group(&g)?;
        catalog.spec = Some(spec.clone());
        Ok(catalog)
    }

    pub fn for_group(g: &PermutationGroup) -> Result<Self> {
        let group = FiniteGroup::new(g)?;
        let classes = group.subgroups_up_to_conjugacy()?;
        let cores = classes.iter().map(|c| group.normal_core(&c.representative)).collect();
        Ok(ActionCatalog { spec: None, group, classes, cores })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    /// Every set of class representatives whose indices sum to at most
    /// `max_points` and whose normal cores meet trivially, in a fixed order.
    ///
    /// A class never appears twice: a repeated orbit leaves the pointwise
    /// stabilizers unchanged and so cannot change the base size.
    pub fn faithful_actions(&self, max_points: usize) -> Vec<ActionDescriptor> {
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.extend(0, 0, &self.group.whole(), &mut chosen, max_points, &mut out);
        out
    }

    fn extend(
        &self,
        start: usize,
        points: usize,
        kernel: &Subgroup,
        chosen: &mut Vec<usize>,
        max_points: usize,
        out: &mut Vec<ActionDescriptor>,
    ) {
        let n = self.group.order();
        for i in start..self.classes.len() {
            let index = n / self.classes[i].representative.order();
            if points + index > max_points {
                continue;
            }
            chosen.push(i);
            let k = kernel.intersect(&self.cores[i]);
            if k.is_trivial() {
                let subgroups = chosen.iter().map(|&c| self.classes[c].representative.clone()).collect();
                out.push(ActionDescriptor::new(&self.group, subgroups));
            }
            self.extend(i + 1, points + index, &k, chosen, max_points, out);
            chosen.pop();
        }
    }

    /// The smallest of the order-based bounds on any base size: the prime
    /// factor count of `|G|`, the element-order bound for each prime-power
    /// element order, and the number of elementary divisors for abelian groups.
    pub fn theoretical_upper_bound(&self) -> usize {
        let order = self.group.order() as u64;
        if order < 2 {
            return 0;
        }
        let mut bound = length_upper_bound(order).expect("order >= 2");
        for pk in self.prime_power_element_orders() {
            bound = bound.min(corollary_bound(order, pk).expect("element orders divide |G|"));
        }
        if let Some(AbstractGroupSpec::Abelian { divisors }) = &self.spec {
            bound = bound.min(divisors.len());
        }
        bound
    }

    /// Distinct element orders that are prime powers, ascending.
    pub fn prime_power_element_orders(&self) -> Vec<u64> {
        let orders: BTreeSet<u64> =
            (0..self.group.order() as u32).map(|a| self.group.element_order(a) as u64).collect();
        orders.into_iter().filter(|&k| arith::prime_power(k).is_some()).collect()
    }

    pub fn base_size_set(&self, max_points: usize) -> Result<BaseSizeSet> {
        let actions = self.faithful_actions(max_points);
        let bases = actions.par_iter().map(|d| min_base(&self.group.coset_action(d)?)).collect::<Result<Vec<_>>>()?;
        let mut witnesses: BTreeMap<usize, BaseSizeWitness> = BTreeMap::new();
        for (d, base) in actions.iter().zip(bases) {
            witnesses.entry(base.len()).or_insert_with(|| BaseSizeWitness {
                base_size: base.len(),
                orbit_sizes: d.orbit_sizes(self.group.order()),
                base,
            });
        }
        let achieved: BTreeSet<usize> = witnesses.keys().copied().collect();
        let upper_bound = self.theoretical_upper_bound();
        let certified = achieved.iter().copied().eq(1..=upper_bound);
        Ok(BaseSizeSet {
            group: self.spec.as_ref().map(|s| s.to_string()).unwrap_or_else(|| "<group>".into()),
            group_order: self.group.order(),
            max_points,
            actions_checked: actions.len(),
            achieved,
            upper_bound,
            certified,
            witnesses: witnesses.into_values().collect(),
        })
    }
}

/// Faithful actions of `spec` on at most `max_points` points, as descriptors
/// over the canonical regular representation.
pub fn faithful_actions(spec: &AbstractGroupSpec, max_points: usize) -> Result<Vec<ActionDescriptor>> {
    Ok(ActionCatalog::for_spec(spec, DEFAULT_ELEMENT_BUDGET)?.faithful_actions(max_points))
}

/// Base sizes of all faithful actions on at most `max_points` points.
pub fn base_size_set(spec: &AbstractGroupSpec, max_points: usize) -> Result<BTreeSet<usize>> {
    Ok(ActionCatalog::for_spec(spec, DEFAULT_ELEMENT_BUDGET)?.base_size_set(max_points)?.achieved)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::min_base_size;
    use crate::groups::spec::dpq_representation;

    fn spec(s: &str) -> AbstractGroupSpec {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn z2_has_one_faithful_action_on_two_points() {
        let acts = faithful_actions(&spec("Z:2"), 2).unwrap();
        assert_eq!(acts.len(), 1);
        assert_eq!(acts[0].total_points, 2);
    }

    #[test]
    fn klein_four_actions() {
        let cat = ActionCatalog::for_spec(&spec("Z:2,2"), DEFAULT_ELEMENT_BUDGET).unwrap();
        let acts = cat.faithful_actions(4);
        let shapes: Vec<Vec<usize>> = acts.iter().map(|d| d.orbit_sizes(4)).collect();
        assert!(shapes.contains(&vec![4]));
        assert!(shapes.contains(&vec![2, 2]));
        // three index-2 subgroups, any two meet trivially
        assert_eq!(shapes.iter().filter(|s| **s == vec![2, 2]).count(), 3);
        for d in &acts {
            let g = cat.group().coset_action(d).unwrap();
            assert_eq!(g.order().unwrap(), 4);
        }
    }

    #[test]
    fn dpq_appears_among_coset_actions() {
        let cat = ActionCatalog::for_spec(&spec("D:15"), DEFAULT_ELEMENT_BUDGET).unwrap();
        let target = dpq_representation(3, 5).unwrap();
        let acts = cat.faithful_actions(8);
        let hit = acts.iter().find(|d| {
            let mut sizes = d.orbit_sizes(30);
            sizes.sort_unstable();
            sizes == vec![3, 5]
        });
        let d = hit.expect("3 + 5 point action");
        let g = cat.group().coset_action(d).unwrap();
        assert_eq!(g.order().unwrap(), 30);
        let mut orbit_sizes: Vec<usize> = g.orbits().iter().map(Vec::len).collect();
        orbit_sizes.sort_unstable();
        assert_eq!(orbit_sizes, vec![3, 5]);
        assert_eq!(min_base_size(&g).unwrap(), min_base_size(&target).unwrap());
    }

    #[test]
    fn small_base_size_sets() {
        assert_eq!(base_size_set(&spec("Z:4"), 8).unwrap(), set(&[1]));
        assert_eq!(base_size_set(&spec("Z:2,2"), 4).unwrap(), set(&[1, 2]));
        assert_eq!(base_size_set(&spec("Z:27"), 27).unwrap(), set(&[1]));
        let b = ActionCatalog::for_spec(&spec("Z:2,2"), DEFAULT_ELEMENT_BUDGET).unwrap().base_size_set(4).unwrap();
        assert!(b.certified);
        assert_eq!(b.upper_bound, 2);
    }

    #[test]
    fn base_size_set_grows_with_budget() {
        let cat = ActionCatalog::for_spec(&spec("D:6"), DEFAULT_ELEMENT_BUDGET).unwrap();
        let mut prev = BTreeSet::new();
        for n in [2, 4, 6, 8, 12, 16] {
            let cur = cat.base_size_set(n).unwrap().achieved;
            assert!(prev.is_subset(&cur), "{prev:?} !⊆ {cur:?} at {n}");
            prev = cur;
        }
    }

    #[test]
    fn upper_bounds() {
        let d15 = ActionCatalog::for_spec(&spec("D:15"), DEFAULT_ELEMENT_BUDGET).unwrap();
        assert_eq!(d15.theoretical_upper_bound(), 3);
        let d9 = ActionCatalog::for_spec(&spec("D:9"), DEFAULT_ELEMENT_BUDGET).unwrap();
        assert_eq!(d9.prime_power_element_orders(), vec![2, 3, 9]);
        assert_eq!(d9.theoretical_upper_bound(), 2);
        let v = ActionCatalog::for_spec(&spec("Z:2,2,2"), DEFAULT_ELEMENT_BUDGET).unwrap();
        assert_eq!(v.theoretical_upper_bound(), 3);
    }
}
