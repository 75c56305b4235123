use std::collections::BTreeMap;

use crate::arith;
use crate::error::Result;
use crate::groups::{AbstractGroupSpec, FiniteGroup};
use crate::perm::PermutationGroup;

/// Decides whether `g` is abstractly isomorphic to `spec`.
///
/// Dihedral `D_n`: some `r` of order `n` and involution `f` outside `<r>`
/// satisfy `f r f = r^-1`, and `|G| = 2n`. Abelian: the generators commute,
/// and the element order statistics match the model, which determines a
/// finite abelian group up to isomorphism.
pub fn is_isomorphic_to(g: &PermutationGroup, spec: &AbstractGroupSpec) -> Result<bool> {
    if g.order()? as u64 != spec.order() {
        return Ok(false);
    }
    let table = FiniteGroup::new(g)?;
    Ok(match spec {
        AbstractGroupSpec::Dihedral { n } => is_dihedral(&table, *n as usize),
        AbstractGroupSpec::Abelian { divisors } => {
            table.is_abelian() && order_statistics(&table) == model_order_statistics(divisors)
        }
    })
}

fn is_dihedral(g: &FiniteGroup, n: usize) -> bool {
    let all: Vec<u32> = (0..g.order() as u32).collect();
    let involutions: Vec<u32> = all.iter().copied().filter(|&x| g.element_order(x) == 2).collect();
    for &r in all.iter().filter(|&&x| g.element_order(x) == n) {
        let rotations = g.generate(&[r]);
        let r_inv = g.inv(r);
        for &f in &involutions {
            if !rotations.contains(f) && g.mul(g.mul(f, r), f) == r_inv && g.generate(&[r, f]).order() == 2 * n {
                return true;
            }
        }
    }
    false
}

fn order_statistics(g: &FiniteGroup) -> BTreeMap<usize, usize> {
    let mut stats = BTreeMap::new();
    for x in 0..g.order() as u32 {
        *stats.entry(g.element_order(x)).or_insert(0) += 1;
    }
    stats
}

fn model_order_statistics(divisors: &[u64]) -> BTreeMap<usize, usize> {
    let total: u64 = divisors.iter().product();
    let mut stats = BTreeMap::new();
    for mut x in 0..total {
        let mut ord = 1;
        for &d in divisors {
            let c = x % d;
            x /= d;
            ord = arith::lcm(ord, d / arith::gcd(c, d));
        }
        *stats.entry(ord as usize).or_insert(0) += 1;
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{automorphism_group, Graph};
    use crate::groups::{dpq_representation, dpq_representation_with, ReflectionReading};

    fn spec(s: &str) -> AbstractGroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn cycles_are_dihedral() {
        for n in 3..=10 {
            let aut = automorphism_group(&Graph::cycle(n).unwrap()).unwrap();
            assert!(is_isomorphic_to(&aut, &spec(&format!("D:{n}"))).unwrap());
        }
    }

    #[test]
    fn z6_is_not_d3() {
        let z6 = spec("Z:6").regular_representation().unwrap();
        assert!(!is_isomorphic_to(&z6, &spec("D:3")).unwrap());
        assert!(is_isomorphic_to(&z6, &spec("Z:2,3")).unwrap());
        let d3 = spec("D:3").regular_representation().unwrap();
        assert!(!is_isomorphic_to(&d3, &spec("Z:6")).unwrap());
    }

    #[test]
    fn abelian_invariants_distinguish() {
        let z4 = spec("Z:4").regular_representation().unwrap();
        assert!(!is_isomorphic_to(&z4, &spec("Z:2,2")).unwrap());
        let z2z4 = spec("Z:2,4").regular_representation().unwrap();
        assert!(is_isomorphic_to(&z2z4, &spec("Z:4,2")).unwrap());
        assert!(!is_isomorphic_to(&z2z4, &spec("Z:8")).unwrap());
        assert!(!is_isomorphic_to(&z2z4, &spec("D:4")).unwrap());
    }

    #[test]
    fn dpq_representation_is_dihedral() {
        let g = dpq_representation(3, 5).unwrap();
        assert!(is_isomorphic_to(&g, &spec("D:15")).unwrap());
        // Z3 x D5 has the same order but a centre
        let printed = dpq_representation_with(3, 5, ReflectionReading::Printed).unwrap();
        assert_eq!(printed.order().unwrap(), 30);
        assert!(!is_isomorphic_to(&printed, &spec("D:15")).unwrap());
    }

    #[test]
    fn klein_four_is_d2() {
        let v4 = spec("Z:2,2").regular_representation().unwrap();
        assert!(is_isomorphic_to(&v4, &spec("D:2")).unwrap());
    }
}
