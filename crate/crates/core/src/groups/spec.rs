use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup, DEFAULT_ELEMENT_BUDGET};

/// A small abstract group: a finite abelian group given by its elementary
/// divisors, or the dihedral group of order `2n`.
///
/// Elements are numbered canonically. Abelian elements use mixed radix over
/// the divisors (first divisor fastest); dihedral element `r^a f^b` has index
/// `a + n*b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AbstractGroupSpec {
    Abelian { divisors: Vec<u64> },
    Dihedral { n: u64 },
}

/// Splits each cyclic factor into prime-power parts, sorted ascending.
pub fn elementary_divisors(factors: &[u64]) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for &f in factors {
        if f < 2 {
            return Err(Error::InvalidSpec(format!("cyclic factor {f} < 2")));
        }
        out.extend(arith::factorize(f).into_iter().map(|(p, e)| p.pow(e)));
    }
    out.sort_unstable();
    Ok(out)
}

impl AbstractGroupSpec {
    /// The direct sum of cyclic groups of the given orders.
    pub fn abelian(factors: &[u64]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidSpec("abelian group needs at least one factor".into()));
        }
        Ok(AbstractGroupSpec::Abelian { divisors: elementary_divisors(factors)? })
    }

    pub fn dihedral(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("dihedral D_{n} needs n >= 2")));
        }
        Ok(AbstractGroupSpec::Dihedral { n })
    }

    pub fn order(&self) -> u64 {
        match self {
            AbstractGroupSpec::Abelian { divisors } => divisors.iter().product(),
            AbstractGroupSpec::Dihedral { n } => 2 * n,
        }
    }

    /// Indices of the standard generators: unit vectors for abelian groups,
    /// `[r, f]` for dihedral groups.
    pub fn standard_generators(&self) -> Vec<usize> {
        match self {
            AbstractGroupSpec::Abelian { divisors } => {
                let mut stride = 1;
                divisors
                    .iter()
                    .map(|&d| {
                        let g = stride;
                        stride *= d as usize;
                        g
                    })
                    .collect()
            }
            AbstractGroupSpec::Dihedral { n } => vec![1, *n as usize],
        }
    }

    /// Product of two elements in the canonical numbering.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        match self {
            AbstractGroupSpec::Abelian { divisors } => {
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                let mut stride = 1;
                for &d in divisors {
                    let d = d as usize;
                    out += ((a % d + b % d) % d) * stride;
                    a /= d;
                    b /= d;
                    stride *= d;
                }
                out
            }
            AbstractGroupSpec::Dihedral { n } => {
                let n = *n as usize;
                let (ra, fa) = (a % n, a / n);
                let (rb, fb) = (b % n, b / n);
                // r^ra f^fa r^rb f^fb = r^(ra + (-1)^fa rb) f^(fa+fb)
                let r = if fa == 0 { (ra + rb) % n } else { (ra + n - rb) % n };
                r + n * ((fa + fb) % 2)
            }
        }
    }

    /// Left-multiplication action on the canonically numbered elements.
    pub fn regular_representation(&self) -> Result<PermutationGroup> {
        self.regular_representation_with_budget(DEFAULT_ELEMENT_BUDGET)
    }

    pub fn regular_representation_with_budget(&self, budget: usize) -> Result<PermutationGroup> {
        let order = self.order() as usize;
        if order > budget {
            return Err(Error::ElementBudget { budget });
        }
        let gens = self
            .standard_generators()
            .into_iter()
            .map(|s| Permutation::from_images((0..order).map(|x| self.multiply(s, x)).collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok(PermutationGroup::new(order, gens)?.with_element_budget(budget))
    }

    /// Number of elementary divisors; zero for dihedral groups.
    pub fn rank(&self) -> usize {
        match self {
            AbstractGroupSpec::Abelian { divisors } => divisors.len(),
            AbstractGroupSpec::Dihedral { .. } => 0,
        }
    }
}

impl fmt::Display for AbstractGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbstractGroupSpec::Abelian { divisors } => {
                let parts: Vec<String> = divisors.iter().map(u64::to_string).collect();
                write!(f, "Z:{}", parts.join(","))
            }
            AbstractGroupSpec::Dihedral { n } => write!(f, "D:{n}"),
        }
    }
}

/// Parses `Z:d1,d2,...` (cyclic factor orders) or `D:n`.
impl FromStr for AbstractGroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidSpec(format!("`{s}` (expected `Z:d1,d2,...` or `D:n`)"));
        let (family, rest) = s.split_once(':').ok_or_else(bad)?;
        let numbers =
            rest.split(',').map(|t| t.trim().parse::<u64>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
        match family.trim() {
            "Z" | "z" => AbstractGroupSpec::abelian(&numbers),
            "D" | "d" => match numbers.as_slice() {
                [n] => AbstractGroupSpec::dihedral(*n),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}

/// The symmetry group of the regular `n`-gon acting on its vertices.
pub fn natural_dihedral_action(n: usize) -> Result<PermutationGroup> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("natural dihedral action needs n >= 3, got {n}")));
    }
    let rotation = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())?;
    let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
    PermutationGroup::new(n, vec![rotation, reflection])
}

/// Which reading of the reflection's first product to use in
/// [`dpq_representation_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReflectionReading {
    /// First product over `i = 1..(p-1)/2`, so the reflection fixes `x_p`.
    Corrected,
    /// First product over `i = 1..(p+1)/2`, composed literally. The last
    /// factor repeats the one before it and the two cancel.
    Printed,
}

/// `D_pq` acting on `p + q` points with orbits of sizes `p` and `q`.
///
/// Points `0..p` carry the `p`-cycle of `r` and points `p..p+q` the
/// `q`-cycle. The generator list is `[r, f]`.
pub fn dpq_representation(p: u64, q: u64) -> Result<PermutationGroup> {
    dpq_representation_with(p, q, ReflectionReading::Corrected)
}

pub fn dpq_representation_with(p: u64, q: u64, reading: ReflectionReading) -> Result<PermutationGroup> {
    if p == q || p < 3 || q < 3 || !arith::is_prime(p) || !arith::is_prime(q) {
        return Err(Error::InvalidArgument(format!("({p}, {q}) are not distinct odd primes")));
    }
    let (p, q) = (p as usize, q as usize);
    let n = p + q;
    // 1-based x_i maps to point i - 1
    let x = |i: usize| i - 1;
    let first: Vec<usize> = (1..=p).map(x).collect();
    let second: Vec<usize> = (p + 1..=p + q).map(x).collect();
    let r = Permutation::from_cycles(n, &[first, second])?;

    let first_bound = match reading {
        ReflectionReading::Corrected => (p - 1) / 2,
        ReflectionReading::Printed => p.div_ceil(2),
    };
    let mut f = Permutation::identity(n);
    for i in 1..=first_bound {
        f = f.compose(&Permutation::from_cycles(n, &[[x(i), x(p - i)]])?)?;
    }
    for j in 1..=(q - 1) / 2 {
        f = f.compose(&Permutation::from_cycles(n, &[[x(p + j), x(p + q - j)]])?)?;
    }
    PermutationGroup::new(n, vec![r, f])
}
