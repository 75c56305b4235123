//! Executable checks of the base-size and determining-set results.
//!
//! Each claim is checked on concrete instances and reported as one
//! [`ClaimResult`]. Statements that quantify over every graph can only be
//! sampled through a finite corpus; those are reported as
//! [`ClaimStatus::Evidence`], never as a pass.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::bases::{corollary_bound, greedy_base, is_base, length_upper_bound, min_base};
use crate::error::{Error, Result};
use crate::graphs::{determining_set, frucht_graph, is_isomorphic_to, standard_corpus_with, Graph, GraphCorpus};
use crate::groups::{
    dpq_representation_with, natural_dihedral_action, AbstractGroupSpec, ActionCatalog, ActionDescriptor,
    ReflectionReading,
};
use crate::perm::{PermutationGroup, DEFAULT_ELEMENT_BUDGET};

/// Largest graph the suite's corpora may contain.
pub const DEFAULT_CORPUS_SIZE_BUDGET: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Held on every instance, but the statement ranges over infinitely
    /// many graphs.
    Evidence,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Evidence => "EVIDENCE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub instances_checked: usize,
    pub status: ClaimStatus,
    /// The instances and values behind a pass, or the counterexample behind a fail.
    pub detail: String,
}

impl ClaimResult {
    fn new(claim_id: &str, instances_checked: usize, status: ClaimStatus, detail: String) -> Self {
        if instances_checked == 0 && status != ClaimStatus::Fail {
            return ClaimResult {
                claim_id: claim_id.into(),
                instances_checked,
                status: ClaimStatus::Fail,
                detail: format!("no instances checked ({detail})"),
            };
        }
        ClaimResult { claim_id: claim_id.into(), instances_checked, status, detail }
    }

    fn from_error(claim_id: &str, e: &Error) -> Self {
        let detail = if e.is_budget() { format!("budget exceeded: {e}") } else { format!("error: {e}") };
        ClaimResult { claim_id: claim_id.into(), instances_checked: 0, status: ClaimStatus::Fail, detail }
    }

    pub fn is_fail(&self) -> bool {
        self.status == ClaimStatus::Fail
    }

    /// `CLAIM <id> <status> checked=<n> <detail>`
    pub fn line(&self) -> String {
        format!("CLAIM {} {} checked={} {}", self.claim_id, self.status, self.instances_checked, self.detail)
    }
}

/// Counts checked instances and keeps the first violation.
#[derive(Default)]
struct Tally {
    checked: usize,
    violation: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.violation.is_none() {
            self.violation = Some(what());
        }
    }

    fn finish(self, claim_id: &str, status_if_ok: ClaimStatus, summary: String) -> ClaimResult {
        match self.violation {
            Some(v) => ClaimResult::new(claim_id, self.checked, ClaimStatus::Fail, format!("counterexample: {v}")),
            None => ClaimResult::new(claim_id, self.checked, status_if_ok, summary),
        }
    }
}

fn fmt_set(s: &BTreeSet<usize>) -> String {
    let inner: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn range_set(n: usize) -> BTreeSet<usize> {
    (1..=n).collect()
}

fn dihedral(n: u64) -> Result<AbstractGroupSpec> {
    AbstractGroupSpec::dihedral(n)
}

fn spec(s: &str) -> AbstractGroupSpec {
    s.parse().expect("built-in descriptor")
}

// ---- single checks ----

fn order_pk_scan(t: &mut Tally, label: &str, g: &PermutationGroup) -> Result<()> {
    for e in g.closure()? {
        let o = e.order();
        if arith::prime_power(o).is_some() {
            let lengths = e.cycle_decomposition().cycle_lengths();
            t.check(lengths.contains(&(o as usize)), || {
                format!("{label}: element {e} of order {o} has cycle lengths {lengths:?}")
            });
        }
    }
    Ok(())
}

/// Every element of prime-power order `p^k` has a cycle of length `p^k`.
pub fn check_lemma_order_pk(g: &PermutationGroup) -> Result<ClaimResult> {
    let mut t = Tally::default();
    order_pk_scan(&mut t, "group", g)?;
    let n = t.checked;
    Ok(t.finish("LEMMA-ORDER-PK", ClaimStatus::Pass, format!("{n} elements of prime-power order")))
}

/// The base sizes of all faithful actions on at most `max_points` points
/// stay below the element-order bound for the largest prime-power element
/// order.
pub fn check_corollary_orbit_pk(
    spec: &AbstractGroupSpec,
    max_points: usize,
    element_budget: usize,
) -> Result<ClaimResult> {
    let catalog = ActionCatalog::for_spec(spec, element_budget)?;
    let set = catalog.base_size_set(max_points)?;
    let pk = *catalog
        .prime_power_element_orders()
        .last()
        .ok_or_else(|| Error::InvalidArgument(format!("{spec} has no element of prime-power order")))?;
    let bound = corollary_bound(spec.order(), pk)?;
    let largest = set.achieved.last().copied().unwrap_or(0);
    let detail = format!("{spec} N={max_points} B={} bound={bound} (element order {pk})", fmt_set(&set.achieved));
    let status = if largest <= bound { ClaimStatus::Pass } else { ClaimStatus::Fail };
    Ok(ClaimResult::new("COR-ORBIT-PK", set.actions_checked, status, detail))
}

/// For each list of cyclic factors, with `n` elementary divisors: base sizes
/// lie in `1..=n`, all of `1..=n` occur once `N >= |G| + sum of divisors`,
/// and the corpus determining numbers lie in `1..=n`.
///
/// `max_points = None` uses `|G| + sum of divisors` for each group.
pub fn check_abelian_theorem(
    divisor_lists: &[Vec<u64>],
    max_points: Option<usize>,
    size_budget: usize,
    element_budget: usize,
) -> Result<ClaimResult> {
    let mut t = Tally::default();
    let mut parts = Vec::new();
    for list in divisor_lists {
        let g = AbstractGroupSpec::abelian(list)?;
        let AbstractGroupSpec::Abelian { divisors } = &g else { unreachable!() };
        let n = divisors.len();
        let full_budget = g.order() as usize + divisors.iter().sum::<u64>() as usize;
        let points = max_points.unwrap_or(full_budget);
        let b = ActionCatalog::for_spec(&g, element_budget)?.base_size_set(points)?.achieved;
        let d = standard_corpus_with(&g, size_budget, element_budget)?.determining_numbers();
        let expected = range_set(n);
        t.check(b.is_subset(&expected), || format!("{g}: base size set {} exceeds 1..{n}", fmt_set(&b)));
        if points >= full_budget {
            t.check(b == expected, || format!("{g} N={points}: base size set {} is not 1..{n}", fmt_set(&b)));
        }
        t.check(d.is_subset(&expected), || format!("{g}: determining numbers {} exceed 1..{n}", fmt_set(&d)));
        parts.push(format!("{g} N={points} B={} D={}", fmt_set(&b), fmt_set(&d)));
    }
    Ok(t.finish("THM-ABELIAN", ClaimStatus::Pass, parts.join("; ")))
}

/// The two-orbit action of `D_pq` is dihedral of order `2pq`, has base size
/// 3, and no two points form a base.
pub fn check_prop_d15(p: u64, q: u64, reading: ReflectionReading, element_budget: usize) -> Result<ClaimResult> {
    let target = dihedral(p * q)?;
    let g = dpq_representation_with(p, q, reading)?.with_element_budget(element_budget);
    let reading_name = reading_name(reading);
    let mut t = Tally::default();
    let iso = is_isomorphic_to(&g, &target)?;
    t.check(iso, || {
        let order = g.order().map(|o| o.to_string()).unwrap_or_else(|_| "?".into());
        format!("{reading_name} reflection: group of order {order} on {} points is not {target}", g.degree())
    });
    let base = min_base(&g)?;
    t.check(base.len() == 3, || format!("{target} on {} points: base size {}, expected 3", g.degree(), base.len()));
    let degree = g.degree();
    let mut pairs = 0;
    for i in 0..degree {
        for j in i + 1..degree {
            pairs += 1;
            let b = is_base(&g, &[i, j])?;
            t.check(!b, || format!("{target}: points {{{i},{j}}} form a base"));
        }
    }
    let detail = format!(
        "{target} on {degree} points ({reading_name} reflection): base size 3, base {:?}, none of {pairs} point pairs is a base",
        base.points
    );
    let instances = if t.violation.is_some() { t.checked } else { 1 };
    let mut r = t.finish("PROP-D15", ClaimStatus::Pass, detail);
    r.instances_checked = instances;
    Ok(r)
}

fn reading_name(r: ReflectionReading) -> &'static str {
    match r {
        ReflectionReading::Corrected => "corrected",
        ReflectionReading::Printed => "printed",
    }
}

fn dpq_primes(target: &AbstractGroupSpec) -> Result<(usize, usize)> {
    if let AbstractGroupSpec::Dihedral { n } = target {
        let f = arith::factorize(*n);
        if f.len() == 2 && f.iter().all(|&(p, e)| p > 2 && e == 1) {
            return Ok((f[0].0 as usize, f[1].0 as usize));
        }
    }
    Err(Error::InvalidArgument(format!("{target} is not D_pq for distinct odd primes p, q")))
}

/// The involutions of a `D_pq` action each move a point of every orbit of
/// size `p` or `q`.
fn flipping_scan(t: &mut Tally, label: &str, g: &PermutationGroup, p: usize, q: usize) -> Result<()> {
    let orbits: Vec<Vec<usize>> = g.orbits().into_iter().filter(|o| o.len() == p || o.len() == q).collect();
    for f in g.closure()?.iter().filter(|e| e.order() == 2) {
        for o in &orbits {
            t.check(o.iter().any(|&v| !f.fixes(v)), || {
                format!("{label}: involution {f} fixes the orbit {o:?} pointwise")
            });
        }
    }
    Ok(())
}

/// For a prime `p` dividing `|G|` exactly once, an element of order `p`
/// runs through each orbit of size `p` as a single cycle.
fn prime_orbits_scan(t: &mut Tally, label: &str, g: &PermutationGroup) -> Result<()> {
    let order = g.order()? as u64;
    let orbits = g.orbits();
    for (p, e) in arith::factorize(order) {
        if e != 1 {
            continue;
        }
        let p = p as usize;
        for x in g.closure()?.iter().filter(|x| x.order() == p as u64) {
            for o in orbits.iter().filter(|o| o.len() == p) {
                let v = o[0];
                let mut cycle: Vec<usize> = (0..p as u64).map(|i| x.pow(i).apply(v)).collect();
                cycle.sort_unstable();
                cycle.dedup();
                t.check(&cycle == o, || format!("{label}: element {x} of order {p} does not cycle the orbit {o:?}"));
            }
        }
    }
    Ok(())
}

/// Elements of prime order `q` fix every point whose orbit is smaller than `q`.
fn qstab_scan(t: &mut Tally, label: &str, g: &PermutationGroup) -> Result<()> {
    let orbits = g.orbits();
    for x in g.closure()? {
        let q = x.order();
        if q < 2 || !arith::is_prime(q) {
            continue;
        }
        for o in orbits.iter().filter(|o| (o.len() as u64) < q) {
            t.check(o.iter().all(|&v| x.fixes(v)), || {
                format!("{label}: element {x} of prime order {q} moves a point of the orbit {o:?}")
            });
        }
    }
    Ok(())
}

fn orbit_stabilizer_scan(t: &mut Tally, label: &str, g: &PermutationGroup) -> Result<()> {
    let elements = g.closure()?;
    for o in g.orbits() {
        for &v in &o {
            let stab = elements.iter().filter(|x| x.fixes(v)).count();
            t.check(o.len() * stab == elements.len(), || {
                format!(
                    "{label}: point {v} has orbit {} and stabilizer {stab} in a group of order {}",
                    o.len(),
                    elements.len()
                )
            });
        }
    }
    Ok(())
}

fn chain_scan(t: &mut Tally, label: &str, g: &PermutationGroup) -> Result<()> {
    let order = g.order()?;
    let exact = min_base(g)?;
    let greedy = greedy_base(g)?;
    let bound = if order < 2 { 0 } else { length_upper_bound(order as u64)? };
    let strict = exact.witness_chain.windows(2).all(|w| w[0] > w[1]) && exact.witness_chain.last() == Some(&1);
    t.check(strict && exact.len() <= greedy.len() && greedy.len() <= bound, || {
        format!(
            "{label}: chain {:?}, minimum {} greedy {} bound {bound}",
            exact.witness_chain,
            exact.len(),
            greedy.len()
        )
    });
    Ok(())
}

/// Every involution moves a point in every orbit of size `p` or `q`, over
/// the graphs of a `D_pq` corpus. A corpus is a sample, so the best outcome
/// is evidence.
pub fn check_prop_flipping(corpus: &GraphCorpus) -> Result<ClaimResult> {
    let (p, q) = dpq_primes(&corpus.target)?;
    let mut t = Tally::default();
    for e in &corpus.entries {
        flipping_scan(&mut t, &e.label, &e.automorphisms, p, q)?;
    }
    let detail = format!("{} graphs with automorphism group {}", corpus.entries.len(), corpus.target);
    Ok(t.finish("PROP-FLIPPING", ClaimStatus::Evidence, detail))
}

/// No graph in a `D_pq` corpus has determining number 3 or more.
pub fn check_thm_3_not_in_d(corpus: &GraphCorpus) -> Result<ClaimResult> {
    dpq_primes(&corpus.target)?;
    let mut t = Tally::default();
    for e in &corpus.entries {
        let d = e.determining_number();
        t.check(d <= 2, || {
            format!(
                "{} graph '{}' has determining number {d}, determining set {:?}",
                corpus.target, e.label, e.determining_set.points
            )
        });
    }
    let detail =
        format!("{} D={} over {} graphs", corpus.target, fmt_set(&corpus.determining_numbers()), corpus.entries.len());
    Ok(t.finish("THM-3-NOT-IN-D", ClaimStatus::Evidence, detail))
}

// ---- suite ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Reduced instance lists.
    pub quick: bool,
    pub element_budget: usize,
    /// Largest graph admitted to a corpus.
    pub size_budget: usize,
    /// Reflection used to build the two-orbit `D_pq` action.
    pub reflection_reading: ReflectionReading,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            quick: false,
            element_budget: DEFAULT_ELEMENT_BUDGET,
            size_budget: DEFAULT_CORPUS_SIZE_BUDGET,
            reflection_reading: ReflectionReading::Corrected,
        }
    }
}

impl SuiteOptions {
    pub fn quick() -> Self {
        SuiteOptions { quick: true, ..Self::default() }
    }

    fn pick<T: Clone>(&self, full: &[T], quick: &[T]) -> Vec<T> {
        if self.quick {
            quick.to_vec()
        } else {
            full.to_vec()
        }
    }
}

/// Claim ids in report order, with the statement each one checks.
pub const COVERAGE: &[(&str, &str)] = &[
    ("ORBIT-STABILIZER", "|orbit(v)| * |stabilizer(v)| = |G| for every point of every action checked"),
    (
        "CHAIN-LENGTH-BOUND",
        "a minimum base gives a strict stabilizer chain no longer than the prime factor count of |G|",
    ),
    ("LEMMA-ORDER-PK", "in a faithful action an element of order p^k has a cycle of length p^k"),
    ("COR-ORBIT-PK", "if G has an element of order p^k, every base size is at most Omega(|G|/p^k) + 1"),
    ("THM-ABELIAN", "for abelian G with n elementary divisors, B(G) = D(G) = {1..n}"),
    ("LEM-DIHEDRAL-CONSTRUCTIONS", "{1,2} is contained in D(D_n) for n >= 2"),
    ("PROP-DPK", "B(D_{p^k}) = D(D_{p^k}) = {1,2}"),
    ("PROP-D2PK", "B(D_{2p^k}) = D(D_{2p^k}) = {1,2,3} for odd p"),
    ("PROP-D15", "D_pq acting on p + q points has base size 3"),
    ("PROP-D15-FORMULA", "which reflection formula makes the p + q point action dihedral"),
    ("LEM-PRIME-ORBITS", "if p divides |G| exactly once, an element of order p cycles each orbit of size p"),
    ("LEM-QSTAB-ORBIT", "an element of prime order q fixes every point whose orbit is smaller than q"),
    ("PROP-FLIPPING", "in any action of D_pq every involution moves a point of every orbit of size p or q"),
    ("THM-3-NOT-IN-D", "no graph with automorphism group D_pq has determining number 3"),
    ("COR-B-DPQ", "B(D_pq) = {1,2,3}"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub reflection_reading: ReflectionReading,
    pub claims: Vec<ClaimResult>,
}

impl Report {
    pub fn has_failures(&self) -> bool {
        self.claims.iter().any(ClaimResult::is_fail)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.claim_id == id)
    }

    /// Claim lines followed by the coverage table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            out.push_str(&c.line());
            out.push('\n');
        }
        for (id, statement) in COVERAGE {
            out.push_str(&format!("COVERS {id}: {statement}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// An action or automorphism group the invariant scans run over.
struct Instance {
    label: String,
    group: PermutationGroup,
    /// `(p, q)` when the group is `D_pq` for distinct odd primes.
    dpq: Option<(usize, usize)>,
}

fn instance_pool(o: &SuiteOptions) -> Result<Vec<Instance>> {
    let mut pool = Vec::new();
    let fixed: Vec<(u64, u64)> = o.pick(&[(3, 5), (3, 7), (5, 7)], &[(3, 5)]);
    for (p, q) in fixed {
        let group = dpq_representation_with(p, q, ReflectionReading::Corrected)?.with_element_budget(o.element_budget);
        pool.push(Instance {
            label: format!("D:{} on {} points", p * q, p + q),
            group,
            dpq: Some((p as usize, q as usize)),
        });
    }
    pool.push(Instance {
        label: "regular Z:8".into(),
        group: spec("Z:8").regular_representation_with_budget(o.element_budget)?,
        dpq: None,
    });
    pool.push(Instance {
        label: "natural D:9".into(),
        group: natural_dihedral_action(9)?.with_element_budget(o.element_budget),
        dpq: None,
    });

    let families: Vec<(&str, usize)> = o.pick(
        &[("D:15", 40), ("D:21", 42), ("D:35", 24), ("D:6", 24), ("D:10", 24), ("Z:2,2,2", 16), ("Z:4,3", 19)],
        &[("D:15", 30), ("D:6", 12)],
    );
    for (name, max_points) in families {
        let s = spec(name);
        let dpq = dpq_primes(&s).ok();
        let catalog = ActionCatalog::for_spec(&s, o.element_budget)?;
        let g = catalog.group();
        for class in catalog.classes() {
            let d = ActionDescriptor::new(g, vec![class.representative.clone()]);
            let label = format!("{name} on cosets of a subgroup of order {}", class.representative.order());
            pool.push(Instance { label, group: g.coset_action(&d)?, dpq });
        }
        for d in catalog.faithful_actions(max_points) {
            let label = format!("{name} with orbits {:?}", d.orbit_sizes(g.order()));
            pool.push(Instance { label, group: g.coset_action(&d)?, dpq });
        }
    }

    let corpora: Vec<&str> = o.pick(&["D:15", "D:21", "D:6"], &["D:15"]);
    for name in corpora {
        let s = spec(name);
        let dpq = dpq_primes(&s).ok();
        for e in standard_corpus_with(&s, o.size_budget, o.element_budget)?.entries {
            pool.push(Instance { label: format!("{name} graph '{}'", e.label), group: e.automorphisms, dpq });
        }
    }
    Ok(pool)
}

type Scan = fn(&mut Tally, &str, &PermutationGroup) -> Result<()>;

fn pool_claim(id: &str, pool: &Result<Vec<Instance>>, scan: Scan) -> ClaimResult {
    let pool = match pool {
        Ok(p) => p,
        Err(e) => return ClaimResult::from_error(id, e),
    };
    let mut t = Tally::default();
    for inst in pool {
        if let Err(e) = scan(&mut t, &inst.label, &inst.group) {
            return ClaimResult::from_error(id, &e);
        }
    }
    let n = pool.len();
    t.finish(id, ClaimStatus::Pass, format!("over {n} actions and graphs, no violation"))
}

fn flipping_claim(pool: &Result<Vec<Instance>>) -> ClaimResult {
    const ID: &str = "PROP-FLIPPING";
    let pool = match pool {
        Ok(p) => p,
        Err(e) => return ClaimResult::from_error(ID, e),
    };
    let mut t = Tally::default();
    let mut groups = BTreeSet::new();
    for inst in pool {
        if let Some((p, q)) = inst.dpq {
            groups.insert(p * q);
            if let Err(e) = flipping_scan(&mut t, &inst.label, &inst.group, p, q) {
                return ClaimResult::from_error(ID, &e);
            }
        }
    }
    // Every action is a disjoint union of coset actions G/H, and the property
    // is about single orbits, so the scan over all subgroup classes settles it.
    let names: Vec<String> = groups.iter().map(|n| format!("D:{n}")).collect();
    t.finish(
        ID,
        ClaimStatus::Pass,
        format!("involution/orbit pairs over every transitive action of {} and the corpus graphs", names.join(", ")),
    )
}

fn suite_corollary(o: &SuiteOptions) -> Result<ClaimResult> {
    let mut t = Tally::default();
    let mut parts = Vec::new();
    for (name, n) in [("D:9", 20), ("D:10", 24), ("Z:27", 30)] {
        let r = check_corollary_orbit_pk(&spec(name), n, o.element_budget)?;
        t.check(!r.is_fail(), || r.detail.clone());
        parts.push(r.detail);
    }
    Ok(t.finish("COR-ORBIT-PK", ClaimStatus::Pass, parts.join("; ")))
}

fn suite_lemma_order_pk(pool: &Result<Vec<Instance>>) -> ClaimResult {
    pool_claim("LEMMA-ORDER-PK", pool, order_pk_scan)
}

fn suite_abelian(o: &SuiteOptions) -> Result<ClaimResult> {
    let lists: Vec<Vec<u64>> =
        o.pick(&[vec![2, 2], vec![2, 2, 2], vec![4, 3], vec![3, 9]], &[vec![2, 2], vec![2, 2, 2]]);
    check_abelian_theorem(&lists, None, o.size_budget, o.element_budget)
}

fn suite_dihedral_constructions(o: &SuiteOptions) -> Result<ClaimResult> {
    let ns: Vec<u64> = if o.quick { (2..=6).collect() } else { (2..=12).chain([15]).collect() };
    let mut t = Tally::default();
    for &n in &ns {
        let target = dihedral(n)?;
        let frucht = frucht_graph(&target, &target.standard_generators())?;
        let d1 = determining_set(&frucht, frucht.vertex_count(), o.element_budget)?.len();
        t.check(d1 == 1, || format!("Frucht graph of {target} has determining number {d1}"));
        let two = if n >= 3 { Graph::cycle(n as usize)? } else { Graph::path(2).disjoint_union(&Graph::path(3)) };
        let aut = crate::graphs::automorphism_group_with(&two, two.vertex_count(), o.element_budget)?;
        let iso = is_isomorphic_to(&aut, &target)?;
        let d2 = min_base(&aut)?.len();
        t.check(iso && d2 == 2, || format!("second graph for {target}: isomorphic {iso}, determining number {d2}"));
    }
    let detail = format!(
        "D_n for n in {}..{}{}: Frucht graph has determining number 1, cycle C_n (path(2) + path(3) for n = 2) has 2",
        ns[0],
        if o.quick { ns[ns.len() - 1] } else { 12 },
        if o.quick { "" } else { " and 15" }
    );
    Ok(t.finish("LEM-DIHEDRAL-CONSTRUCTIONS", ClaimStatus::Pass, detail))
}

/// `B` at `N = |G|` and the corpus `D` both equal `expected`, with `B`
/// certified by the theoretical bound.
fn dihedral_family(
    id: &str,
    names: &[&str],
    expected: &BTreeSet<usize>,
    o: &SuiteOptions,
    mut extra: impl FnMut(&mut Tally, &AbstractGroupSpec, &GraphCorpus) -> String,
) -> Result<ClaimResult> {
    let mut t = Tally::default();
    let mut parts = Vec::new();
    for &name in names {
        let s = spec(name);
        let n = s.order() as usize;
        let b = ActionCatalog::for_spec(&s, o.element_budget)?.base_size_set(n)?;
        let corpus = standard_corpus_with(&s, o.size_budget, o.element_budget)?;
        let d = corpus.determining_numbers();
        t.check(&b.achieved == expected && b.certified, || {
            format!("{s} N={n}: B={} (bound {}), expected {}", fmt_set(&b.achieved), b.upper_bound, fmt_set(expected))
        });
        t.check(&d == expected, || format!("{s}: corpus D={}, expected {}", fmt_set(&d), fmt_set(expected)));
        let note = extra(&mut t, &s, &corpus);
        parts.push(format!("{s} B={} D={}{note}", fmt_set(&b.achieved), fmt_set(&d)));
    }
    Ok(t.finish(id, ClaimStatus::Pass, parts.join("; ")))
}

fn suite_dpk(o: &SuiteOptions) -> Result<ClaimResult> {
    let names = o.pick(&["D:3", "D:4", "D:8", "D:9", "D:25", "D:27"], &["D:4", "D:9"]);
    dihedral_family("PROP-DPK", &names, &range_set(2), o, |_, _, _| String::new())
}

fn suite_d2pk(o: &SuiteOptions) -> Result<ClaimResult> {
    let names = o.pick(&["D:6", "D:10", "D:14", "D:18"], &["D:6", "D:10"]);
    dihedral_family("PROP-D2PK", &names, &range_set(3), o, |t, s, corpus| {
        let AbstractGroupSpec::Dihedral { n } = s else { unreachable!() };
        let label = format!("path(2) + cycle({})", n / 2);
        let d = corpus.entries.iter().find(|e| e.label == label).map(|e| e.determining_number());
        t.check(d == Some(3), || format!("{s}: graph '{label}' has determining number {d:?}"));
        format!(" ({label} has 3)")
    })
}

fn dpq_pairs(o: &SuiteOptions) -> Vec<(u64, u64)> {
    o.pick(&[(3, 5), (3, 7), (5, 7)], &[(3, 5)])
}

fn suite_d15(o: &SuiteOptions) -> Result<ClaimResult> {
    let mut t = Tally::default();
    let mut parts = Vec::new();
    for (p, q) in dpq_pairs(o) {
        let r = check_prop_d15(p, q, o.reflection_reading, o.element_budget)?;
        t.check(!r.is_fail(), || r.detail.clone());
        parts.push(r.detail);
    }
    Ok(t.finish("PROP-D15", ClaimStatus::Pass, parts.join("; ")))
}

fn suite_d15_formula(o: &SuiteOptions) -> Result<ClaimResult> {
    let mut t = Tally::default();
    let mut parts = Vec::new();
    for (p, q) in dpq_pairs(o) {
        let target = dihedral(p * q)?;
        let corrected =
            dpq_representation_with(p, q, ReflectionReading::Corrected)?.with_element_budget(o.element_budget);
        let printed = dpq_representation_with(p, q, ReflectionReading::Printed)?.with_element_budget(o.element_budget);
        let fixed = |g: &PermutationGroup| -> Vec<usize> {
            let f = &g.generators()[1];
            (0..g.degree()).filter(|&v| f.fixes(v)).collect()
        };
        let corrected_ok = is_isomorphic_to(&corrected, &target)?;
        let corrected_fixed = fixed(&corrected);
        let (p_, q_) = (p as usize, q as usize);
        t.check(corrected_ok && corrected_fixed == vec![p_ - 1, p_ + q_ - 1], || {
            format!("{target}: corrected reflection fixes {corrected_fixed:?}, dihedral {corrected_ok}")
        });
        let printed_ok = is_isomorphic_to(&printed, &target)?;
        parts.push(format!(
            "{target}: corrected reflection fixes {corrected_fixed:?} and gives {target}; printed bound fixes {:?} and gives a group of order {} that is {}",
            fixed(&printed),
            printed.order()?,
            if printed_ok { "dihedral" } else { "not dihedral" }
        ));
    }
    let summary = format!("suite reading: {}; {}", reading_name(o.reflection_reading), parts.join("; "));
    Ok(t.finish("PROP-D15-FORMULA", ClaimStatus::Pass, summary))
}

fn suite_thm3(o: &SuiteOptions) -> Result<ClaimResult> {
    let names = o.pick(&["D:15", "D:21"], &["D:15"]);
    let mut graphs = 0;
    let mut parts = Vec::new();
    for name in names {
        let r = check_thm_3_not_in_d(&standard_corpus_with(&spec(name), o.size_budget, o.element_budget)?)?;
        if r.is_fail() {
            return Ok(r);
        }
        graphs += r.instances_checked;
        parts.push(r.detail);
    }
    // the same scan must see a 3 for D_6, which is not a product of odd primes
    let control = standard_corpus_with(&spec("D:6"), o.size_budget, o.element_budget)?;
    let cd = control.determining_numbers();
    if !cd.contains(&3) {
        let detail = format!("control D:6 corpus D={} has no 3, so the scan cannot discriminate", fmt_set(&cd));
        return Ok(ClaimResult::new("THM-3-NOT-IN-D", graphs, ClaimStatus::Fail, detail));
    }
    parts.push(format!("control D:6 D={}", fmt_set(&cd)));
    Ok(ClaimResult::new("THM-3-NOT-IN-D", graphs, ClaimStatus::Evidence, parts.join("; ")))
}

fn suite_b_dpq(o: &SuiteOptions) -> Result<ClaimResult> {
    let cases: Vec<(&str, usize)> = o.pick(&[("D:15", 40), ("D:21", 42)], &[("D:15", 40)]);
    let mut t = Tally::default();
    let mut parts = Vec::new();
    let mut actions = 0;
    for (name, n) in cases {
        let b = ActionCatalog::for_spec(&spec(name), o.element_budget)?.base_size_set(n)?;
        actions += b.actions_checked;
        t.check(b.achieved == range_set(3) && b.certified, || {
            format!("{name} N={n}: B={} (bound {})", fmt_set(&b.achieved), b.upper_bound)
        });
        let w: Vec<String> = b.witnesses.iter().map(|w| format!("{}:{:?}", w.base_size, w.orbit_sizes)).collect();
        parts.push(format!(
            "{name} N={n} B={} bound={} witnesses {}",
            fmt_set(&b.achieved),
            b.upper_bound,
            w.join(" ")
        ));
    }
    let mut r = t.finish("COR-B-DPQ", ClaimStatus::Pass, parts.join("; "));
    if !r.is_fail() {
        r.instances_checked = actions;
    }
    Ok(r)
}

/// Runs every check on its default instances. The order of the result
/// follows [`COVERAGE`] and does not depend on scheduling.
pub fn run_paper_suite(o: &SuiteOptions) -> Report {
    let pool = instance_pool(o);
    type Job<'a> = Box<dyn Fn() -> ClaimResult + Send + Sync + 'a>;
    let guard = |id: &'static str, f: fn(&SuiteOptions) -> Result<ClaimResult>| -> Job<'_> {
        Box::new(move || f(o).unwrap_or_else(|e| ClaimResult::from_error(id, &e)))
    };
    let pool = &pool;
    let jobs: Vec<Job<'_>> = vec![
        Box::new(move || pool_claim("ORBIT-STABILIZER", pool, orbit_stabilizer_scan)),
        Box::new(move || pool_claim("CHAIN-LENGTH-BOUND", pool, chain_scan)),
        Box::new(move || suite_lemma_order_pk(pool)),
        guard("COR-ORBIT-PK", suite_corollary),
        guard("THM-ABELIAN", suite_abelian),
        guard("LEM-DIHEDRAL-CONSTRUCTIONS", suite_dihedral_constructions),
        guard("PROP-DPK", suite_dpk),
        guard("PROP-D2PK", suite_d2pk),
        guard("PROP-D15", suite_d15),
        guard("PROP-D15-FORMULA", suite_d15_formula),
        Box::new(move || pool_claim("LEM-PRIME-ORBITS", pool, prime_orbits_scan)),
        Box::new(move || pool_claim("LEM-QSTAB-ORBIT", pool, qstab_scan)),
        Box::new(move || flipping_claim(pool)),
        guard("THM-3-NOT-IN-D", suite_thm3),
        guard("COR-B-DPQ", suite_b_dpq),
    ];
    let claims = jobs.par_iter().map(|job| job()).collect();
    Report {
        suite: if o.quick { "quick".into() } else { "paper".into() },
        reflection_reading: o.reflection_reading,
        claims,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::standard_corpus;
    use crate::groups::dpq_representation;

    #[test]
    fn order_pk_examples() {
        for g in [
            dpq_representation(3, 5).unwrap(),
            spec("Z:8").regular_representation().unwrap(),
            natural_dihedral_action(9).unwrap(),
        ] {
            assert_eq!(check_lemma_order_pk(&g).unwrap().status, ClaimStatus::Pass);
        }
    }

    #[test]
    fn corollary_examples() {
        for (s, n, bound) in [("D:9", 20, 2), ("D:10", 24, 3), ("Z:27", 30, 1)] {
            let r = check_corollary_orbit_pk(&spec(s), n, DEFAULT_ELEMENT_BUDGET).unwrap();
            assert_eq!(r.status, ClaimStatus::Pass, "{}", r.detail);
            assert!(r.detail.contains(&format!("bound={bound}")), "{}", r.detail);
        }
    }

    #[test]
    fn abelian_examples() {
        let r = check_abelian_theorem(&[vec![2, 2]], Some(8), 256, DEFAULT_ELEMENT_BUDGET).unwrap();
        assert!(r.detail.contains("B={1,2}"), "{}", r.detail);
        let r = check_abelian_theorem(&[vec![2, 2, 2]], Some(16), 256, DEFAULT_ELEMENT_BUDGET).unwrap();
        assert!(r.detail.contains("B={1,2,3}"), "{}", r.detail);
        let r = check_abelian_theorem(&[vec![4, 3]], Some(16), 256, DEFAULT_ELEMENT_BUDGET).unwrap();
        assert!(r.detail.contains("B={1,2}"), "{}", r.detail);
        assert_eq!(r.status, ClaimStatus::Pass);
    }

    #[test]
    fn d15_readings() {
        for (p, q) in [(3, 5), (3, 7), (5, 7)] {
            let r = check_prop_d15(p, q, ReflectionReading::Corrected, DEFAULT_ELEMENT_BUDGET).unwrap();
            assert_eq!(r.status, ClaimStatus::Pass, "{}", r.detail);
        }
        let r = check_prop_d15(3, 5, ReflectionReading::Printed, DEFAULT_ELEMENT_BUDGET).unwrap();
        assert_eq!(r.status, ClaimStatus::Fail);
        assert!(r.detail.contains("printed"), "{}", r.detail);
    }

    #[test]
    fn flipping_and_thm3_on_corpus() {
        let c = standard_corpus(&spec("D:15"), 256).unwrap();
        assert_eq!(check_prop_flipping(&c).unwrap().status, ClaimStatus::Evidence);
        assert_eq!(check_thm_3_not_in_d(&c).unwrap().status, ClaimStatus::Evidence);
        let control = standard_corpus(&spec("D:6"), 256).unwrap();
        assert!(check_thm_3_not_in_d(&control).is_err());
    }

    #[test]
    fn flipping_catches_a_fixed_orbit() {
        // Z_2 x D_3 on 2 + 3 points: the central involution fixes the 3-orbit
        let g = PermutationGroup::new(
            5,
            vec![
                crate::perm::Permutation::from_cycles(5, &[[0, 1]]).unwrap(),
                crate::perm::Permutation::from_cycles(5, &[[2, 3, 4]]).unwrap(),
                crate::perm::Permutation::from_cycles(5, &[[3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        let mut t = Tally::default();
        flipping_scan(&mut t, "test", &g, 3, 5).unwrap();
        assert!(t.violation.is_some());
    }

    #[test]
    fn qstab_and_prime_orbits_hold_on_dpq() {
        let g = dpq_representation(3, 5).unwrap();
        let mut t = Tally::default();
        qstab_scan(&mut t, "dpq", &g).unwrap();
        prime_orbits_scan(&mut t, "dpq", &g).unwrap();
        assert!(t.checked > 0 && t.violation.is_none());
    }

    #[test]
    fn zero_instances_never_pass() {
        let r = Tally::default().finish("X", ClaimStatus::Pass, "nothing".into());
        assert_eq!(r.status, ClaimStatus::Fail);
    }

    #[test]
    fn quick_suite_is_green_and_deterministic() {
        let a = run_paper_suite(&SuiteOptions::quick());
        for c in &a.claims {
            assert_ne!(c.status, ClaimStatus::Fail, "{}", c.line());
        }
        assert_eq!(a.claim("THM-3-NOT-IN-D").unwrap().status, ClaimStatus::Evidence);
        assert_eq!(a.claims.len(), COVERAGE.len());
        for (c, (id, _)) in a.claims.iter().zip(COVERAGE) {
            assert_eq!(&c.claim_id, id);
        }
        let b = run_paper_suite(&SuiteOptions::quick());
        assert_eq!(a.to_text(), b.to_text());
    }

    #[test]
    fn tiny_element_budget_fails_with_detail() {
        let o = SuiteOptions { element_budget: 10, ..SuiteOptions::quick() };
        let r = run_paper_suite(&o);
        assert!(r.has_failures());
        assert!(r.claims.iter().any(|c| c.detail.contains("budget exceeded")));
    }

    #[test]
    fn printed_reading_fails_loudly() {
        let o = SuiteOptions { reflection_reading: ReflectionReading::Printed, ..SuiteOptions::quick() };
        let r = run_paper_suite(&o);
        assert_eq!(r.claim("PROP-D15").unwrap().status, ClaimStatus::Fail);
        assert!(r.claim("PROP-D15-FORMULA").unwrap().detail.starts_with("suite reading: printed"));
    }
}
