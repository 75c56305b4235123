//! Small abstract groups and their faithful actions.
//!
//! Faithful actions are enumerated as disjoint unions of coset actions
//! `G/H`, one subgroup per conjugacy class at most. Conjugate subgroups give
//! isomorphic coset spaces, so nothing is lost for base size purposes.

mod actions;
mod spec;
mod table;

pub use actions::{base_size_set, faithful_actions, ActionCatalog, BaseSizeSet, BaseSizeWitness};
pub use spec::{
    dpq_representation, dpq_representation_with, elementary_divisors, natural_dihedral_action, AbstractGroupSpec,
    ReflectionReading,
};
pub use table::{ActionDescriptor, FiniteGroup, Subgroup, SubgroupClass, SUBGROUP_SEARCH_LIMIT};
