//! Base sizes of permutation group actions.
//!
//! The crate covers four layers:
//!
//! * [`perm`]: permutations, permutation groups, orbits and pointwise stabilizers.
//! * [`bases`]: base testing, greedy bases, exact minimum base search and
//!   the order-based upper bounds on base size.
//! * [`groups`]: small abstract groups (abelian and dihedral), subgroup
//!   enumeration, coset actions, faithful-action enumeration and the
//!   base size set of a group restricted to a point budget.
//! * [`graphs`]: simple graphs, automorphism groups by partition refinement,
//!   determining numbers and families of graphs with prescribed automorphism
//!   groups.
//!
//! [`verify`] ties these together into a claim-by-claim report.

pub mod arith;
pub mod bases;
mod error;
pub mod graphs;
pub mod groups;
pub mod perm;
pub mod verify;

pub use bases::{greedy_base, is_base, min_base, min_base_size, Base};
pub use error::{Error, Result};
pub use graphs::{automorphism_group, determining_number, Graph};
pub use groups::{base_size_set, AbstractGroupSpec, ActionDescriptor, FiniteGroup, Subgroup};
pub use perm::{Permutation, PermutationGroup, DEFAULT_ELEMENT_BUDGET};
