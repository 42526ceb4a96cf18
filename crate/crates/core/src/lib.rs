//! Explicitly enumerated finite groups and the machinery for studying their
//! minimal non-abelian subgroups.
//!
//! A [`FiniteGroup`] is a full multiplication table on element indices
//! `0..n`, with `0` always the identity. Subgroups are membership bitsets over
//! the parent's elements; every operation takes the parent group explicitly.
//!
//! The crate is split into:
//! - the group core (`group`, `subgroup`, `quotient`, `lattice`),
//! - [`construct`]: cyclic/abelian groups, products, permutation groups and a
//!   catalog of named families,
//! - [`invariants`]: Sylow subgroups, Frattini subgroup, Ω/℧, generator rank,
//!   nilpotency class and related p-group invariants,
//! - [`mna`]: enumeration of minimal non-abelian subgroups, conjugacy class
//!   partitions, κ₁/α₁/β₁/π₁ reports and the Frobenius/transitivity tests.

pub mod arith;
pub mod construct;
mod error;
mod group;
pub mod invariants;
mod lattice;
pub mod mna;
mod quotient;
mod subgroup;

pub use error::{GroupError, Result};
pub use group::{Elem, FiniteGroup, Limits, DEFAULT_MAX_ORDER, DEFAULT_ORACLE_CAP};
pub use lattice::all_subgroups_bruteforce;
pub use quotient::CosetQuotient;
pub use subgroup::{Embedded, Subgroup};
