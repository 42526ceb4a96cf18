//! Structural invariants of groups and p-groups.

mod coprime;
mod pgroup;
mod sylow;

pub use coprime::{
    coprime_action_decomposition, cyclic_decomposition, find_cyclic_quotient_witness, hall_complement,
};
pub use pgroup::{
    at_level, frattini, is_homocyclic, is_maximal_class, lower_central_series, maximal_subgroups,
    maximal_subgroups_p, mho, minimal_generators, nilpotency_class, omega_1, p_group_profile, HomocyclicType,
    PGroupProfile,
};
pub use sylow::{derived_series, is_nilpotent, is_solvable, sylow_subgroup};
