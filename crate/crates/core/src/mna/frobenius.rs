use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;
use crate::{GroupError, Result};

fn contract(msg: impl Into<String>) -> GroupError {
    GroupError::Contract(msg.into())
}

/// Whether `G = K ⋊ C` is a Frobenius group with kernel `K` and complement
/// `C`, i.e. `C_K(c) = 1` for every `c ∈ C ∖ {1}`. Both parts must be
/// nontrivial for a `true` answer.
pub fn is_frobenius(g: &FiniteGroup, k: &Subgroup, c: &Subgroup) -> Result<bool> {
    if !g.is_normal(k) {
        return Err(GroupError::NotNormal);
    }
    if !k.meet(c).is_trivial() || k.order() * c.order() != g.order() {
        return Err(contract("K and C do not split G"));
    }
    if k.is_trivial() || c.is_trivial() {
        return Ok(false);
    }
    Ok(c.elements().filter(|&x| x != g.identity()).all(|x| g.centralizer(x).meet(k).is_trivial()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransitivityKind {
    Intransitive,
    Transitive,
    TwoTransitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transitivity {
    pub kind: TransitivityKind,
    /// Set for a one-element set, where 2-transitivity holds trivially.
    pub vacuous: bool,
}

/// How `G` acts by conjugation on a conjugation-closed set of subgroups.
///
/// 2-transitivity is checked as transitivity of the stabilizer `N_G(H₀)` of
/// the first member on the remaining ones.
pub fn action_transitivity(g: &FiniteGroup, set: &[Subgroup]) -> Result<Transitivity> {
    let mut set = set.to_vec();
    set.sort();
    set.dedup();
    let Some(first) = set.first() else {
        return Err(contract("empty set of subgroups"));
    };
    for h in &set {
        for &x in g.generators() {
            if set.binary_search(&g.conjugate(h, x)).is_err() {
                return Err(contract("set is not closed under conjugation"));
            }
        }
    }
    if set.len() == 1 {
        return Ok(Transitivity { kind: TransitivityKind::TwoTransitive, vacuous: true });
    }
    let orbit = g.conjugacy_orbit(first, g.generators());
    let kind = if orbit.len() < set.len() {
        TransitivityKind::Intransitive
    } else {
        let stab = g.normalizer(first);
        let stab_gens = g.generators_of(&stab);
        let rest = g.conjugacy_orbit(&set[1], &stab_gens);
        if rest.len() == set.len() - 1 {
            TransitivityKind::TwoTransitive
        } else {
            TransitivityKind::Transitive
        }
    };
    Ok(Transitivity { kind, vacuous: false })
}
