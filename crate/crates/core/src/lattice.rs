use std::collections::HashSet;

use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;
use crate::{GroupError, Result};

/// Every subgroup of `g`, refused above `oracle_cap`.
///
/// Seeds with the cyclic subgroups and closes the collection under pairwise
/// joins until nothing new appears. This is deliberately naive: it serves as
/// the independent reference for the faster enumerations elsewhere. The
/// result is in canonical order and memoized on the group.
pub fn all_subgroups_bruteforce(g: &FiniteGroup, oracle_cap: usize) -> Result<&[Subgroup]> {
    if g.order() > oracle_cap {
        return Err(GroupError::CapExceeded { what: "subgroup lattice", order: g.order(), cap: oracle_cap });
    }
    Ok(g.memo.lattice.get_or_init(|| join_closure(g)))
}

fn join_closure(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen: HashSet<Subgroup> = HashSet::new();
    let mut list: Vec<Subgroup> = Vec::new();
    for (c, _) in g.cyclic_subgroups() {
        if seen.insert(c.clone()) {
            list.push(c.clone());
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            let (a, b) = (&list[i], &list[j]);
            if a.is_subgroup_of(b) || b.is_subgroup_of(a) {
                continue;
            }
            let joined = g.join(a, b);
            if !seen.contains(&joined) {
                seen.insert(joined.clone());
                list.push(joined);
            }
        }
        i += 1;
    }
    list.sort();
    list
}

impl FiniteGroup {
    /// Maximal elements among the proper subgroups in `lattice`.
    pub fn maximal_from_lattice(&self, lattice: &[Subgroup]) -> Vec<Subgroup> {
        let proper: Vec<&Subgroup> = lattice.iter().filter(|h| !h.is_whole(self)).collect();
        proper
            .iter()
            .filter(|h| !proper.iter().any(|k| h.is_proper_subgroup_of(k)))
            .map(|h| (*h).clone())
            .collect()
    }
}
