use std::collections::HashMap;

use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// The canonically smallest member.
    pub representative: Subgroup,
    /// Members in canonical order.
    pub members: Vec<Subgroup>,
}

/// The input subgroups grouped by `G`-conjugacy, orbits ordered by
/// representative.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SubgroupClassPartition {
    pub orbits: Vec<Orbit>,
}

impl SubgroupClassPartition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.members.len()).collect()
    }

    pub fn total(&self) -> usize {
        self.orbits.iter().map(|o| o.members.len()).sum()
    }
}

/// Partitions `subs` into classes of `G`-conjugate subgroups. Duplicates are
/// collapsed. If `subs` is not closed under conjugation, each class holds only
/// the conjugates actually present.
pub fn conjugacy_partition(g: &FiniteGroup, subs: &[Subgroup]) -> SubgroupClassPartition {
    let mut sorted = subs.to_vec();
    sorted.sort();
    sorted.dedup();
    let position: HashMap<&Subgroup, usize> = sorted.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut assigned = vec![false; sorted.len()];
    let mut orbits = Vec::new();
    for i in 0..sorted.len() {
        if assigned[i] {
            continue;
        }
        let mut members = Vec::new();
        for c in g.conjugacy_orbit(&sorted[i], g.generators()) {
            if let Some(&j) = position.get(&c) {
                assigned[j] = true;
                members.push(c);
            }
        }
        orbits.push(Orbit { representative: sorted[i].clone(), members });
    }
    SubgroupClassPartition { orbits }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::catalog::{quaternion, symmetric};
    use crate::lattice::all_subgroups_bruteforce;
    use crate::Limits;

    #[test]
    fn normal_subgroups_are_singletons() {
        let g = quaternion(8, &Limits::default()).unwrap();
        let lattice = all_subgroups_bruteforce(&g, 200).unwrap();
        let p = conjugacy_partition(&g, lattice);
        assert_eq!(p.len(), 6);
        assert!(p.sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn s3_classes() {
        let g = symmetric(3, &Limits::default()).unwrap();
        let lattice = all_subgroups_bruteforce(&g, 200).unwrap();
        let p = conjugacy_partition(&g, lattice);
        assert_eq!(p.sizes(), vec![1, 3, 1, 1]);
        assert_eq!(p.total(), 6);
        for o in &p.orbits {
            assert_eq!(o.representative, o.members[0]);
        }
    }
}
