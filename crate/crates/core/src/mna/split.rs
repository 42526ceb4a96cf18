use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;
use crate::{GroupError, Result};

use super::partition::conjugacy_partition;

/// Measured sizes for `H ≤ M ⋖ G` in a p-group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitCheck {
    pub p: u64,
    /// `|Conj(G, H)|`.
    pub g_class: usize,
    /// `|Conj(M, H)|`.
    pub m_class: usize,
    /// Number of `M`-classes that `Conj(G, H)` falls into.
    pub m_classes: usize,
    /// False when `Conj(G, H) = Conj(M, H)`.
    pub applicable: bool,
    /// `g_class = p·m_class` and `m_classes = p`; true when not applicable.
    pub holds: bool,
}

pub fn conj_class_split_check(g: &FiniteGroup, m: &Subgroup, h: &Subgroup) -> Result<SplitCheck> {
    let (p, _) = g.p_group_prime().ok_or(GroupError::NotPGroup(g.order()))?;
    if m.order() as u64 * p != g.order() as u64 {
        return Err(GroupError::Contract("M is not maximal in G".into()));
    }
    if !h.is_subgroup_of(m) {
        return Err(GroupError::Contract("H is not contained in M".into()));
    }
    let in_g = g.conjugacy_orbit(h, g.generators());
    let in_m = g.conjugacy_orbit(h, &g.generators_of(m));
    let m_classes = conjugacy_within(g, m, &in_g);
    let applicable = in_g != in_m;
    let holds = !applicable || (in_g.len() as u64 == p * in_m.len() as u64 && m_classes as u64 == p);
    Ok(SplitCheck { p, g_class: in_g.len(), m_class: in_m.len(), m_classes, applicable, holds })
}

fn conjugacy_within(g: &FiniteGroup, m: &Subgroup, subs: &[Subgroup]) -> usize {
    let sub = g.subgroup_group(m);
    let restricted: Vec<Subgroup> = subs.iter().map(|s| sub.restrict(s)).collect();
    conjugacy_partition(&sub.group, &restricted).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::catalog::dihedral;
    use crate::invariants::maximal_subgroups_p;
    use crate::Limits;

    #[test]
    fn d16_reflection_splits_in_two() {
        let g = dihedral(16, &Limits::default()).unwrap();
        let maxes = maximal_subgroups_p(&g).unwrap();
        let mut seen = false;
        for m in maxes.iter().filter(|m| !g.is_abelian_subgroup(m)) {
            for x in m.elements().filter(|&x| g.elem_order(x) == 2) {
                let h = g.closure(&[x]).unwrap();
                let r = conj_class_split_check(&g, m, &h).unwrap();
                assert!(r.holds);
                if r.applicable {
                    assert_eq!((r.g_class, r.m_class, r.m_classes), (4, 2, 2));
                    seen = true;
                }
            }
        }
        assert!(seen);
    }

    #[test]
    fn normal_subgroup_is_not_applicable() {
        let g = dihedral(16, &Limits::default()).unwrap();
        let m = &maximal_subgroups_p(&g).unwrap()[0];
        let r = conj_class_split_check(&g, m, &Subgroup::trivial(&g)).unwrap();
        assert!(!r.applicable && r.holds);
        assert!(conj_class_split_check(&g, &Subgroup::whole(&g), &Subgroup::trivial(&g)).is_err());
    }
}
