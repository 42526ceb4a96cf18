use std::collections::BTreeSet;

use crate::arith;
use crate::group::FiniteGroup;
use crate::invariants::{maximal_subgroups_p, sylow_subgroup};
use crate::subgroup::Subgroup;
use crate::{GroupError, Result};

use super::enumerate::{enumerate_mna, is_minimal_nonabelian};
use super::partition::{conjugacy_partition, SubgroupClassPartition};

/// `H = H′ ⋊ Q` for a minimal non-abelian `H` that is not a p-group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MillerMorenoShape {
    pub p: u64,
    pub q: u64,
    /// `H′`, an elementary abelian Sylow p-subgroup of `H`.
    pub kernel: Subgroup,
    /// A cyclic Sylow q-subgroup of `H`.
    pub complement: Subgroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MemberShape {
    PGroup { p: u64 },
    MillerMoreno(MillerMorenoShape),
}

impl MemberShape {
    /// The prime `p` with `H′` a p-group.
    pub fn derived_prime(&self) -> u64 {
        match self {
            MemberShape::PGroup { p } => *p,
            MemberShape::MillerMoreno(s) => s.p,
        }
    }
}

#[derive(Debug, Clone)]
pub struct MnaReport {
    pub members: Vec<Subgroup>,
    pub classes: SubgroupClassPartition,
    pub kappa1: usize,
    pub alpha1: usize,
    /// Number of non-abelian maximal subgroups; present for p-groups only.
    pub beta1: Option<usize>,
    pub pi1: BTreeSet<u64>,
    /// One entry per member, aligned with `members`.
    pub shapes: Vec<MemberShape>,
}

fn contract(msg: impl Into<String>) -> GroupError {
    GroupError::Contract(msg.into())
}

/// Splits a minimal non-abelian `h` as `H′ ⋊ Q`. Returns `Ok(None)` when `h`
/// is a p-group and an error when `h` is not minimal non-abelian or the
/// expected structure fails to materialize.
pub fn miller_moreno_decompose(g: &FiniteGroup, h: &Subgroup) -> Result<Option<MillerMorenoShape>> {
    if !is_minimal_nonabelian(g, h) {
        return Err(contract("subgroup is not minimal non-abelian"));
    }
    if arith::prime_power(h.order() as u64).is_some() {
        return Ok(None);
    }
    let kernel = g.derived_of(h);
    let (p, _) = arith::prime_power(kernel.order() as u64)
        .ok_or_else(|| contract("derived subgroup is not a p-group"))?;
    if !g.is_abelian_subgroup(&kernel) || kernel.elements().any(|x| g.elem_order(x) > p as usize) {
        return Err(contract("derived subgroup is not elementary abelian"));
    }
    let index = (h.order() / kernel.order()) as u64;
    if index.is_multiple_of(p) {
        return Err(contract("derived subgroup is not a Sylow subgroup"));
    }
    let (q, _) = arith::prime_power(index)
        .ok_or_else(|| contract("index of the derived subgroup is not a prime power"))?;
    let sub = g.subgroup_group(h);
    let complement = sub.lift(g, &sylow_subgroup(&sub.group, q));
    if !g.is_cyclic_subgroup(&complement) {
        return Err(contract("Sylow complement is not cyclic"));
    }
    if !complement.meet(&kernel).is_trivial() || complement.order() * kernel.order() != h.order() {
        return Err(contract("kernel and complement do not factor the subgroup"));
    }
    Ok(Some(MillerMorenoShape { p, q, kernel, complement }))
}

fn shape_of(g: &FiniteGroup, h: &Subgroup) -> Result<MemberShape> {
    Ok(match miller_moreno_decompose(g, h)? {
        Some(s) => MemberShape::MillerMoreno(s),
        None => MemberShape::PGroup { p: arith::prime_power(h.order() as u64).expect("p-group").0 },
    })
}

/// The primes `p` for which some minimal non-abelian subgroup has `H′` a
/// p-group.
pub fn pi1(g: &FiniteGroup) -> Result<BTreeSet<u64>> {
    enumerate_mna(g).iter().map(|h| shape_of(g, h).map(|s| s.derived_prime())).collect()
}

pub fn mna_report(g: &FiniteGroup) -> Result<MnaReport> {
    let members = enumerate_mna(g).to_vec();
    let classes = conjugacy_partition(g, &members);
    let shapes = members.iter().map(|h| shape_of(g, h)).collect::<Result<Vec<_>>>()?;
    let pi1 = shapes.iter().map(MemberShape::derived_prime).collect();
    let beta1 = match g.p_group_prime() {
        Some(_) => Some(maximal_subgroups_p(g)?.iter().filter(|m| !g.is_abelian_subgroup(m)).count()),
        None => None,
    };
    let report =
        MnaReport { alpha1: members.len(), kappa1: classes.len(), members, classes, beta1, pi1, shapes };
    debug_assert_eq!(report.classes.total(), report.alpha1);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::catalog::{
        alternating, example72, fermat_family, quaternion, symmetric, EXAMPLE72_A, EXAMPLE72_C,
    };
    use crate::construct::{cyclic, direct_product};
    use crate::Limits;

    #[test]
    fn a5_report() {
        let g = alternating(5, &Limits::default()).unwrap();
        let r = mna_report(&g).unwrap();
        assert_eq!(r.kappa1, 3);
        assert_eq!(r.alpha1, 21);
        assert_eq!(r.pi1, BTreeSet::from([2, 3, 5]));
        assert_eq!(r.beta1, None);
    }

    #[test]
    fn q8_report() {
        let g = quaternion(8, &Limits::default()).unwrap();
        let r = mna_report(&g).unwrap();
        assert_eq!((r.alpha1, r.kappa1), (1, 1));
        assert_eq!(r.pi1, BTreeSet::from([2]));
        assert_eq!(r.beta1, Some(0));
        assert_eq!(r.shapes, vec![MemberShape::PGroup { p: 2 }]);
    }

    #[test]
    fn s3_shape() {
        let g = symmetric(3, &Limits::default()).unwrap();
        let s = miller_moreno_decompose(&g, &Subgroup::whole(&g)).unwrap().unwrap();
        assert_eq!((s.p, s.q), (3, 2));
        assert_eq!((s.kernel.order(), s.complement.order()), (3, 2));
    }

    #[test]
    fn example72_report() {
        let g = example72(&Limits::default()).unwrap();
        let r = mna_report(&g).unwrap();
        assert_eq!((r.alpha1, r.kappa1), (12, 1));
        assert_eq!(r.pi1, BTreeSet::from([3]));
        let c4 = g.pow(EXAMPLE72_C, 4);
        let h = g.closure(&[EXAMPLE72_A, c4]).unwrap();
        assert!(r.members.contains(&h));
        let s = miller_moreno_decompose(&g, &h).unwrap().unwrap();
        assert_eq!((s.kernel.order(), s.complement.order()), (3, 2));
    }

    #[test]
    fn fermat5_members_are_d10() {
        let g = fermat_family(5, &Limits::default()).unwrap();
        let r = mna_report(&g).unwrap();
        assert_eq!((r.alpha1, r.kappa1), (5, 1));
        for shape in &r.shapes {
            let MemberShape::MillerMoreno(s) = shape else {
                panic!("expected a split member");
            };
            assert_eq!((s.p, s.q), (5, 2));
            assert_eq!((s.kernel.order(), s.complement.order()), (5, 2));
        }
    }

    #[test]
    fn non_mna_input_is_rejected() {
        let g = direct_product(
            &symmetric(3, &Limits::default()).unwrap(),
            &cyclic(2, &Limits::default()).unwrap(),
            &Limits::default(),
        )
        .unwrap();
        assert!(miller_moreno_decompose(&g, &Subgroup::whole(&g)).is_err());
    }
}
