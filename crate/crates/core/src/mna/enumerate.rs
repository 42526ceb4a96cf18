use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::group::{Elem, FiniteGroup};
use crate::subgroup::Subgroup;

use super::partition::conjugacy_partition;

/// The minimal non-abelian subgroups of `G`, in canonical order.
///
/// Every non-abelian subgroup contains one generated by a non-commuting pair,
/// and any such pair is conjugate to `(r, y)` with `r` the chosen generator of
/// a class representative among the cyclic subgroups. So the candidates are
/// `⟨r, d⟩` over class representatives `⟨r⟩` and cyclic subgroups `⟨d⟩` with
/// `[r, d] ≠ 1`; closing them under conjugation gives every 2-generated
/// non-abelian subgroup, and the inclusion-minimal ones are exactly 𝒜₁(G).
pub fn enumerate_mna(g: &FiniteGroup) -> &[Subgroup] {
    g.memo.mna.get_or_init(|| compute(g))
}

fn compute(g: &FiniteGroup) -> Vec<Subgroup> {
    if g.is_abelian() {
        return Vec::new();
    }
    let cyclic = g.cyclic_subgroups();
    let cyclic_subs: Vec<Subgroup> = cyclic.iter().map(|(c, _)| c.clone()).collect();
    let classes = conjugacy_partition(g, &cyclic_subs);
    let reps: Vec<(Subgroup, Elem)> = classes
        .orbits
        .iter()
        .map(|o| {
            cyclic
                .iter()
                .find(|(c, _)| *c == o.representative)
                .expect("representative is one of the inputs")
                .clone()
        })
        .collect();

    let candidates: BTreeSet<Subgroup> = reps
        .par_iter()
        .map(|(r_sub, r)| {
            cyclic
                .iter()
                .filter(|&&(_, d)| !g.commute(*r, d))
                .map(|&(_, d)| g.extend(r_sub, &[*r], d))
                .collect::<BTreeSet<_>>()
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });

    let candidates: Vec<Subgroup> = candidates.into_iter().collect();
    let gens = g.generators();
    let mut all: BTreeSet<Subgroup> = BTreeSet::new();
    let mut reps: Vec<Subgroup> = Vec::new();
    for c in &candidates {
        if all.contains(c) {
            continue;
        }
        reps.push(c.clone());
        all.extend(g.conjugacy_orbit(c, gens));
    }
    let all: Vec<Subgroup> = all.into_iter().collect();

    let minimal_reps: Vec<&Subgroup> = reps
        .par_iter()
        .filter(|h| {
            !all.iter()
                .take_while(|k| k.order() < h.order())
                .any(|k| h.order() % k.order() == 0 && k.is_subgroup_of(h))
        })
        .collect();

    let mut out: BTreeSet<Subgroup> = BTreeSet::new();
    for h in minimal_reps {
        out.extend(g.conjugacy_orbit(h, gens));
    }
    out.into_iter().collect()
}

/// Whether `h` is non-abelian with every proper subgroup abelian, decided by
/// checking that each non-commuting pair of cyclic subgroups of `h`
/// generates all of `h`.
pub fn is_minimal_nonabelian(g: &FiniteGroup, h: &Subgroup) -> bool {
    if g.is_abelian_subgroup(h) {
        return false;
    }
    let inside: Vec<&(Subgroup, Elem)> =
        g.cyclic_subgroups().iter().filter(|(c, _)| c.is_subgroup_of(h)).collect();
    inside.iter().enumerate().all(|(i, (x_sub, x))| {
        inside[i + 1..]
            .iter()
            .all(|&&(_, y)| g.commute(*x, y) || g.extend(x_sub, &[*x], y).order() == h.order())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::catalog::{alternating, dihedral, quaternion, symmetric};
    use crate::construct::{abelian, AbelianType};
    use crate::Limits;

    #[test]
    fn abelian_has_none() {
        let g = abelian(&AbelianType::new(vec![4, 2]).unwrap(), &Limits::default()).unwrap();
        assert!(enumerate_mna(&g).is_empty());
    }

    #[test]
    fn s3_is_its_own_member() {
        let g = symmetric(3, &Limits::default()).unwrap();
        let m = enumerate_mna(&g);
        assert_eq!(m.len(), 1);
        assert!(m[0].is_whole(&g));
        assert!(is_minimal_nonabelian(&g, &m[0]));
    }

    #[test]
    fn q8_and_d16() {
        let q8 = quaternion(8, &Limits::default()).unwrap();
        assert_eq!(enumerate_mna(&q8).len(), 1);
        let d16 = dihedral(16, &Limits::default()).unwrap();
        let m = enumerate_mna(&d16);
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|h| h.order() == 8));
        assert!(!is_minimal_nonabelian(&d16, &Subgroup::whole(&d16)));
    }

    #[test]
    fn s4_members() {
        let g = symmetric(4, &Limits::default()).unwrap();
        let m = enumerate_mna(&g);
        // four S₃, three D₈, one A₄
        let mut orders: Vec<usize> = m.iter().map(Subgroup::order).collect();
        orders.dedup();
        assert_eq!(orders, vec![6, 8, 12]);
        assert_eq!(m.len(), 8);
    }

    #[test]
    fn a5_members() {
        let g = alternating(5, &Limits::default()).unwrap();
        let m = enumerate_mna(&g);
        // ten S₃, six D₁₀, five A₄
        assert_eq!(m.len(), 21);
        assert!(m.iter().all(|h| is_minimal_nonabelian(&g, h)));
    }
}
