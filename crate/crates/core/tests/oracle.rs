//! An independent subset-enumeration oracle for groups of order at most 16.
//! Every subset containing the identity is tested for closure directly from
//! the multiplication table; nothing from the library's subgroup machinery is
//! used to build the oracle lattice.

use std::collections::BTreeSet;

use mna_core::construct::catalog::{
    alternating, dicyclic, dihedral, modular, quaternion, semidihedral, symmetric,
};
use mna_core::construct::{abelian, cyclic, direct_product, AbelianType};
use mna_core::invariants::at_level;
use mna_core::mna::{conjugacy_partition, enumerate_mna};
use mna_core::{all_subgroups_bruteforce, FiniteGroup, Limits};

type Set = Vec<usize>;

fn oracle_subgroups(g: &FiniteGroup) -> Vec<Set> {
    let n = g.order();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let set: Set = std::iter::once(0).chain((1..n).filter(|i| mask >> (i - 1) & 1 == 1)).collect();
        let inside = |x: usize| x == 0 || mask >> (x - 1) & 1 == 1;
        if set.iter().all(|&a| set.iter().all(|&b| inside(g.mul(a, b)))) {
            out.push(set);
        }
    }
    out
}

fn abelian_set(g: &FiniteGroup, s: &Set) -> bool {
    s.iter().all(|&a| s.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

fn proper_subset(a: &Set, b: &Set) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.contains(x))
}

fn oracle_mna(g: &FiniteGroup) -> BTreeSet<Set> {
    let subs = oracle_subgroups(g);
    subs.iter()
        .filter(|h| !abelian_set(g, h))
        .filter(|h| subs.iter().filter(|k| proper_subset(k, h)).all(|k| abelian_set(g, k)))
        .cloned()
        .collect()
}

fn oracle_kappa(g: &FiniteGroup, members: &BTreeSet<Set>) -> usize {
    let mut seen: BTreeSet<Set> = BTreeSet::new();
    let mut classes = 0;
    for h in members {
        if seen.contains(h) {
            continue;
        }
        classes += 1;
        for x in g.elements() {
            let mut c: Set = h.iter().map(|&y| g.mul(g.mul(g.inv(x), y), x)).collect();
            c.sort_unstable();
            seen.insert(c);
        }
    }
    classes
}

fn oracle_at_level(g: &FiniteGroup) -> u32 {
    let (p, n) = g.p_group_prime().expect("p-group");
    let smallest = oracle_subgroups(g).iter().filter(|h| !abelian_set(g, h)).map(Vec::len).min();
    match smallest {
        None => 0,
        Some(k) => n - (k as f64).log(p as f64).round() as u32 + 1,
    }
}

fn lim() -> Limits {
    Limits::default()
}

fn small_groups() -> Vec<FiniteGroup> {
    let l = lim();
    let c2 = cyclic(2, &l).unwrap();
    vec![
        symmetric(3, &l).unwrap(),
        dihedral(8, &l).unwrap(),
        quaternion(8, &l).unwrap(),
        dihedral(12, &l).unwrap(),
        dicyclic(12, &l).unwrap(),
        alternating(4, &l).unwrap(),
        dihedral(16, &l).unwrap(),
        quaternion(16, &l).unwrap(),
        semidihedral(16, &l).unwrap(),
        modular(2, 4, &l).unwrap(),
        direct_product(&dihedral(8, &l).unwrap(), &c2, &l).unwrap(),
        direct_product(&quaternion(8, &l).unwrap(), &c2, &l).unwrap(),
        abelian(&AbelianType::new(vec![4, 2, 2]).unwrap(), &l).unwrap(),
    ]
}

#[test]
fn lattice_matches_subset_oracle() {
    for g in small_groups() {
        let expected: BTreeSet<Set> = oracle_subgroups(&g).into_iter().collect();
        let got: BTreeSet<Set> =
            all_subgroups_bruteforce(&g, 200).unwrap().iter().map(|h| h.to_vec()).collect();
        assert_eq!(got, expected, "{}", g.label());
    }
}

#[test]
fn mna_enumeration_matches_subset_oracle() {
    for g in small_groups() {
        let expected = oracle_mna(&g);
        let got: BTreeSet<Set> = enumerate_mna(&g).iter().map(|h| h.to_vec()).collect();
        assert_eq!(got, expected, "{}", g.label());
        let classes = conjugacy_partition(&g, enumerate_mna(&g));
        assert_eq!(classes.len(), oracle_kappa(&g, &expected), "{}", g.label());
    }
}

/// `(label, α₁, κ₁, t)` frozen from the subset oracle; `t` only for p-groups.
const FROZEN: &[(&str, usize, usize, Option<u32>)] = &[
    ("S3", 1, 1, None),
    ("D8", 1, 1, Some(1)),
    ("Q8", 1, 1, Some(1)),
    ("D12", 2, 2, None),
    ("Dic12", 1, 1, None),
    ("A4", 1, 1, None),
    ("D16", 2, 2, Some(2)),
    ("Q16", 2, 2, Some(2)),
    ("SD16", 2, 2, Some(2)),
    ("M16", 1, 1, Some(1)),
    ("D8 x C2", 4, 4, Some(2)),
    ("Q8 x C2", 4, 4, Some(2)),
    ("C4xC2xC2", 0, 0, Some(0)),
];

#[test]
fn frozen_values_agree_with_oracle() {
    for (g, &(label, alpha, kappa, t)) in small_groups().iter().zip(FROZEN) {
        assert_eq!(g.label(), label);
        let members = oracle_mna(g);
        assert_eq!(members.len(), alpha, "{label}");
        assert_eq!(oracle_kappa(g, &members), kappa, "{label}");
        assert_eq!(g.p_group_prime().map(|_| oracle_at_level(g)), t, "{label}");
    }
}

#[test]
fn frozen_values_agree_with_library() {
    for (g, &(label, alpha, kappa, t)) in small_groups().iter().zip(FROZEN) {
        let members = enumerate_mna(g);
        assert_eq!(members.len(), alpha, "{label}");
        assert_eq!(conjugacy_partition(g, members).len(), kappa, "{label}");
        if let Some(t) = t {
            assert_eq!(at_level(g, 200).unwrap(), t, "{label}");
        }
    }
}

#[test]
fn d16_values() {
    let g = dihedral(16, &lim()).unwrap();
    assert_eq!(conjugacy_partition(&g, enumerate_mna(&g)).len(), 2);
    assert_eq!(at_level(&g, 200).unwrap(), 2);
}
