use std::collections::BTreeSet;

use mna_core::arith;
use mna_core::invariants::{
    coprime_action_decomposition, find_cyclic_quotient_witness, frattini, hall_complement, is_maximal_class,
    maximal_subgroups_p, minimal_generators, omega_1,
};
use mna_core::mna::{conj_class_split_check, conjugacy_partition, enumerate_mna, is_minimal_nonabelian};
use mna_core::{all_subgroups_bruteforce, FiniteGroup, GroupError, Subgroup};

use super::{is_minimal_normal, standalone, CheckResult, Finding, GroupCtx};
use crate::verdict::{Claim, Witness};

fn s(x: &str) -> String {
    x.to_string()
}

fn done(applicable: bool, ok: bool, w: Witness) -> CheckResult {
    Ok(if applicable { Finding::checked(ok, w) } else { Finding::vacuous(w) })
}

fn kappa_alpha(g: &FiniteGroup, h: &Subgroup) -> (usize, usize) {
    let sub = standalone(g, h);
    let members = enumerate_mna(&sub.group);
    (conjugacy_partition(&sub.group, members).len(), members.len())
}

fn non_abelian_p_group(g: &FiniteGroup) -> Option<u64> {
    g.p_group_prime().filter(|_| !g.is_abelian()).map(|(p, _)| p)
}

fn pairwise_meets_abelian(g: &FiniteGroup, maxes: &[Subgroup]) -> bool {
    maxes.iter().enumerate().all(|(i, a)| maxes[i + 1..].iter().all(|b| g.is_abelian_subgroup(&a.meet(b))))
}

/// For `G = G₁ × G₂` with coprime orders, α₁ and κ₁ add up. Every splitting
/// of the prime divisors into two nonempty sets whose element sets are
/// normal subgroups is checked.
pub fn coprime_product_additivity(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let primes = arith::prime_divisors(g.order() as u64);
    let mut applicable = false;
    let mut ok = true;
    let mut rows = Vec::new();
    if primes.len() >= 2 {
        let r = ctx.report()?;
        for mask in 1..(1u32 << (primes.len() - 1)) {
            let (mut pi, mut rest) = (vec![primes[0]], Vec::new());
            for (i, &p) in primes.iter().enumerate().skip(1) {
                if mask >> (i - 1) & 1 == 1 {
                    rest.push(p);
                } else {
                    pi.push(p);
                }
            }
            let (Some(g1), Some(g2)) = (g.pi_elements(&pi), g.pi_elements(&rest)) else {
                continue;
            };
            if !g.is_normal(&g1) || !g.is_normal(&g2) || g1.order() * g2.order() != g.order() {
                continue;
            }
            let (k1, a1) = kappa_alpha(g, &g1);
            let (k2, a2) = kappa_alpha(g, &g2);
            let good = r.alpha1 == a1 + a2 && r.kappa1 == k1 + k2;
            if !applicable {
                let n1 = w.sub("G1", &g1);
                let n2 = w.sub("G2", &g2);
                w.claim(Claim::Normal { sub: n1.clone(), of: s("G") });
                w.claim(Claim::Normal { sub: n2.clone(), of: s("G") });
                w.claim(Claim::Product { a: n1, b: n2, of: s("G") });
            }
            applicable = true;
            ok &= good;
            rows.push(serde_json::json!({
                "primes": [pi, rest], "alpha1": [a1, a2], "kappa1": [k1, k2], "holds": good
            }));
        }
        w.val("alpha1", r.alpha1);
        w.val("kappa1", r.kappa1);
    }
    w.val("splittings", rows);
    done(applicable, ok, w)
}

/// For a non-abelian p-group, `κ₁ = 1` forces minimal non-abelian and
/// `κ₁ > 1` forces `κ₁ ≥ p`.
pub fn p_group_kappa_gap(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let Some(p) = non_abelian_p_group(g) else {
        return done(false, false, w);
    };
    let r = ctx.report()?;
    w.val("p", p);
    w.val("kappa1", r.kappa1);
    let ok = if r.kappa1 == 1 {
        let mna = is_minimal_nonabelian(g, &Subgroup::whole(g));
        if mna {
            w.claim(Claim::MinimalNonabelian { sub: s("G") });
        }
        mna
    } else {
        r.kappa1 as u64 >= p
    };
    done(true, ok, w)
}

/// A non-abelian p-group has 0, 1 or `p + 1` abelian maximal subgroups.
pub fn abelian_maximal_count(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let Some(p) = non_abelian_p_group(g) else {
        return done(false, false, w);
    };
    let abelian: Vec<Subgroup> =
        maximal_subgroups_p(g)?.into_iter().filter(|m| g.is_abelian_subgroup(m)).collect();
    for (i, a) in abelian.iter().enumerate() {
        let n = w.sub(format!("abelian_maximal[{i}]"), a);
        w.claim(Claim::Abelian { sub: n.clone() });
        w.claim(Claim::Order { sub: n, order: g.order() / p as usize });
    }
    let count = abelian.len() as u64;
    w.val("p", p);
    w.val("count", count);
    done(true, count <= 1 || count == p + 1, w)
}

/// In a p-group of order at least `p⁴` the number of non-abelian subgroups
/// of order `p³` is divisible by `p`. Such subgroups are exactly the minimal
/// non-abelian subgroups of order `p³`.
pub fn order_p3_nonabelian_count(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let Some((p, n)) = g.p_group_prime() else {
        return done(false, false, w);
    };
    if n < 4 {
        return done(false, false, w);
    }
    let p3 = (p * p * p) as usize;
    let t3 = ctx.report()?.members.iter().filter(|h| h.order() == p3).count();
    w.val("p", p);
    w.val("t3", t3);
    done(true, (t3 as u64).is_multiple_of(p), w)
}

/// For a p-group: minimal non-abelian ⟺ `d = 2` and `|G′| = p` ⟺ `d = 2`
/// and `Φ = Z`. Checked on `G` when it is a p-group, on its non-abelian
/// Sylow subgroups and on the p-group members of 𝒜₁(G).
pub fn mna_characterization(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let mut subjects: BTreeSet<Subgroup> = BTreeSet::new();
    if g.p_group_prime().is_some() {
        subjects.insert(Subgroup::whole(g));
    }
    for (_, sp) in ctx.sylows() {
        if !g.is_abelian_subgroup(&sp) {
            subjects.insert(sp);
        }
    }
    for orbit in &ctx.report()?.classes.orbits {
        if arith::prime_power(orbit.representative.order() as u64).is_some() {
            subjects.insert(orbit.representative.clone());
        }
    }
    let mut ok = true;
    let mut rows = Vec::new();
    for (i, h) in subjects.iter().enumerate() {
        let x = standalone(g, h).group;
        let (p, _) = x.p_group_prime().expect("p-subgroup");
        let c1 = is_minimal_nonabelian(&x, &Subgroup::whole(&x));
        let d = minimal_generators(&x)?;
        let c2 = d == 2 && x.derived_subgroup().order() as u64 == p;
        let c3 = d == 2 && frattini(&x)? == x.center();
        let good = c1 == c2 && c2 == c3;
        if !good {
            w.sub(format!("counterexample[{i}]"), h);
        }
        ok &= good;
        rows.push(serde_json::json!({"order": h.order(), "d": d, "conditions": [c1, c2, c3]}));
    }
    let applicable = !subjects.is_empty();
    w.val("subjects", rows);
    done(applicable, ok, w)
}

/// A minimal non-abelian p-group with `exp ≤ p²` and cyclic `Φ` has order
/// `p³`. Checked on the p-group members of 𝒜₁(G).
pub fn mna_order_p3(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let mut applicable = false;
    let mut ok = true;
    for (i, orbit) in ctx.report()?.classes.orbits.iter().enumerate() {
        let h = &orbit.representative;
        let Some((p, _)) = arith::prime_power(h.order() as u64) else {
            continue;
        };
        let x = standalone(g, h).group;
        let phi = frattini(&x)?;
        if x.exponent() as u64 > p * p || !x.is_cyclic_subgroup(&phi) {
            continue;
        }
        applicable = true;
        let n = w.sub(format!("member[{i}]"), h);
        w.claim(Claim::MinimalNonabelian { sub: n.clone() });
        w.claim(Claim::Order { sub: n, order: h.order() });
        ok &= h.order() as u64 == p * p * p;
    }
    done(applicable, ok, w)
}

/// For an abelian p-group `P` and `1 < H ≤ P` there is `N ≤ P` with `P/N`
/// cyclic and `|H : H ∩ N| = p`. Checked for every nontrivial subgroup of
/// every abelian Sylow subgroup.
pub fn cyclic_quotient_witness(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let mut applicable = false;
    let mut ok = true;
    let mut checked = 0;
    for (p, sp) in ctx.sylows() {
        if !g.is_abelian_subgroup(&sp) {
            continue;
        }
        let emb = standalone(g, &sp);
        let x = &emb.group;
        let lattice = all_subgroups_bruteforce(x, ctx.limits.oracle_cap)?;
        for h in lattice.iter().filter(|h| !h.is_trivial()) {
            applicable = true;
            checked += 1;
            let n = match find_cyclic_quotient_witness(x, h, ctx.limits.oracle_cap) {
                Ok(n) => n,
                Err(e @ GroupError::CapExceeded { .. }) => return Err(e),
                Err(e) => {
                    ok = false;
                    w.sub("counterexample", &emb.lift(g, h));
                    w.val("error", e.to_string());
                    continue;
                }
            };
            let cyclic_quotient = {
                let q = x.quotient(&n)?.quotient;
                q.is_cyclic_subgroup(&Subgroup::whole(&q))
            };
            let index_p = h.order() as u64 == p * h.meet(&n).order() as u64;
            if !(cyclic_quotient && index_p) {
                ok = false;
                w.sub("counterexample", &emb.lift(g, h));
            }
            if !w.subgroups.contains_key("P") {
                let pn = w.sub("P", &sp);
                let hn = w.sub("H", &emb.lift(g, h));
                let nn = w.sub("N", &emb.lift(g, &n));
                w.val("index", h.order() / h.meet(&n).order());
                w.claim(Claim::Subset { sub: hn, of: pn.clone() });
                w.claim(Claim::CyclicQuotient { sub: nn, of: pn });
            }
        }
    }
    w.val("pairs_checked", checked);
    done(applicable, ok, w)
}

/// For an abelian Sylow `P` and a p′-group `A ≤ N_G(P)`:
/// `P = [P, A] × C_P(A)`. `A` runs over the cyclic p′-subgroups of `N_G(P)`
/// and a complement of `P` in `N_G(P)`.
pub fn coprime_action_splitting(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let mut applicable = false;
    let mut ok = true;
    let mut recorded = false;
    for (p, sp) in ctx.sylows() {
        if !g.is_abelian_subgroup(&sp) {
            continue;
        }
        let n = g.normalizer(&sp);
        let mut actors: Vec<Subgroup> = g
            .cyclic_subgroups()
            .iter()
            .map(|(c, _)| c.clone())
            .filter(|c| !c.is_trivial() && c.is_subgroup_of(&n) && !(c.order() as u64).is_multiple_of(p))
            .collect();
        let ne = standalone(g, &n);
        if let Ok(a) = hall_complement(&ne.group, &ne.restrict(&sp)) {
            if !a.is_trivial() {
                actors.push(ne.lift(g, &a));
            }
        }
        for a in &actors {
            applicable = true;
            match coprime_action_decomposition(g, &sp, a) {
                Ok((comm, cent)) => {
                    if !recorded && !comm.is_trivial() {
                        recorded = true;
                        let pn = w.sub("P", &sp);
                        let an = w.sub("A", a);
                        let cn = w.sub("commutator", &comm);
                        let zn = w.sub("fixed", &cent);
                        w.claim(Claim::Commutator { a: pn.clone(), b: an.clone(), equals: cn.clone() });
                        w.claim(Claim::Centralizer { of: an, within: pn.clone(), equals: zn.clone() });
                        w.claim(Claim::Product { a: cn, b: zn, of: pn });
                    }
                }
                Err(e) => {
                    ok = false;
                    w.sub("counterexample_P", &sp);
                    w.sub("counterexample_A", a);
                    w.val("error", e.to_string());
                }
            }
        }
    }
    done(applicable, ok, w)
}

/// When `G = G′ ⋊ A` with `G′` an abelian p-group and `A` a p′-group:
/// `G′ = [G′, A]` and `C_{G′}(A) = 1`.
pub fn derived_complement_action(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let d = g.derived_subgroup();
    let Some((p, _)) = arith::prime_power(d.order() as u64) else {
        return done(false, false, w);
    };
    if d.is_trivial() || !g.is_abelian_subgroup(&d) || ((g.order() / d.order()) as u64).is_multiple_of(p) {
        return done(false, false, w);
    }
    let a = hall_complement(g, &d)?;
    let comm = g.commutator_subgroup(&d, &a);
    let cent = g.centralizer_of(&a).meet(&d);
    let dn = w.sub("derived", &d);
    let an = w.sub("A", &a);
    let cn = w.sub("commutator", &comm);
    let zn = w.sub("fixed", &cent);
    w.claim(Claim::Product { a: dn.clone(), b: an.clone(), of: s("G") });
    w.claim(Claim::Commutator { a: dn.clone(), b: an.clone(), equals: cn });
    w.claim(Claim::Centralizer { of: an, within: dn, equals: zn });
    done(true, comm == d && cent.is_trivial(), w)
}

/// For `G = (G′ ⋊ Q) × S` with `G′` an abelian p-group, `Q` an abelian
/// q-group and `S` a nontrivial abelian q′-group: 𝒜₁(G) = 𝒜₁(G′Q).
pub fn mna_in_direct_factor(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let d = g.derived_subgroup();
    let Some((p, _)) = arith::prime_power(d.order() as u64) else {
        return done(false, false, w);
    };
    if d.is_trivial() || !g.is_abelian_subgroup(&d) {
        return done(false, false, w);
    }
    let center = g.center();
    let z = standalone(g, &center);
    let z_lattice = all_subgroups_bruteforce(&z.group, ctx.limits.oracle_cap)?;
    for (q, sq) in ctx.sylows() {
        if q == p || !g.is_abelian_subgroup(&sq) {
            continue;
        }
        let b = g.join(&d, &sq);
        if b.order() != d.order() * sq.order() || b.order() == g.order() {
            continue;
        }
        let m = g.order() / b.order();
        let Some(s_sub) =
            z_lattice.iter().map(|x| z.lift(g, x)).find(|x| x.order() == m && x.meet(&b).is_trivial())
        else {
            continue;
        };
        let be = standalone(g, &b);
        let in_b: BTreeSet<Subgroup> = enumerate_mna(&be.group).iter().map(|h| be.lift(g, h)).collect();
        let in_g: BTreeSet<Subgroup> = ctx.report()?.members.iter().cloned().collect();
        let bn = w.sub("B", &b);
        let sn = w.sub("S", &s_sub);
        let qn = w.sub("Q", &sq);
        w.claim(Claim::Abelian { sub: s("derived") });
        w.sub("derived", &d);
        w.claim(Claim::Abelian { sub: qn.clone() });
        w.claim(Claim::Product { a: s("derived"), b: qn, of: bn.clone() });
        w.claim(Claim::Central { sub: sn.clone() });
        w.claim(Claim::Product { a: bn, b: sn, of: s("G") });
        w.val("p", p);
        w.val("q", q);
        w.val("alpha1", in_g.len());
        w.val("alpha1_of_B", in_b.len());
        return done(true, in_b == in_g, w);
    }
    done(false, false, w)
}

/// For `G = P ⋊ Q` (abelian Sylow `p` and `q` subgroups) with `Ω₁(P)`
/// minimal normal: `C_P(a) = 1` for all `a ∈ Q ∖ Z(G)`.
pub fn fixed_point_free_action(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let sylows = ctx.sylows();
    if sylows.len() != 2 {
        return done(false, false, w);
    }
    for (i, j) in [(0, 1), (1, 0)] {
        let (sp, sq) = (&sylows[i].1, &sylows[j].1);
        if !g.is_normal(sp) || !g.is_abelian_subgroup(sp) || !g.is_abelian_subgroup(sq) {
            continue;
        }
        let pe = standalone(g, sp);
        let omega = pe.lift(g, &omega_1(&pe.group)?);
        if !is_minimal_normal(g, &omega) {
            continue;
        }
        let z = g.center();
        let ok = sq.elements().filter(|&a| !z.contains(a)).all(|a| g.centralizer(a).meet(sp).is_trivial());
        let pn = w.sub("P", sp);
        let qn = w.sub("Q", sq);
        let on = w.sub("omega1", &omega);
        let zn = w.sub("Z", &z);
        w.claim(Claim::MinimalNormal { sub: on });
        w.claim(Claim::Center { of: s("G"), equals: zn.clone() });
        w.claim(Claim::Product { a: pn.clone(), b: qn.clone(), of: s("G") });
        if ok {
            w.claim(Claim::FixedPointFree { acting: qn, on: pn, except: Some(zn) });
        }
        w.val("p", sylows[i].0);
        w.val("q", sylows[j].0);
        return done(true, ok, w);
    }
    done(false, false, w)
}

/// For an 𝒜_t p-group (`t ≥ 2`) whose distinct maximal subgroups meet in
/// abelian subgroups: the map sending the class of `H ∈ 𝒜₁(G)` to the
/// maximal subgroup containing `H` is onto the non-abelian maximal
/// subgroups, so `κ₁ ≥ β₁`, with equality exactly when it is injective.
pub fn kappa_beta_bound(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    if non_abelian_p_group(g).is_none() || is_minimal_nonabelian(g, &Subgroup::whole(g)) {
        return done(false, false, w);
    }
    let maxes = maximal_subgroups_p(g)?;
    if !pairwise_meets_abelian(g, &maxes) {
        w.val("pairwise_meets_abelian", false);
        return done(false, false, w);
    }
    let r = ctx.report()?;
    let beta1 = r.beta1.expect("p-group report carries beta1");
    let mut image = Vec::new();
    let mut well_defined = true;
    for orbit in &r.classes.orbits {
        let containing: Vec<usize> =
            (0..maxes.len()).filter(|&i| orbit.representative.is_subgroup_of(&maxes[i])).collect();
        match containing.as_slice() {
            [i] => image.push(*i),
            _ => well_defined = false,
        }
    }
    let distinct: BTreeSet<usize> = image.iter().copied().collect();
    let non_abelian: BTreeSet<usize> =
        (0..maxes.len()).filter(|&i| !g.is_abelian_subgroup(&maxes[i])).collect();
    let onto = distinct == non_abelian;
    let injective = distinct.len() == image.len();
    w.val("kappa1", r.kappa1);
    w.val("beta1", beta1);
    w.val("map_well_defined", well_defined);
    w.val("map_onto", onto);
    w.val("map_injective", injective);
    let ok = well_defined && onto && r.kappa1 >= beta1 && ((r.kappa1 == beta1) == injective);
    done(true, ok, w)
}

/// For `H ≤ M ⋖ G` in a p-group with `Conj(G,H) ≠ Conj(M,H)`: the G-class
/// is `p` times larger and splits into exactly `p` M-classes. Checked for
/// every subgroup and every maximal subgroup containing it.
pub fn class_splitting(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    if g.p_group_prime().is_none() {
        return done(false, false, w);
    }
    let lattice = ctx.lattice()?;
    let maxes = maximal_subgroups_p(g)?;
    let mut applicable_cases = 0;
    let mut ok = true;
    for h in lattice {
        for m in maxes.iter().filter(|m| h.is_subgroup_of(m)) {
            let r = conj_class_split_check(g, m, h)?;
            if !r.applicable {
                continue;
            }
            applicable_cases += 1;
            if applicable_cases == 1 || !r.holds {
                let key = if r.holds { "" } else { "counterexample_" };
                w.sub(format!("{key}H"), h);
                w.sub(format!("{key}M"), m);
                w.val(&format!("{key}sizes"), [r.g_class, r.m_class, r.m_classes]);
            }
            ok &= r.holds;
        }
    }
    w.val("applicable_cases", applicable_cases);
    done(applicable_cases > 0, ok, w)
}

fn maximal_kappas(g: &FiniteGroup, maxes: &[Subgroup]) -> Vec<usize> {
    maxes.iter().map(|m| kappa_alpha(g, m).0).collect()
}

/// In a p-group whose maximal subgroups meet pairwise in abelian subgroups,
/// `κ₁ = β₁` implies `κ₁(M) ≤ p` for every maximal `M`.
pub fn maximal_kappa_bound(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let Some((p, _)) = g.p_group_prime() else {
        return done(false, false, w);
    };
    let maxes = maximal_subgroups_p(g)?;
    if !pairwise_meets_abelian(g, &maxes) {
        return done(false, false, w);
    }
    let r = ctx.report()?;
    let beta1 = r.beta1.expect("p-group report carries beta1");
    w.val("kappa1", r.kappa1);
    w.val("beta1", beta1);
    if r.kappa1 != beta1 {
        return done(false, false, w);
    }
    let kappas = maximal_kappas(g, &maxes);
    w.val("maximal_kappa1", &kappas);
    done(true, kappas.iter().all(|&k| k as u64 <= p), w)
}

/// In a p-group with `κ₁ ≤ p`, every maximal subgroup has `κ₁ ≤ p`.
pub fn kappa_heredity(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let Some((p, _)) = g.p_group_prime() else {
        return done(false, false, w);
    };
    let r = ctx.report()?;
    w.val("kappa1", r.kappa1);
    if r.kappa1 as u64 > p {
        return done(false, false, w);
    }
    let kappas = maximal_kappas(g, &maximal_subgroups_p(g)?);
    w.val("maximal_kappa1", &kappas);
    done(true, kappas.iter().all(|&k| k as u64 <= p), w)
}

/// Abelian maximal subgroups of a maximal-class p-group, or `None` when the
/// hypotheses of the maximal-class lemmas fail.
fn maximal_class_with_abelian(g: &FiniteGroup) -> Result<Option<Vec<Subgroup>>, GroupError> {
    if !is_maximal_class(g) {
        return Ok(None);
    }
    let abelian: Vec<Subgroup> =
        maximal_subgroups_p(g)?.into_iter().filter(|m| g.is_abelian_subgroup(m)).collect();
    Ok((!abelian.is_empty()).then_some(abelian))
}

/// A maximal-class p-group with an abelian maximal subgroup has all its
/// non-abelian subgroups of maximal class.
pub fn maximal_class_heredity(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let Some(abelian) = maximal_class_with_abelian(g)? else {
        return done(false, false, w);
    };
    w.sub("A", &abelian[0]);
    w.claim(Claim::MaximalClass { sub: s("G") });
    w.claim(Claim::Abelian { sub: s("A") });
    let mut ok = true;
    let mut checked = 0;
    for h in ctx.lattice()?.iter().filter(|h| !g.is_abelian_subgroup(h)) {
        checked += 1;
        if !is_maximal_class(&standalone(g, h).group) {
            ok = false;
            let n = w.sub("counterexample", h);
            w.claim(Claim::NonAbelian { sub: n });
            break;
        }
    }
    w.val("non_abelian_subgroups", checked);
    done(true, ok, w)
}

/// In a maximal-class p-group with an abelian maximal subgroup `A`, every
/// proper `H ≰ A` has `|N_G(H) : H| = p`.
pub fn normalizer_index(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let Some(abelian) = maximal_class_with_abelian(g)? else {
        return done(false, false, w);
    };
    let (p, _) = g.p_group_prime().expect("maximal class implies p-group");
    let lattice = ctx.lattice()?;
    let mut ok = true;
    let mut checked = 0;
    for (i, a) in abelian.iter().enumerate() {
        w.sub(format!("A[{i}]"), a);
        for h in lattice.iter().filter(|h| !h.is_whole(g) && !h.is_subgroup_of(a)) {
            checked += 1;
            let index = g.normalizer(h).order() / h.order();
            if index as u64 != p {
                ok = false;
                let n = w.sub("counterexample", h);
                w.claim(Claim::NormalizerIndex { sub: n, index });
            }
        }
    }
    w.val("p", p);
    w.val("pairs_checked", checked);
    done(true, ok, w)
}

/// A non-abelian 2-generated p-group with an abelian maximal subgroup has
/// `G/Z(G)` of maximal class and `Z(M) = Z(G)` for each non-abelian maximal
/// `M`.
pub fn two_generator_central_quotient(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    if non_abelian_p_group(g).is_none() || minimal_generators(g)? != 2 {
        return done(false, false, w);
    }
    let maxes = maximal_subgroups_p(g)?;
    let Some(a) = maxes.iter().find(|m| g.is_abelian_subgroup(m)) else {
        return done(false, false, w);
    };
    let an = w.sub("A", a);
    w.claim(Claim::Abelian { sub: an });
    w.claim(Claim::Generators { sub: s("G"), d: 2 });
    let z = g.center();
    let zn = w.sub("Z", &z);
    let quotient_max_class = is_maximal_class(&g.quotient(&z)?.quotient);
    w.val("quotient_maximal_class", quotient_max_class);
    if quotient_max_class {
        w.claim(Claim::QuotientMaximalClass { by: zn.clone() });
    }
    let mut ok = quotient_max_class;
    for (i, m) in maxes.iter().filter(|m| !g.is_abelian_subgroup(m)).enumerate() {
        let same = g.center_of(m) == z;
        let mn = w.sub(format!("M[{i}]"), m);
        if same {
            w.claim(Claim::Center { of: mn, equals: zn.clone() });
        }
        ok &= same;
    }
    done(true, ok, w)
}
