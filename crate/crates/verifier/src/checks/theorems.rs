use mna_core::arith;
use mna_core::invariants::{
    at_level, hall_complement, is_homocyclic, is_solvable, maximal_subgroups_p, minimal_generators, omega_1,
};
use mna_core::mna::{
    action_transitivity, is_fermat_prime, is_mersenne_prime, is_minimal_nonabelian, miller_moreno_decompose,
    mna_report, TransitivityKind,
};
use mna_core::{all_subgroups_bruteforce, GroupError, Subgroup};

use super::{is_minimal_normal, standalone, CheckResult, Finding, GroupCtx};
use crate::verdict::{Claim, Witness};

fn s(x: &str) -> String {
    x.to_string()
}

/// Every non-nilpotent minimal non-abelian subgroup splits as an elementary
/// abelian Sylow `p` derived subgroup by a cyclic Sylow `q`.
pub fn miller_moreno(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let r = ctx.report()?;
    let mut w = Witness::default();
    let mut applicable = false;
    let mut ok = true;
    let mut split_classes = 0;
    for (i, orbit) in r.classes.orbits.iter().enumerate() {
        for h in &orbit.members {
            match miller_moreno_decompose(g, h) {
                Ok(None) => {}
                Ok(Some(shape)) => {
                    applicable = true;
                    if *h != orbit.representative {
                        continue;
                    }
                    split_classes += 1;
                    let m = w.sub(format!("member[{i}]"), h);
                    let k = w.sub(format!("kernel[{i}]"), &shape.kernel);
                    let c = w.sub(format!("complement[{i}]"), &shape.complement);
                    w.val(&format!("primes[{i}]"), [shape.p, shape.q]);
                    w.claim(Claim::MinimalNonabelian { sub: m.clone() });
                    w.claim(Claim::Normal { sub: k.clone(), of: m.clone() });
                    w.claim(Claim::Abelian { sub: k.clone() });
                    w.claim(Claim::Exponent { sub: k.clone(), exponent: shape.p as usize });
                    w.claim(Claim::Cyclic { sub: c.clone() });
                    w.claim(Claim::Order {
                        sub: c.clone(),
                        order: arith::p_part(h.order() as u64, shape.q) as usize,
                    });
                    w.claim(Claim::Product { a: k, b: c, of: m });
                }
                Err(e) => {
                    applicable = true;
                    ok = false;
                    w.sub("counterexample", h);
                    w.val("error", e.to_string());
                }
            }
        }
    }
    w.val("split_classes", split_classes);
    Ok(if applicable { Finding::checked(ok, w) } else { Finding::vacuous(w) })
}

/// `G = K ⋊ A` with `K` the π₁-elements and `A` an abelian complement; also
/// the single-prime case when `κ₁ = 1`, solvability when `κ₁ ≤ 2`, and at
/// most two primes when all minimal non-abelian subgroups share an order.
pub fn pi1_decomposition(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let r = ctx.report()?;
    let mut w = Witness::default();
    let pi: Vec<u64> = r.pi1.iter().copied().collect();
    w.val("pi1", &pi);
    w.val("kappa1", r.kappa1);
    if g.is_abelian() {
        return Ok(Finding::vacuous(w));
    }
    let Some(k) = g.pi_elements(&pi) else {
        w.val("failure", "the pi1-elements do not form a subgroup");
        return Ok(Finding::checked(false, w));
    };
    let hall_order: u64 = pi.iter().map(|&p| arith::p_part(g.order() as u64, p)).product();
    let kn = w.sub("K", &k);
    w.claim(Claim::Order { sub: kn.clone(), order: hall_order as usize });
    let mut ok = k.order() as u64 == hall_order;
    if !g.is_normal(&k) {
        w.val("failure", "K is not normal");
        return Ok(Finding::checked(false, w));
    }
    w.claim(Claim::Normal { sub: kn.clone(), of: s("G") });
    let quotient_abelian = g.quotient(&k)?.quotient.is_abelian();
    w.val("quotient_abelian", quotient_abelian);
    ok &= quotient_abelian;
    match hall_complement(g, &k) {
        Ok(a) => {
            let an = w.sub("A", &a);
            w.claim(Claim::Abelian { sub: an.clone() });
            w.claim(Claim::Product { a: kn, b: an, of: s("G") });
            ok &= g.is_abelian_subgroup(&a);
        }
        Err(e) => {
            w.val("complement_error", e.to_string());
            ok = false;
        }
    }
    if r.kappa1 == 1 {
        w.val("single_prime", pi.len() == 1);
        ok &= pi.len() == 1;
    }
    if r.kappa1 <= 2 {
        let solvable = is_solvable(g);
        w.val("solvable", solvable);
        ok &= solvable;
    }
    let first = r.members[0].order();
    if r.members.iter().all(|h| h.order() == first) {
        w.val("equal_member_orders", true);
        ok &= pi.len() <= 2;
    }
    Ok(Finding::checked(ok, w))
}

/// With a non-abelian Sylow subgroup, `κ₁ = 1` exactly when `α₁ = 1`.
pub fn kappa1_alpha1(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let Some((p, sp)) = ctx.sylows().into_iter().find(|(_, s)| !g.is_abelian_subgroup(s)) else {
        return Ok(Finding::vacuous(w));
    };
    let r = ctx.report()?;
    let name = w.sub("P", &sp);
    w.claim(Claim::NonAbelian { sub: name.clone() });
    w.claim(Claim::Order { sub: name, order: arith::p_part(g.order() as u64, p) as usize });
    w.val("p", p);
    w.val("kappa1", r.kappa1);
    w.val("alpha1", r.alpha1);
    Ok(Finding::checked((r.kappa1 == 1) == (r.alpha1 == 1), w))
}

fn abelian_sylows_kappa_one(ctx: &GroupCtx, w: &mut Witness) -> Result<bool, GroupError> {
    let all_abelian = ctx.sylows().iter().all(|(_, s)| ctx.g.is_abelian_subgroup(s));
    w.val("sylows_abelian", all_abelian);
    if !all_abelian {
        return Ok(false);
    }
    let r = ctx.report()?;
    w.val("kappa1", r.kappa1);
    w.val("alpha1", r.alpha1);
    Ok(r.kappa1 == 1)
}

/// `G = (G′ ⋊ Q) × S` with `G′` homocyclic, `Ω₁(G′)` minimal normal, `Q`
/// a cyclic Sylow `q` and `S ≤ Z(G)`.
pub fn abelian_sylow_structure(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    if !abelian_sylows_kappa_one(ctx, &mut w)? {
        return Ok(Finding::vacuous(w));
    }
    let d = g.derived_subgroup();
    let dn = w.sub("derived", &d);
    let Some((p, _)) = arith::prime_power(d.order() as u64) else {
        w.val("failure", "derived subgroup is not a p-group");
        return Ok(Finding::checked(false, w));
    };
    w.val("p", p);
    let emb = standalone(g, &d);
    let homo = is_homocyclic(&emb.group);
    w.val("homocyclic", homo);
    if homo.is_some() {
        w.claim(Claim::Homocyclic { sub: dn.clone() });
    }
    let omega = emb.lift(g, &omega_1(&emb.group)?);
    let on = w.sub("omega1", &omega);
    let min_normal = is_minimal_normal(g, &omega);
    w.val("omega1_minimal_normal", min_normal);
    if min_normal {
        w.claim(Claim::MinimalNormal { sub: on.clone() });
    }
    w.claim(Claim::Subset { sub: on, of: dn.clone() });

    let center = g.center();
    let mut found = None;
    for (q, sq) in ctx.sylows() {
        if q == p || !g.is_cyclic_subgroup(&sq) {
            continue;
        }
        let b = g.join(&d, &sq);
        if b.order() != d.order() * sq.order() {
            continue;
        }
        let m = g.order() / b.order();
        let z = standalone(g, &center);
        let lattice = all_subgroups_bruteforce(&z.group, ctx.limits.oracle_cap)?;
        let s_found =
            lattice.iter().map(|s| z.lift(g, s)).find(|s| s.order() == m && s.meet(&b).is_trivial());
        if let Some(s_sub) = s_found {
            found = Some((q, sq, b, s_sub));
            break;
        }
    }
    let Some((q, sq, b, s_sub)) = found else {
        w.val("failure", "no witness pair (Q, S)");
        return Ok(Finding::checked(false, w));
    };
    w.val("q", q);
    let qn = w.sub("Q", &sq);
    let bn = w.sub("B", &b);
    let sn = w.sub("S", &s_sub);
    w.claim(Claim::Cyclic { sub: qn.clone() });
    w.claim(Claim::Order { sub: qn.clone(), order: arith::p_part(g.order() as u64, q) as usize });
    w.claim(Claim::Product { a: dn, b: qn, of: bn.clone() });
    w.claim(Claim::Central { sub: sn.clone() });
    w.claim(Claim::Product { a: bn, b: sn, of: s("G") });
    Ok(Finding::checked(homo.is_some() && min_normal, w))
}

/// `G/Z(G)` has `κ₁ = 1` and is Frobenius with homocyclic kernel and cyclic
/// complement; under 2-transitivity on 𝒜₁(G) the primes are Fermat/Mersenne.
pub fn frobenius_quotient(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    if !abelian_sylows_kappa_one(ctx, &mut w)? {
        return Ok(Finding::vacuous(w));
    }
    let z = g.center();
    w.sub("Z", &z);
    let quo = g.quotient(&z)?;
    let gb = &quo.quotient;
    let rb = mna_report(gb)?;
    w.val("quotient_kappa1", rb.kappa1);
    let mut ok = rb.kappa1 == 1;

    let kb = gb.derived_subgroup();
    let homo = is_homocyclic(&gb.subgroup_group(&kb).group);
    w.val("kernel_homocyclic", homo);
    ok &= homo.is_some();
    let p = arith::prime_power(kb.order() as u64).map(|(p, _)| p);
    let cb = match hall_complement(gb, &kb) {
        Ok(c) => c,
        Err(e) => {
            w.val("failure", format!("no complement to the kernel: {e}"));
            return Ok(Finding::checked(false, w));
        }
    };
    let q = arith::prime_power(cb.order() as u64).map(|(q, _)| q);
    let complement_cyclic = gb.is_cyclic_subgroup(&cb) && q.is_some();
    w.val("complement_cyclic", complement_cyclic);
    ok &= complement_cyclic;
    let frobenius = mna_core::mna::is_frobenius(gb, &kb, &cb)?;
    w.val("frobenius", frobenius);
    ok &= frobenius;
    let kn = w.sub("kernel", &quo.preimage(g, &kb));
    let cn = w.sub("complement", &quo.preimage(g, &cb));
    if frobenius {
        w.claim(Claim::FrobeniusModCenter { kernel: kn, complement: cn });
    }
    w.val("p", p);
    w.val("q", q);

    let t = action_transitivity(g, &ctx.report()?.members)?;
    w.val("transitivity", t.kind);
    w.val("transitivity_vacuous", t.vacuous);
    if t.kind == TransitivityKind::TwoTransitive && !t.vacuous {
        let (p, q) = (p.unwrap_or(0), q.unwrap_or(0));
        let fermat = q == 2 && is_fermat_prime(p);
        let mersenne = p == 2 && is_mersenne_prime(q);
        w.val("fermat_case", fermat);
        w.val("mersenne_case", mersenne);
        ok &= fermat || mersenne;
    }
    Ok(Finding::checked(ok, w))
}

/// For an 𝒜_t p-group with `t ≥ 2`: `κ₁ = p` exactly when there is an
/// abelian maximal subgroup and every non-abelian subgroup is 2-generated.
/// When `κ₁ = p`, also `α₁ = p^{t−1}` with every class of size `p^{t−2}`.
pub fn kappa1_equals_p(ctx: &GroupCtx) -> CheckResult {
    let g = &ctx.g;
    let mut w = Witness::default();
    let Some((p, _)) = g.p_group_prime() else {
        return Ok(Finding::vacuous(w));
    };
    if g.is_abelian() || is_minimal_nonabelian(g, &Subgroup::whole(g)) {
        w.val("p", p);
        return Ok(Finding::vacuous(w));
    }
    let lattice = ctx.lattice()?;
    let r = ctx.report()?;
    let t = at_level(g, ctx.limits.oracle_cap)?;
    w.val("p", p);
    w.val("t", t);
    w.val("kappa1", r.kappa1);
    w.val("alpha1", r.alpha1);
    w.val("class_sizes", r.classes.sizes());

    let abelian_max = maximal_subgroups_p(g)?.into_iter().find(|m| g.is_abelian_subgroup(m));
    if let Some(a) = &abelian_max {
        let an = w.sub("abelian_maximal", a);
        w.claim(Claim::Abelian { sub: an.clone() });
        w.claim(Claim::Order { sub: an, order: g.order() / p as usize });
    }
    let mut not_two_generated = None;
    for h in lattice.iter().filter(|h| !g.is_abelian_subgroup(h)) {
        let d = minimal_generators(&standalone(g, h).group)?;
        if d != 2 {
            not_two_generated = Some((h, d));
            break;
        }
    }
    if let Some((h, d)) = not_two_generated {
        let hn = w.sub("not_two_generated", h);
        w.claim(Claim::NonAbelian { sub: hn.clone() });
        w.claim(Claim::Generators { sub: hn, d });
    }
    let left = r.kappa1 as u64 == p;
    let right = abelian_max.is_some() && not_two_generated.is_none();
    w.val("kappa1_is_p", left);
    w.val("structure_holds", right);
    let mut ok = left == right;
    if left {
        let alpha_expected = p.pow(t - 1) as usize;
        let size_expected = p.pow(t - 2) as usize;
        w.val("alpha1_expected", alpha_expected);
        w.val("class_size_expected", size_expected);
        ok &= r.alpha1 == alpha_expected;
        ok &= r.classes.sizes().iter().all(|&s| s == size_expected);
    }
    Ok(Finding::checked(ok, w))
}
