//! Independent re-validation of witnesses against a freshly built group.

use mna_core::invariants::{is_homocyclic, is_maximal_class, minimal_generators};
use mna_core::mna::{is_frobenius, is_minimal_nonabelian};
use mna_core::{FiniteGroup, Subgroup};

use crate::checks::is_minimal_normal;
use crate::verdict::{Claim, TheoremVerdict, Witness};

/// Checks that every named subgroup is a subgroup of `g` and that every
/// claim holds. Returns the first problem found.
pub fn replay_witness(g: &FiniteGroup, w: &Witness) -> Result<(), String> {
    for name in w.subgroups.keys() {
        w.resolve(g, name)?;
    }
    for (i, c) in w.claims.iter().enumerate() {
        if !check_claim(g, w, c)? {
            return Err(format!("claim {i} does not hold: {c:?}"));
        }
    }
    Ok(())
}

pub fn replay_verdict(g: &FiniteGroup, v: &TheoremVerdict) -> Result<(), String> {
    replay_witness(g, &v.witness).map_err(|e| format!("{} / {}: {e}", v.group, v.theorem_id))
}

fn standalone(g: &FiniteGroup, h: &Subgroup) -> FiniteGroup {
    g.subgroup_group(h).group
}

fn check_claim(g: &FiniteGroup, w: &Witness, c: &Claim) -> Result<bool, String> {
    let r = |name: &str| w.resolve(g, name);
    Ok(match c {
        Claim::Normal { sub, of } => {
            let (h, k) = (r(sub)?, r(of)?);
            h.is_subgroup_of(&k) && g.is_normalized_by(&h, &k.to_vec())
        }
        Claim::Abelian { sub } => g.is_abelian_subgroup(&r(sub)?),
        Claim::NonAbelian { sub } => !g.is_abelian_subgroup(&r(sub)?),
        Claim::Cyclic { sub } => g.is_cyclic_subgroup(&r(sub)?),
        Claim::Central { sub } => r(sub)?.is_subgroup_of(&g.center()),
        Claim::Order { sub, order } => r(sub)?.order() == *order,
        Claim::Subset { sub, of } => r(sub)?.is_subgroup_of(&r(of)?),
        Claim::Exponent { sub, exponent } => standalone(g, &r(sub)?).exponent() == *exponent,
        Claim::Equal { a, b } => r(a)? == r(b)?,
        Claim::TrivialMeet { a, b } => r(a)?.meet(&r(b)?).is_trivial(),
        Claim::Product { a, b, of } => {
            let (a, b, of) = (r(a)?, r(b)?, r(of)?);
            a.is_subgroup_of(&of)
                && b.is_subgroup_of(&of)
                && a.meet(&b).is_trivial()
                && a.order() * b.order() == of.order()
        }
        Claim::MinimalNonabelian { sub } => is_minimal_nonabelian(g, &r(sub)?),
        Claim::MinimalNormal { sub } => is_minimal_normal(g, &r(sub)?),
        Claim::Homocyclic { sub } => is_homocyclic(&standalone(g, &r(sub)?)).is_some(),
        Claim::Generators { sub, d } => {
            let x = standalone(g, &r(sub)?);
            minimal_generators(&x).map_err(|e| e.to_string())? == *d
        }
        Claim::MaximalClass { sub } => is_maximal_class(&standalone(g, &r(sub)?)),
        Claim::NormalizerIndex { sub, index } => {
            let h = r(sub)?;
            g.normalizer(&h).order() == index * h.order()
        }
        Claim::FixedPointFree { acting, on, except } => {
            let (a, p) = (r(acting)?, r(on)?);
            let skip = match except {
                Some(e) => r(e)?,
                None => Subgroup::trivial(g),
            };
            let ok =
                a.elements().filter(|&x| !skip.contains(x)).all(|x| g.centralizer(x).meet(&p).is_trivial());
            ok
        }
        Claim::Centralizer { of, within, equals } => {
            g.centralizer_of(&r(of)?).meet(&r(within)?) == r(equals)?
        }
        Claim::Commutator { a, b, equals } => g.commutator_subgroup(&r(a)?, &r(b)?) == r(equals)?,
        Claim::Center { of, equals } => g.center_of(&r(of)?) == r(equals)?,
        Claim::QuotientMaximalClass { by } => {
            let n = r(by)?;
            match g.quotient(&n) {
                Ok(q) => is_maximal_class(&q.quotient),
                Err(_) => false,
            }
        }
        Claim::CyclicQuotient { sub, of } => {
            let (n, x) = (r(sub)?, r(of)?);
            let xe = g.subgroup_group(&x);
            n.is_subgroup_of(&x)
                && match xe.group.quotient(&xe.restrict(&n)) {
                    Ok(q) => q.quotient.is_cyclic_subgroup(&Subgroup::whole(&q.quotient)),
                    Err(_) => false,
                }
        }
        Claim::FrobeniusModCenter { kernel, complement } => {
            let (k, c) = (r(kernel)?, r(complement)?);
            let z = g.center();
            if !z.is_subgroup_of(&k) || !z.is_subgroup_of(&c) {
                return Ok(false);
            }
            let q = g.quotient(&z).map_err(|e| e.to_string())?;
            is_frobenius(&q.quotient, &q.image(&k), &q.image(&c)).unwrap_or(false)
        }
    })
}

/// Rebuilds every group of a verdict document from its descriptor and
/// replays all witnesses. Returns one message per problem.
pub fn replay_document(
    doc: &crate::run::VerdictDocument,
    base_dir: &std::path::Path,
) -> Result<Vec<String>, crate::parse::InputError> {
    let limits = mna_core::Limits { max_order: doc.caps.max_order, oracle_cap: doc.caps.oracle_cap };
    let mut problems = Vec::new();
    for rec in doc.groups.iter().filter(|r| r.refused.is_none()) {
        let d = crate::parse::parse_descriptor(&rec.descriptor)?;
        let g = crate::parse::build(&d, &limits, base_dir)?;
        if Some(g.order()) != rec.order {
            problems.push(format!("{}: rebuilt group has order {}", rec.name, g.order()));
            continue;
        }
        for v in doc.verdicts.iter().filter(|v| v.group == rec.name) {
            if v.passed == crate::verdict::Outcome::Pass && !v.applicable {
                problems.push(format!("{} / {}: passed without being applicable", v.group, v.theorem_id));
            }
            if let Err(e) = replay_verdict(&g, v) {
                problems.push(e);
            }
        }
    }
    Ok(problems)
}
