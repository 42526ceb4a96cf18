//! Theorem and lemma checks. Each check decides whether its hypotheses hold
//! on the group, verifies the conclusion when they do, and records a
//! replayable witness either way.

mod lemmas;
mod theorems;

use std::sync::OnceLock;
use std::time::Instant;

use mna_core::arith;
use mna_core::invariants::sylow_subgroup;
use mna_core::mna::{mna_report, MnaReport};
use mna_core::{all_subgroups_bruteforce, Embedded, FiniteGroup, GroupError, Limits, Subgroup};

use crate::ids::CheckId;
use crate::verdict::{Outcome, TheoremVerdict, Witness};

/// A group under verification together with lazily computed shared data.
pub struct GroupCtx {
    pub name: String,
    pub descriptor: String,
    pub g: FiniteGroup,
    pub limits: Limits,
    report: OnceLock<Result<MnaReport, GroupError>>,
}

impl GroupCtx {
    pub fn new(name: String, descriptor: String, g: FiniteGroup, limits: Limits) -> Self {
        Self { name, descriptor, g, limits, report: OnceLock::new() }
    }

    pub fn report(&self) -> Result<&MnaReport, GroupError> {
        self.report.get_or_init(|| mna_report(&self.g)).as_ref().map_err(Clone::clone)
    }

    pub fn lattice(&self) -> Result<&[Subgroup], GroupError> {
        all_subgroups_bruteforce(&self.g, self.limits.oracle_cap)
    }

    pub fn sylows(&self) -> Vec<(u64, Subgroup)> {
        arith::prime_divisors(self.g.order() as u64)
            .into_iter()
            .map(|p| (p, sylow_subgroup(&self.g, p)))
            .collect()
    }
}

pub struct Finding {
    pub applicable: bool,
    pub passed: bool,
    pub witness: Witness,
}

impl Finding {
    pub fn vacuous(witness: Witness) -> Self {
        Self { applicable: false, passed: false, witness }
    }

    pub fn checked(passed: bool, witness: Witness) -> Self {
        Self { applicable: true, passed, witness }
    }
}

pub type CheckResult = Result<Finding, GroupError>;

/// `h` as a group in its own right.
pub fn standalone(g: &FiniteGroup, h: &Subgroup) -> Embedded {
    g.subgroup_group(h)
}

/// Non-trivial, normal, and generated as a normal subgroup by any of its
/// non-identity elements.
pub fn is_minimal_normal(g: &FiniteGroup, n: &Subgroup) -> bool {
    !n.is_trivial()
        && g.is_normal(n)
        && n.elements().filter(|&x| x != g.identity()).all(|x| g.normal_closure(g.generators(), &[x]) == *n)
}

fn dispatch(ctx: &GroupCtx, id: CheckId) -> CheckResult {
    use CheckId::*;
    match id {
        MillerMoreno => theorems::miller_moreno(ctx),
        Pi1Decomposition => theorems::pi1_decomposition(ctx),
        Kappa1Alpha1 => theorems::kappa1_alpha1(ctx),
        AbelianSylowStructure => theorems::abelian_sylow_structure(ctx),
        FrobeniusQuotient => theorems::frobenius_quotient(ctx),
        Kappa1EqualsP => theorems::kappa1_equals_p(ctx),
        CoprimeProductAdditivity => lemmas::coprime_product_additivity(ctx),
        PGroupKappaGap => lemmas::p_group_kappa_gap(ctx),
        AbelianMaximalCount => lemmas::abelian_maximal_count(ctx),
        OrderP3NonabelianCount => lemmas::order_p3_nonabelian_count(ctx),
        MnaCharacterization => lemmas::mna_characterization(ctx),
        MnaOrderP3 => lemmas::mna_order_p3(ctx),
        CyclicQuotientWitness => lemmas::cyclic_quotient_witness(ctx),
        CoprimeActionSplitting => lemmas::coprime_action_splitting(ctx),
        DerivedComplementAction => lemmas::derived_complement_action(ctx),
        MnaInDirectFactor => lemmas::mna_in_direct_factor(ctx),
        FixedPointFreeAction => lemmas::fixed_point_free_action(ctx),
        KappaBetaBound => lemmas::kappa_beta_bound(ctx),
        ClassSplitting => lemmas::class_splitting(ctx),
        MaximalKappaBound => lemmas::maximal_kappa_bound(ctx),
        KappaHeredity => lemmas::kappa_heredity(ctx),
        MaximalClassHeredity => lemmas::maximal_class_heredity(ctx),
        NormalizerIndex => lemmas::normalizer_index(ctx),
        TwoGeneratorCentralQuotient => lemmas::two_generator_central_quotient(ctx),
    }
}

/// Runs one check. Cap refusals become `not_computed`; any other error is a
/// failure whose message is kept in the witness.
pub fn run_check(ctx: &GroupCtx, id: CheckId) -> TheoremVerdict {
    let start = Instant::now();
    let (applicable, passed, witness) = match dispatch(ctx, id) {
        Ok(f) if !f.applicable => (false, Outcome::Vacuous, f.witness),
        Ok(f) => (true, if f.passed { Outcome::Pass } else { Outcome::Fail }, f.witness),
        Err(e @ GroupError::CapExceeded { .. }) => {
            let mut w = Witness::default();
            w.val("reason", e.to_string());
            (false, Outcome::NotComputed, w)
        }
        Err(e) => {
            let mut w = Witness::default();
            w.val("error", e.to_string());
            (true, Outcome::Fail, w)
        }
    };
    TheoremVerdict {
        group: ctx.name.clone(),
        descriptor: ctx.descriptor.clone(),
        theorem_id: id,
        applicable,
        passed,
        witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}
