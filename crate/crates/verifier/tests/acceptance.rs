//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use serde_json::Value;

use mna_core::invariants::at_level;
use mna_core::mna::{enumerate_mna, mna_report, pi1};
use mna_core::{all_subgroups_bruteforce, FiniteGroup, Limits, Subgroup};
use mna_verify::ids::{parse_selection, CheckId};
use mna_verify::parse::parse_group;
use mna_verify::report::to_json;
use mna_verify::{run, CorpusSpec, Outcome, TheoremVerdict, VerdictDocument};

const A5: &str = "perm(5){(0 1 2 3 4), (0 1 2)}";
const EXAMPLE72: &str = "semidirect(abelian[3,3], 8, action{a->b, b->a*b})";

fn corpus_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/default.txt")
}

fn spec(limits: Limits, checks: &str) -> CorpusSpec {
    CorpusSpec::from_corpus_file(&corpus_path(), limits, parse_selection(checks).unwrap()).unwrap()
}

fn group(src: &str) -> FiniteGroup {
    parse_group(src, &Limits::default(), Path::new(".")).unwrap()
}

fn value<'a>(v: &'a TheoremVerdict, key: &str) -> &'a Value {
    v.witness.values.get(key).unwrap_or(&Value::Null)
}

type Criterion = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Criterion {
    let start = Instant::now();
    let g = group(A5);
    let r = mna_report(&g).map_err(|e| e.to_string())?;
    let primes = pi1(&g).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(g.order() == 60, format!("order {}", g.order()))?;
    ensure(r.kappa1 == 3, format!("kappa1(A5) = {}", r.kappa1))?;
    ensure(primes == BTreeSet::from([2, 3, 5]), format!("pi1(A5) = {primes:?}"))?;
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    Ok(format!("kappa1(A5)=3, pi1={primes:?}, alpha1={}, {elapsed:.2?}", r.alpha1))
}

fn criterion_2() -> Criterion {
    let g = group(EXAMPLE72);
    let r = mna_report(&g).map_err(|e| e.to_string())?;
    ensure(r.alpha1 == 12 && r.kappa1 == 1, format!("alpha1={} kappa1={}", r.alpha1, r.kappa1))?;
    // c is element 1; a is the first base generator, at index 3·8.
    let (a, c) = (24, 1);
    ensure(g.elem_order(a) == 3 && g.elem_order(c) == 8, "generator orders")?;
    let h = g.closure(&[a, g.pow(c, 4)]).map_err(|e| e.to_string())?;
    let n = g.normalizer(&h);
    ensure(r.members.contains(&h), "<a,c^4> is not minimal non-abelian")?;
    ensure(n == h, format!("|N(H)| = {} but |H| = {}", n.order(), h.order()))?;
    let index = g.order() / n.order();
    ensure(index == 12, format!("index {index}"))?;
    Ok(format!("alpha1=12, kappa1=1, N(<a,c^4>)=<a,c^4> of order {}, index {index}", h.order()))
}

fn criterion_3(doc: &VerdictDocument) -> Criterion {
    let mut notes = Vec::new();
    for (name, order, case) in [("Fermat5", 100, "fermat_case"), ("Mersenne3", 48, "mersenne_case")] {
        let rec = doc.groups.iter().find(|r| r.name == name).ok_or(format!("{name} missing"))?;
        ensure(rec.order == Some(order), format!("{name} order {:?}", rec.order))?;
        let v = doc.verdict(name, CheckId::FrobeniusQuotient).ok_or("missing verdict")?;
        ensure(v.passed == Outcome::Pass, format!("{name}: frobenius-quotient {:?}", v.passed))?;
        ensure(value(v, "kappa1") == 1, format!("{name}: kappa1 {}", value(v, "kappa1")))?;
        ensure(value(v, "transitivity") == "two_transitive", format!("{name}: not 2-transitive"))?;
        ensure(value(v, "transitivity_vacuous") == false, format!("{name}: vacuous transitivity"))?;
        ensure(value(v, case) == true, format!("{name}: {case} does not hold"))?;
        notes.push(format!("{name}(p={}, q={})", value(v, "p"), value(v, "q")));
    }
    Ok(format!("kappa1=1, 2-transitive, Frobenius, dichotomy: {}", notes.join(", ")))
}

/// Minimal non-abelian members of the lattice, decided from the lattice
/// alone.
fn lattice_mna(g: &FiniteGroup, lattice: &[Subgroup]) -> BTreeSet<Subgroup> {
    lattice
        .iter()
        .filter(|h| !g.is_abelian_subgroup(h))
        .filter(|h| {
            lattice
                .iter()
                .filter(|k| k.order() < h.order() && k.is_subgroup_of(h))
                .all(|k| g.is_abelian_subgroup(k))
        })
        .cloned()
        .collect()
}

fn criterion_4() -> Criterion {
    let s = spec(Limits::default(), "all");
    let mut checked = 0;
    for e in &s.entries {
        let g = parse_group(&e.descriptor, &s.limits, &s.base_dir).map_err(|x| x.to_string())?;
        if g.order() > 100 {
            continue;
        }
        let lattice = all_subgroups_bruteforce(&g, 100).map_err(|x| x.to_string())?;
        let expected = lattice_mna(&g, lattice);
        let got: BTreeSet<Subgroup> = enumerate_mna(&g).iter().cloned().collect();
        ensure(got == expected, format!("{}: {} vs {} members", e.name, got.len(), expected.len()))?;
        checked += 1;
    }
    Ok(format!("enumeration matches the lattice on {checked} corpus groups of order <= 100"))
}

fn criterion_5(doc: &VerdictDocument) -> Criterion {
    let applicable: Vec<&TheoremVerdict> =
        doc.verdicts.iter().filter(|v| v.theorem_id == CheckId::Kappa1Alpha1 && v.applicable).collect();
    let failures: Vec<&str> =
        applicable.iter().filter(|v| v.passed != Outcome::Pass).map(|v| v.group.as_str()).collect();
    ensure(failures.is_empty(), format!("failures: {failures:?}"))?;
    ensure(applicable.len() >= 20, format!("only {} applicable groups", applicable.len()))?;
    for name in ["Q8 x C3", "D8 x C5", "D16", "SD16", "M27", "Heis27"] {
        ensure(applicable.iter().any(|v| v.group == name), format!("{name} not covered"))?;
    }
    Ok(format!("biconditional holds on {} groups with a non-abelian Sylow subgroup", applicable.len()))
}

fn criterion_6() -> Criterion {
    let limits = Limits { oracle_cap: 128, ..Limits::default() };
    let start = Instant::now();
    let doc = run(&spec(limits, "kappa1-equals-p"), 0).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut applicable = 0;
    let mut kappa_p = 0;
    for v in &doc.verdicts {
        ensure(v.passed != Outcome::Fail, format!("{} fails", v.group))?;
        if !v.applicable {
            continue;
        }
        applicable += 1;
        let (p, t) = (value(v, "p").as_u64().unwrap(), value(v, "t").as_u64().unwrap() as u32);
        if value(v, "kappa1") == p {
            kappa_p += 1;
            ensure(value(v, "alpha1") == p.pow(t - 1), format!("{}: alpha1", v.group))?;
            let sizes = value(v, "class_sizes").as_array().unwrap();
            ensure(sizes.iter().all(|s| s == p.pow(t - 2)), format!("{}: class sizes {sizes:?}", v.group))?;
        }
    }
    for family in ["D", "Q", "SD"] {
        for order in [16, 32, 64, 128] {
            let name = format!("{family}{order}");
            let v = doc.verdict(&name, CheckId::Kappa1EqualsP).ok_or(format!("{name} missing"))?;
            ensure(v.passed == Outcome::Pass, format!("{name}: {:?}", v.passed))?;
        }
    }
    for name in ["M16", "M81"] {
        let v = doc.verdict(name, CheckId::Kappa1EqualsP).ok_or(format!("{name} missing"))?;
        ensure(v.passed == Outcome::Vacuous, format!("{name}: {:?}", v.passed))?;
    }
    ensure(elapsed < Duration::from_secs(120), format!("took {elapsed:?}"))?;
    Ok(format!(
        "{applicable} applicable p-groups, {kappa_p} with kappa1=p and matching alpha1/orbit sizes, \
         M16 and M81 are minimal non-abelian (vacuous), {elapsed:.2?}"
    ))
}

fn criterion_7(doc: &VerdictDocument) -> Criterion {
    let mut counts = Vec::new();
    for id in CheckId::ALL.iter().copied().filter(|id| id.is_lemma()) {
        let vs: Vec<&TheoremVerdict> = doc.verdicts.iter().filter(|v| v.theorem_id == id).collect();
        let failed: Vec<&str> = vs
            .iter()
            .filter(|v| matches!(v.passed, Outcome::Fail | Outcome::NotComputed))
            .map(|v| v.group.as_str())
            .collect();
        ensure(failed.is_empty(), format!("{id} fails on {failed:?}"))?;
        let n = vs.iter().filter(|v| v.applicable).count();
        ensure(n > 0, format!("{id} never applicable"))?;
        counts.push(n);
    }
    ensure(counts.len() == 18, format!("{} lemma ids", counts.len()))?;
    let s = spec(Limits::default(), "all");
    let (mut non_abelian_p, mut big_p) = (0, 0);
    for e in &s.entries {
        let g = parse_group(&e.descriptor, &s.limits, &s.base_dir).map_err(|x| x.to_string())?;
        if let Some((_, n)) = g.p_group_prime() {
            non_abelian_p += usize::from(!g.is_abelian());
            big_p += usize::from(n >= 4);
        }
    }
    let applicable = |id| doc.verdicts.iter().filter(|v| v.theorem_id == id && v.applicable).count();
    ensure(
        applicable(CheckId::AbelianMaximalCount) == non_abelian_p,
        "abelian maximal count not checked on every non-abelian p-group",
    )?;
    ensure(
        applicable(CheckId::OrderP3NonabelianCount) == big_p,
        "t3 divisibility not checked on every p-group of order >= p^4",
    )?;
    Ok(format!(
        "18 lemmas, {} applicable verdicts, no failures; Miller count on {non_abelian_p} p-groups, t3 on {big_p}",
        counts.iter().sum::<usize>()
    ))
}

fn criterion_8() -> Criterion {
    let g = group("catalog(dihedral, 16)");
    let r = mna_report(&g).map_err(|e| e.to_string())?;
    let t = at_level(&g, 200).map_err(|e| e.to_string())?;
    ensure(r.kappa1 == 2 && t == 2, format!("kappa1={} at_level={t}", r.kappa1))?;
    Ok("kappa1(D16)=2, at_level(D16)=2".into())
}

fn criterion_9(first: &VerdictDocument) -> Criterion {
    let s = spec(Limits::default(), "all");
    let second = run(&s, 0).map_err(|e| e.to_string())?;
    let serial = run(&s, 1).map_err(|e| e.to_string())?;
    let a = to_json(&first.without_timing());
    ensure(a == to_json(&second.without_timing()), "consecutive runs differ")?;
    ensure(a == to_json(&serial.without_timing()), "serial and parallel runs differ")?;
    Ok(format!("identical documents ({} bytes) across two parallel runs and one serial run", a.len()))
}

fn main() {
    let total = Instant::now();
    let doc = run(&spec(Limits::default(), "all"), 0).expect("corpus run");
    let results: Vec<(usize, &str, Criterion)> = vec![
        (1, "A5", criterion_1()),
        (2, "order-72 example", criterion_2()),
        (3, "Fermat and Mersenne families", criterion_3(&doc)),
        (4, "oracle equivalence", criterion_4()),
        (5, "kappa1 = 1 iff alpha1 = 1", criterion_5(&doc)),
        (6, "kappa1 = p characterization", criterion_6()),
        (7, "lemma suite", criterion_7(&doc)),
        (8, "D16 fixture", criterion_8()),
        (9, "determinism", criterion_9(&doc)),
    ];
    let mut failed = 0;
    for (n, title, r) in &results {
        match r {
            Ok(msg) => println!("criterion {n} PASS  {title}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n} FAIL  {title}: {msg}");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass in {:.2?}",
        results.len() - failed,
        results.len(),
        total.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
