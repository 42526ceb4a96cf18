use serde::{Deserialize, Serialize};

use crate::arith;
use crate::group::{Elem, FiniteGroup};
use crate::lattice::all_subgroups_bruteforce;
use crate::subgroup::Subgroup;
use crate::{GroupError, Result};

/// Summary of a p-group of order `pⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PGroupProfile {
    pub p: u64,
    pub n: u32,
    /// Minimal number of generators.
    pub d: u32,
    /// `exp(G) = p^exponent_log`.
    pub exponent_log: u32,
    /// `t` with `G` an 𝒜_t-group; `0` for abelian groups. `None` when the
    /// group is above the lattice cap.
    pub at_level: Option<u32>,
    pub is_maximal_class: bool,
}

/// `(p, e, rank)` with `G ≅ (C_{p^e})^rank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomocyclicType {
    pub p: u64,
    pub e: u32,
    pub rank: u32,
}

/// `Ok(None)` for the trivial group, `Ok(Some((p, n)))` for a p-group.
fn p_data(g: &FiniteGroup) -> Result<Option<(u64, u32)>> {
    if g.order() == 1 {
        return Ok(None);
    }
    g.p_group_prime().map(Some).ok_or(GroupError::NotPGroup(g.order()))
}

fn distinct(mut v: Vec<Elem>) -> Vec<Elem> {
    v.sort_unstable();
    v.dedup();
    v
}

/// `Φ(G) = ℧₁(G)·G′` for a p-group.
pub fn frattini(g: &FiniteGroup) -> Result<Subgroup> {
    let Some((p, _)) = p_data(g)? else {
        return Ok(Subgroup::trivial(g));
    };
    let mut seed = distinct(g.elements().map(|x| g.pow(x, p as i64)).collect());
    seed.extend(g.generators_of(&g.derived_subgroup()));
    Ok(g.closure_with_gens(&seed).0)
}

/// Maximal subgroups of a p-group, as preimages of the hyperplanes of the
/// elementary abelian quotient `G/Φ(G)`, in canonical order.
pub fn maximal_subgroups_p(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    let Some((p, _)) = p_data(g)? else {
        return Ok(Vec::new());
    };
    let phi = frattini(g)?;
    let phi_gens = g.generators_of(&phi);
    // basis g_1..g_d of G modulo Φ
    let mut cur = phi.clone();
    let mut gens = phi_gens.clone();
    let mut basis = Vec::new();
    for x in g.elements() {
        if cur.is_whole(g) {
            break;
        }
        if !cur.contains(x) {
            let next = g.extend(&cur, &gens, x);
            debug_assert_eq!(next.order(), cur.order() * p as usize);
            cur = next;
            gens.push(x);
            basis.push(x);
        }
    }
    let d = basis.len();
    let mut out = Vec::new();
    let total = (p as usize).pow(d as u32);
    for code in 1..total {
        let mut f = vec![0u64; d];
        let mut c = code;
        for slot in f.iter_mut() {
            *slot = (c % p as usize) as u64;
            c /= p as usize;
        }
        let pivot = f.iter().position(|&x| x != 0).expect("nonzero functional");
        if f[pivot] != 1 {
            continue;
        }
        let mut seed = phi_gens.clone();
        for i in (0..d).filter(|&i| i != pivot) {
            let back = ((p - f[i]) % p) as i64;
            seed.push(g.mul(basis[i], g.pow(basis[pivot], back)));
        }
        let m = g.closure_with_gens(&seed).0;
        debug_assert_eq!(m.order() * p as usize, g.order());
        out.push(m);
    }
    out.sort();
    let expected = (total - 1) / (p as usize - 1);
    if out.len() != expected {
        return Err(GroupError::Contract(format!(
            "found {} maximal subgroups, expected {expected}",
            out.len()
        )));
    }
    let meet = out.iter().fold(Subgroup::whole(g), |acc, m| acc.meet(m));
    if meet != phi {
        return Err(GroupError::Contract("intersection of maximal subgroups differs from Φ(G)".into()));
    }
    Ok(out)
}

/// Maximal subgroups: structurally for p-groups, from the lattice otherwise.
pub fn maximal_subgroups(g: &FiniteGroup, oracle_cap: usize) -> Result<Vec<Subgroup>> {
    if g.p_group_prime().is_some() {
        maximal_subgroups_p(g)
    } else if g.order() == 1 {
        Ok(Vec::new())
    } else {
        let lattice = all_subgroups_bruteforce(g, oracle_cap)?;
        Ok(g.maximal_from_lattice(lattice))
    }
}

/// `Ω₁(G) = ⟨x : x^p = 1⟩` for a p-group.
pub fn omega_1(g: &FiniteGroup) -> Result<Subgroup> {
    let Some((p, _)) = p_data(g)? else {
        return Ok(Subgroup::trivial(g));
    };
    let seed: Vec<Elem> = g.elements().filter(|&x| g.elem_order(x) as u64 <= p).collect();
    Ok(g.closure_with_gens(&seed).0)
}

/// `℧_k(G) = ⟨x^{p^k}⟩` for a p-group.
pub fn mho(g: &FiniteGroup, k: u32) -> Result<Subgroup> {
    let Some((p, _)) = p_data(g)? else {
        return Ok(Subgroup::trivial(g));
    };
    let e = p.pow(k) as i64;
    let seed = distinct(g.elements().map(|x| g.pow(x, e)).collect());
    Ok(g.closure_with_gens(&seed).0)
}

/// `d(G)` with `|G/Φ(G)| = p^d`.
pub fn minimal_generators(g: &FiniteGroup) -> Result<u32> {
    let Some((p, _)) = p_data(g)? else {
        return Ok(0);
    };
    let phi = frattini(g)?;
    Ok(arith::exact_log((g.order() / phi.order()) as u64, p).expect("|G:Φ| is a power of p"))
}

/// `Some(type)` iff `G` is an abelian p-group with `|G| = |Ω₁(G)|^e`,
/// `p^e = exp(G)`.
pub fn is_homocyclic(g: &FiniteGroup) -> Option<HomocyclicType> {
    let (p, n) = g.p_group_prime()?;
    if !g.is_abelian() {
        return None;
    }
    let e = arith::exact_log(g.exponent() as u64, p)?;
    let omega = omega_1(g).ok()?;
    let rank = arith::exact_log(omega.order() as u64, p)?;
    (rank * e == n).then_some(HomocyclicType { p, e, rank })
}

/// `γ₁ = G ⊇ γ₂ = G′ ⊇ …` until it stabilizes.
pub fn lower_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let ggens = g.generators().to_vec();
    let mut series = vec![Subgroup::whole(g)];
    loop {
        let last = series.last().expect("series is non-empty");
        let mut seed = Vec::new();
        for x in g.generators_of(last) {
            for &y in &ggens {
                seed.push(g.commutator(x, y));
            }
        }
        let next = if seed.is_empty() { Subgroup::trivial(g) } else { g.normal_closure(&ggens, &seed) };
        if &next == last {
            break;
        }
        series.push(next);
    }
    series
}

/// Nilpotency class, or `None` if the lower central series does not reach 1.
pub fn nilpotency_class(g: &FiniteGroup) -> Option<u32> {
    let series = lower_central_series(g);
    let last = series.last().expect("series is non-empty");
    last.is_trivial().then(|| series.len() as u32 - 1)
}

/// A p-group of order `pⁿ`, `n ≥ 2`, with class `n − 1`.
pub fn is_maximal_class(g: &FiniteGroup) -> bool {
    match g.p_group_prime() {
        Some((_, n)) if n >= 2 => nilpotency_class(g) == Some(n - 1),
        _ => false,
    }
}

/// The `t` with `G` an 𝒜_t-group (`0` for abelian `G`): every subgroup of
/// index `p^t` is abelian and some subgroup of index `p^{t−1}` is not.
pub fn at_level(g: &FiniteGroup, oracle_cap: usize) -> Result<u32> {
    let Some((p, n)) = p_data(g)? else {
        return Ok(0);
    };
    if g.is_abelian() {
        return Ok(0);
    }
    let lattice = all_subgroups_bruteforce(g, oracle_cap)?;
    let smallest = lattice
        .iter()
        .filter(|h| !g.is_abelian_subgroup(h))
        .map(Subgroup::order)
        .min()
        .expect("a non-abelian group has a non-abelian subgroup");
    let k = arith::exact_log(smallest as u64, p).expect("subgroup orders are powers of p");
    Ok(n - k + 1)
}

pub fn p_group_profile(g: &FiniteGroup, oracle_cap: usize) -> Result<PGroupProfile> {
    let (p, n) = g.p_group_prime().ok_or(GroupError::NotPGroup(g.order()))?;
    let at = match at_level(g, oracle_cap) {
        Ok(t) => Some(t),
        Err(GroupError::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(PGroupProfile {
        p,
        n,
        d: minimal_generators(g)?,
        exponent_log: arith::exact_log(g.exponent() as u64, p).expect("p-group exponent"),
        at_level: at,
        is_maximal_class: is_maximal_class(g),
    })
}
