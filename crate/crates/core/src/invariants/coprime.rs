use crate::arith;
use crate::group::{Elem, FiniteGroup};
use crate::lattice::all_subgroups_bruteforce;
use crate::subgroup::Subgroup;
use crate::{GroupError, Result};

fn contract(msg: impl Into<String>) -> GroupError {
    GroupError::Contract(msg.into())
}

/// `([P, A], C_P(A))` for an abelian p-subgroup `P` normalized by a
/// subgroup `A` of coprime order. The two pieces always form an internal
/// direct decomposition of `P`; a failure of that is reported as an error.
pub fn coprime_action_decomposition(
    g: &FiniteGroup,
    p: &Subgroup,
    a: &Subgroup,
) -> Result<(Subgroup, Subgroup)> {
    if p.order() > 1 && arith::prime_power(p.order() as u64).is_none() {
        return Err(contract("P is not a p-subgroup"));
    }
    if !g.is_abelian_subgroup(p) {
        return Err(contract("P is not abelian"));
    }
    if arith::gcd(p.order() as u64, a.order() as u64) != 1 {
        return Err(contract("|P| and |A| are not coprime"));
    }
    let a_gens = g.generators_of(a);
    if !g.is_normalized_by(p, &a_gens) {
        return Err(contract("A does not normalize P"));
    }
    let comm = g.commutator_subgroup(p, a);
    let cent = g.centralizer_of(a).meet(p);
    if !comm.meet(&cent).is_trivial() || comm.order() * cent.order() != p.order() {
        return Err(contract(format!(
            "[P,A] (order {}) and C_P(A) (order {}) do not split P (order {})",
            comm.order(),
            cent.order(),
            p.order()
        )));
    }
    Ok((comm, cent))
}

/// Elements `a₁, …, a_k` with `G = ⟨a₁⟩ × … × ⟨a_k⟩` for an abelian group.
///
/// Repeatedly takes an element of maximal order and searches the lattice for
/// a complement of the cyclic subgroup it generates.
pub fn cyclic_decomposition(g: &FiniteGroup, oracle_cap: usize) -> Result<Vec<Elem>> {
    if !g.is_abelian() {
        return Err(contract("cyclic decomposition of a non-abelian group"));
    }
    let lattice = all_subgroups_bruteforce(g, oracle_cap)?;
    let mut t = Subgroup::whole(g);
    let mut out = Vec::new();
    while !t.is_trivial() {
        let a = t.elements().max_by_key(|&x| (g.elem_order(x), std::cmp::Reverse(x))).expect("non-empty");
        let c = g.closure_with_gens(&[a]).0;
        let target = t.order() / c.order();
        let comp = lattice
            .iter()
            .find(|s| s.order() == target && s.is_subgroup_of(&t) && s.meet(&c).is_trivial())
            .ok_or_else(|| contract("no complement for a cyclic factor of maximal order"))?
            .clone();
        out.push(a);
        t = comp;
    }
    Ok(out)
}

/// For an abelian p-group `G` and `1 < H ≤ G`, some `N ≤ G` with `G/N`
/// cyclic and `|H : H ∩ N| = p`.
///
/// Decomposes `G = ⟨a₁⟩ × … × ⟨a_k⟩`, picks the first `Nᵢ = ⟨a_j : j ≠ i⟩`
/// not containing `H`, and takes the preimage of the maximal subgroup of the
/// cyclic group `HNᵢ/Nᵢ`. The result is re-checked before returning.
pub fn find_cyclic_quotient_witness(g: &FiniteGroup, h: &Subgroup, oracle_cap: usize) -> Result<Subgroup> {
    let (p, _) = g.p_group_prime().ok_or(GroupError::NotPGroup(g.order()))?;
    if !g.is_abelian() {
        return Err(contract("G is not abelian"));
    }
    if h.is_trivial() {
        return Err(contract("H is trivial"));
    }
    let basis = cyclic_decomposition(g, oracle_cap)?;
    let (ni, _) = (0..basis.len())
        .map(|i| {
            let others: Vec<Elem> =
                basis.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            let ni = g.closure_with_gens(&others).0;
            (ni, i)
        })
        .find(|(ni, _)| !h.is_subgroup_of(ni))
        .expect("the complements N_i intersect trivially, so one misses H");
    let image_order = |x: Elem| {
        let mut y = x;
        let mut k = 1;
        while !ni.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        k
    };
    let top = h.elements().max_by_key(|&x| (image_order(x), std::cmp::Reverse(x))).expect("non-empty");
    let hp = g.closure_with_gens(&[g.pow(top, p as i64)]).0;
    let n = g.join(&ni, &hp);

    let q = g.quotient(&n)?;
    if !q.quotient.is_cyclic_subgroup(&Subgroup::whole(&q.quotient)) {
        return Err(contract("G/N is not cyclic"));
    }
    if h.order() != p as usize * h.meet(&n).order() {
        return Err(contract("|H : H ∩ N| differs from p"));
    }
    Ok(n)
}

/// A complement to a normal Hall subgroup `K`.
///
/// Greedily adjoins elements of order coprime to `|K|`, keeping only those
/// that leave the generated subgroup coprime to `|K|`. Every such subgroup
/// lies in some complement, so the greedy pass cannot get stuck.
pub fn hall_complement(g: &FiniteGroup, k: &Subgroup) -> Result<Subgroup> {
    let index = g.order() / k.order();
    if arith::gcd(k.order() as u64, index as u64) != 1 {
        return Err(contract("K is not a Hall subgroup"));
    }
    if !g.is_normal(k) {
        return Err(GroupError::NotNormal);
    }
    let coprime = |n: usize| arith::gcd(n as u64, k.order() as u64) == 1;
    let mut a = Subgroup::trivial(g);
    let mut gens = Vec::new();
    for x in g.elements() {
        if a.order() == index {
            break;
        }
        if a.contains(x) || !coprime(g.elem_order(x)) {
            continue;
        }
        let cand = g.extend(&a, &gens, x);
        if coprime(cand.order()) {
            a = cand;
            gens.push(x);
        }
    }
    if a.order() != index {
        return Err(contract("no complement found"));
    }
    Ok(a)
}
