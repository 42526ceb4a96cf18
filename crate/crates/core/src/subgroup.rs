use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::group::{Elem, FiniteGroup};
use crate::{GroupError, Result};

/// A subgroup of some parent [`FiniteGroup`], stored as a membership bitset.
///
/// The parent is not stored; every operation takes it explicitly. Identity of
/// a subgroup is its membership vector. Subgroups are totally ordered by
/// `(order, sorted member list)`, and this ordering is the canonical one used
/// for representatives and report output.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}: ", self.order)?;
        f.debug_list().entries(self.members.ones()).finish()?;
        write!(f, ")")
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order).then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    pub fn trivial(g: &FiniteGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(g.order());
        members.insert(0);
        Self { members, order: 1 }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(g.order());
        members.insert_range(..);
        Self { members, order: g.order() }
    }

    /// Wraps a member set that is already known to be a subgroup.
    pub(crate) fn from_bits(members: FixedBitSet) -> Self {
        let order = members.count_ones(..);
        Self { members, order }
    }

    /// Validates that `elems` is exactly a subgroup of `g`.
    pub fn from_elements(g: &FiniteGroup, elems: &[Elem]) -> Result<Self> {
        let mut members = FixedBitSet::with_capacity(g.order());
        for &e in elems {
            g.check_index(e)?;
            members.insert(e);
        }
        let sub = Self::from_bits(members);
        if !sub.contains(0) {
            return Err(GroupError::Contract("member set lacks the identity".into()));
        }
        let list: Vec<Elem> = sub.elements().collect();
        for &a in &list {
            if !sub.contains(g.inv(a)) {
                return Err(GroupError::Contract(format!("member set not closed under inverse at {a}")));
            }
            for &b in &list {
                if !sub.contains(g.mul(a, b)) {
                    return Err(GroupError::Contract(format!(
                        "member set not closed under multiplication at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(sub)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.ones().collect()
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order < other.order && self.members.is_subset(&other.members)
    }

    /// Intersection, which is again a subgroup.
    pub fn meet(&self, other: &Subgroup) -> Subgroup {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Self::from_bits(members)
    }

    pub fn is_whole(&self, g: &FiniteGroup) -> bool {
        self.order == g.order()
    }
}

/// A subgroup rebuilt as a standalone group, with the embedding back into the
/// parent. Elements of `group` are the parent members in increasing index
/// order, so the identity stays at `0`.
#[derive(Debug, Clone)]
pub struct Embedded {
    pub group: FiniteGroup,
    pub embed: Vec<Elem>,
}

impl Embedded {
    /// Maps a subgroup of the standalone group back into the parent.
    pub fn lift(&self, parent: &FiniteGroup, sub: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(parent.order());
        for e in sub.elements() {
            members.insert(self.embed[e]);
        }
        Subgroup::from_bits(members)
    }

    /// Maps a parent subgroup contained in the embedded one to the standalone group.
    pub fn restrict(&self, sub: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.group.order());
        for (i, &e) in self.embed.iter().enumerate() {
            if sub.contains(e) {
                members.insert(i);
            }
        }
        Subgroup::from_bits(members)
    }
}

impl FiniteGroup {
    /// Smallest subgroup containing `seed`.
    pub fn closure(&self, seed: &[Elem]) -> Result<Subgroup> {
        if seed.is_empty() {
            return Err(GroupError::EmptySeed);
        }
        for &s in seed {
            self.check_index(s)?;
        }
        Ok(self.closure_with_gens(seed).0)
    }

    /// Closure plus the subset of `seed` that was actually needed.
    pub(crate) fn closure_with_gens(&self, seed: &[Elem]) -> (Subgroup, Vec<Elem>) {
        let mut cur = Subgroup::trivial(self);
        let mut gens = Vec::new();
        for &s in seed {
            if !cur.contains(s) {
                cur = self.extend(&cur, &gens, s);
                gens.push(s);
            }
        }
        (cur, gens)
    }

    /// `⟨H, x⟩` given `H` and a generating set of `H`, built as a union of
    /// right cosets of `H`.
    pub fn extend(&self, h: &Subgroup, h_gens: &[Elem], x: Elem) -> Subgroup {
        if h.contains(x) {
            return h.clone();
        }
        let base: Vec<Elem> = h.elements().collect();
        let mut members = h.members.clone();
        let mut reps = vec![0];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for &g in h_gens.iter().chain(std::iter::once(&x)) {
                let e = self.mul(r, g);
                if !members.contains(e) {
                    reps.push(e);
                    for &b in &base {
                        members.insert(self.mul(b, e));
                    }
                }
            }
            i += 1;
        }
        Subgroup { members, order: base.len() * reps.len() }
    }

    /// A small generating set of `h`, chosen greedily in index order.
    pub fn generators_of(&self, h: &Subgroup) -> Vec<Elem> {
        let mut cur = Subgroup::trivial(self);
        let mut gens = Vec::new();
        for x in h.elements() {
            if cur.order() == h.order() {
                break;
            }
            if !cur.contains(x) {
                cur = self.extend(&cur, &gens, x);
                gens.push(x);
            }
        }
        gens
    }

    /// `⟨H, K⟩`.
    pub fn join(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        if k.is_subgroup_of(h) {
            return h.clone();
        }
        if h.is_subgroup_of(k) {
            return k.clone();
        }
        let mut gens = self.generators_of(h);
        let mut cur = h.clone();
        for x in self.generators_of(k) {
            if !cur.contains(x) {
                cur = self.extend(&cur, &gens, x);
                gens.push(x);
            }
        }
        cur
    }

    /// Normal closure of `seed` under conjugation by `ambient_gens`.
    pub fn normal_closure(&self, ambient_gens: &[Elem], seed: &[Elem]) -> Subgroup {
        let (mut cur, mut gens) = self.closure_with_gens(seed);
        let mut i = 0;
        while i < gens.len() {
            let x = gens[i];
            for &g in ambient_gens {
                let c = self.conj(x, g);
                if !cur.contains(c) {
                    cur = self.extend(&cur, &gens, c);
                    gens.push(c);
                }
            }
            i += 1;
        }
        cur
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.derived_of(&Subgroup::whole(self))
    }

    /// `H' = ⟨[x, y] : x, y ∈ H⟩`, computed as the normal closure in `H` of
    /// the commutators of a generating set.
    pub fn derived_of(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generators_of(h);
        let mut seed = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                seed.push(self.commutator(a, b));
            }
        }
        self.normal_closure(&gens, &seed)
    }

    /// `[H, K] = ⟨[h, k]⟩` by exhaustive pairs.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut cur = Subgroup::trivial(self);
        let mut gens = Vec::new();
        let ks: Vec<Elem> = k.elements().collect();
        for a in h.elements() {
            for &b in &ks {
                let c = self.commutator(a, b);
                if !cur.contains(c) {
                    cur = self.extend(&cur, &gens, c);
                    gens.push(c);
                }
            }
        }
        cur
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer_of(&Subgroup::whole(self))
    }

    /// `Z(H)` for a subgroup `H`.
    pub fn center_of(&self, h: &Subgroup) -> Subgroup {
        self.centralizer_of(h).meet(h)
    }

    pub fn centralizer(&self, x: Elem) -> Subgroup {
        self.collect_subgroup(|g| self.commute(g, x))
    }

    pub fn centralizer_of(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generators_of(h);
        self.collect_subgroup(|g| gens.iter().all(|&x| self.commute(g, x)))
    }

    /// `{g : H^g = H}`.
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        self.normalizer_within(&Subgroup::whole(self), h)
    }

    /// `N_K(H) = K ∩ N_G(H)`.
    pub fn normalizer_within(&self, k: &Subgroup, h: &Subgroup) -> Subgroup {
        let gens = self.generators_of(h);
        let mut members = FixedBitSet::with_capacity(self.order());
        for g in k.elements() {
            if gens.iter().all(|&x| h.contains(self.conj(x, g))) {
                members.insert(g);
            }
        }
        Subgroup::from_bits(members)
    }

    /// `H^g = {g⁻¹hg : h ∈ H}`.
    pub fn conjugate(&self, h: &Subgroup, g: Elem) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        for x in h.elements() {
            members.insert(self.conj(x, g));
        }
        Subgroup { members, order: h.order }
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normalized_by(h, self.generators())
    }

    /// Whether `H^g = H` for every `g` in `gens`.
    pub fn is_normalized_by(&self, h: &Subgroup, gens: &[Elem]) -> bool {
        let hgens = self.generators_of(h);
        gens.iter().all(|&g| hgens.iter().all(|&x| h.contains(self.conj(x, g))))
    }

    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        let gens = self.generators_of(h);
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn is_cyclic_subgroup(&self, h: &Subgroup) -> bool {
        h.elements().any(|x| self.elem_order(x) == h.order())
    }

    /// Product set `HK` when it is a subgroup; `None` otherwise.
    pub fn product_if_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Option<Subgroup> {
        let j = self.join(h, k);
        let meet = h.meet(k);
        (j.order() * meet.order() == h.order() * k.order()).then_some(j)
    }

    /// The elements whose order divides some power of the primes in `primes`,
    /// as a subgroup when they form one.
    pub fn pi_elements(&self, primes: &[u64]) -> Option<Subgroup> {
        let mut members = FixedBitSet::with_capacity(self.order());
        for x in self.elements() {
            let mut o = self.elem_order(x) as u64;
            for &p in primes {
                while o.is_multiple_of(p) {
                    o /= p;
                }
            }
            if o == 1 {
                members.insert(x);
            }
        }
        let list: Vec<Elem> = members.ones().collect();
        let closed = list.iter().all(|&a| list.iter().all(|&b| members.contains(self.mul(a, b))));
        closed.then(|| Subgroup::from_bits(members))
    }

    /// Rebuilds `h` as a standalone group.
    pub fn subgroup_group(&self, h: &Subgroup) -> Embedded {
        let embed: Vec<Elem> = h.elements().collect();
        let m = embed.len();
        let mut index = vec![u32::MAX; self.order()];
        for (i, &e) in embed.iter().enumerate() {
            index[e] = i as u32;
        }
        let mut table = Vec::with_capacity(m * m);
        for &a in &embed {
            for &b in &embed {
                table.push(index[self.mul(a, b)]);
            }
        }
        let label = format!("{}[subgroup of order {m}]", self.label());
        let group = FiniteGroup::from_table(label, m, table)
            .expect("restriction of a group table to a subgroup is a group table");
        Embedded { group, embed }
    }

    fn collect_subgroup(&self, pred: impl Fn(Elem) -> bool) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        for g in self.elements() {
            if pred(g) {
                members.insert(g);
            }
        }
        Subgroup::from_bits(members)
    }

    /// Cyclic subgroups, each with its smallest-index generator, in canonical order.
    pub fn cyclic_subgroups(&self) -> &[(Subgroup, Elem)] {
        self.memo.cyclic.get_or_init(|| {
            let mut seen = std::collections::HashMap::new();
            for x in self.elements() {
                let c = self.extend(&Subgroup::trivial(self), &[], x);
                seen.entry(c).or_insert(x);
            }
            let mut out: Vec<(Subgroup, Elem)> = seen.into_iter().collect();
            out.sort();
            out
        })
    }

    /// Orbit of `h` under conjugation by the subgroup generated by `gens`.
    pub fn conjugacy_orbit(&self, h: &Subgroup, gens: &[Elem]) -> Vec<Subgroup> {
        let mut seen = std::collections::HashSet::new();
        seen.insert(h.clone());
        let mut orbit = vec![h.clone()];
        let mut i = 0;
        while i < orbit.len() {
            for &g in gens {
                let c = self.conjugate(&orbit[i], g);
                if seen.insert(c.clone()) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        orbit.sort();
        orbit
    }
}
