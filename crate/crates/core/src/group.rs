use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::subgroup::Subgroup;
use crate::{GroupError, Result};

/// Element index into a [`FiniteGroup`].
pub type Elem = usize;

pub const DEFAULT_MAX_ORDER: usize = 5000;
pub const DEFAULT_ORACLE_CAP: usize = 200;

/// Size limits applied by constructors and lattice-dependent computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order any constructor will build.
    pub max_order: usize,
    /// Largest order for which the full subgroup lattice is enumerated.
    pub oracle_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_order: DEFAULT_MAX_ORDER, oracle_cap: DEFAULT_ORACLE_CAP }
    }
}

impl Limits {
    pub fn check_order(&self, what: &'static str, order: usize) -> Result<()> {
        if order > self.max_order {
            return Err(GroupError::CapExceeded { what, order, cap: self.max_order });
        }
        Ok(())
    }
}

/// Write-once caches. Every slot is filled idempotently from immutable data,
/// so concurrent readers either see nothing or the final value.
#[derive(Clone, Default)]
pub(crate) struct Memo {
    pub(crate) generators: OnceLock<Vec<Elem>>,
    pub(crate) cyclic: OnceLock<Vec<(Subgroup, Elem)>>,
    pub(crate) lattice: OnceLock<Vec<Subgroup>>,
    pub(crate) mna: OnceLock<Vec<Subgroup>>,
}

/// A finite group given by its full multiplication table.
///
/// Element `0` is always the identity.
#[derive(Clone)]
pub struct FiniteGroup {
    label: String,
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    pub(crate) memo: Memo,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.n)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major table, `table[i * n + j] = i·j`.
    ///
    /// The table must be a Latin square with identity `0`. Associativity is
    /// established with Light's test over a generating set of the magma.
    pub fn from_table(label: impl Into<String>, n: usize, table: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if table.len() != n * n {
            return Err(GroupError::InvalidTable(format!(
                "expected {} entries, found {}",
                n * n,
                table.len()
            )));
        }
        if let Some(bad) = table.iter().find(|&&x| x as usize >= n) {
            return Err(GroupError::InvalidTable(format!("entry {bad} out of range")));
        }
        for i in 0..n {
            if table[i] as usize != i || table[i * n] as usize != i {
                return Err(GroupError::InvalidTable(format!(
                    "element 0 is not a two-sided identity (fails at {i})"
                )));
            }
        }
        let mut seen = FixedBitSet::with_capacity(n);
        for i in 0..n {
            seen.clear();
            for j in 0..n {
                let x = table[i * n + j] as usize;
                if seen.put(x) {
                    return Err(GroupError::InvalidTable(format!("row {i} repeats {x}")));
                }
            }
            seen.clear();
            for j in 0..n {
                let x = table[j * n + i] as usize;
                if seen.put(x) {
                    return Err(GroupError::InvalidTable(format!("column {i} repeats {x}")));
                }
            }
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        for g in magma_generators(n, &at) {
            for x in 0..n {
                let xg = at(x, g);
                for y in 0..n {
                    if at(xg, y) != at(x, at(g, y)) {
                        return Err(GroupError::InvalidTable(format!(
                            "not associative: ({x}·{g})·{y} != {x}·({g}·{y})"
                        )));
                    }
                }
            }
        }
        let inv: Vec<u32> = (0..n)
            .map(|i| (0..n).find(|&j| at(i, j) == 0).expect("latin square row has identity") as u32)
            .collect();
        let mut orders = vec![0u32; n];
        for (i, slot) in orders.iter_mut().enumerate() {
            let mut x = i;
            let mut k = 1;
            while x != 0 {
                x = at(x, i);
                k += 1;
            }
            *slot = k;
        }
        Ok(Self { label: label.into(), n, table, inv, orders, memo: Memo::default() })
    }

    /// Exhaustive associativity scan, refused above `cap`.
    pub fn check_associativity(&self, cap: usize) -> Result<()> {
        if self.n > cap {
            return Err(GroupError::CapExceeded { what: "associativity scan", order: self.n, cap });
        }
        for a in 0..self.n {
            for b in 0..self.n {
                let ab = self.mul(a, b);
                for c in 0..self.n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::InvalidTable(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as usize
    }

    #[inline]
    pub fn elem_order(&self, a: Elem) -> usize {
        self.orders[a] as usize
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let ord = self.elem_order(a) as i64;
        let k = k.rem_euclid(ord);
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `[a, b] = a⁻¹b⁻¹ab`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `a^g = g⁻¹ag`.
    pub fn conj(&self, a: Elem, g: Elem) -> Elem {
        self.mul(self.inv(g), self.mul(a, g))
    }

    pub fn commute(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn check_index(&self, a: Elem) -> Result<()> {
        if a >= self.n {
            return Err(GroupError::IndexOutOfRange { index: a, order: self.n });
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    /// Exponent as the lcm of element orders (the maximum, for p-groups).
    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1u64, |acc, &o| arith::lcm(acc, o as u64)) as usize
    }

    /// Multiset of element orders as sorted `(order, count)` pairs.
    pub fn order_statistics(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for &o in &self.orders {
            *counts.entry(o as usize).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    /// `Some((p, k))` when `|G| = p^k`, `k >= 1`.
    pub fn p_group_prime(&self) -> Option<(u64, u32)> {
        arith::prime_power(self.n as u64)
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self) -> &[Elem] {
        self.memo.generators.get_or_init(|| self.generators_of(&Subgroup::whole(self)))
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }
}

/// Greedy generating set of a Latin square with identity, viewed as a magma.
fn magma_generators(n: usize, at: &impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut inside = FixedBitSet::with_capacity(n);
    inside.insert(0);
    let mut list: Vec<usize> = vec![0];
    let mut gens = Vec::new();
    for cand in 1..n {
        if list.len() == n {
            break;
        }
        if inside.contains(cand) {
            continue;
        }
        gens.push(cand);
        inside.insert(cand);
        list.push(cand);
        let mut pending = vec![cand];
        while let Some(u) = pending.pop() {
            let mut i = 0;
            while i < list.len() {
                let v = list[i];
                for w in [at(u, v), at(v, u)] {
                    if !inside.put(w) {
                        list.push(w);
                        pending.push(w);
                    }
                }
                i += 1;
            }
        }
    }
    gens
}
