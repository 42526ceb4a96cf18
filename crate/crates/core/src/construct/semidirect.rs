use serde::{Deserialize, Serialize};

use super::abelian::{cyclic_product, AbelianType};
use crate::arith;
use crate::group::{FiniteGroup, Limits};
use crate::{GroupError, Result};

/// A word in the generators of an abelian group, as `(generator, exponent)`
/// factors. Generator `i` is the unit vector of the `i`-th cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Word {
    pub factors: Vec<(usize, i64)>,
}

impl Word {
    pub fn new(factors: Vec<(usize, i64)>) -> Self {
        Self { factors }
    }

    pub fn generator(i: usize) -> Self {
        Self::new(vec![(i, 1)])
    }

    /// Coordinates of the word's value in `C_{k₀} × … × C_{k_{r−1}}`.
    pub fn evaluate(&self, moduli: &[u64]) -> Result<Vec<u64>> {
        let mut v = vec![0i64; moduli.len()];
        for &(g, e) in &self.factors {
            let slot = v.get_mut(g).ok_or_else(|| {
                GroupError::Construction(format!("word uses generator {g} of a rank-{} group", moduli.len()))
            })?;
            *slot += e;
        }
        Ok(v.iter().zip(moduli).map(|(&x, &k)| x.rem_euclid(k as i64) as u64).collect())
    }
}

/// Images of the abelian generators under the acting generator: the action is
/// `a_i^c = images[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSpec {
    pub images: Vec<Word>,
}

/// `P ⋊ C_q` for an abelian `P` and an automorphism `φ` of `P` given by
/// generator images, with `c⁻¹ a c = φ(a)` for the acting generator `c`.
///
/// The element `p·cⁱ` has index `p_index·q + i`, where `p_index` is the
/// index of `p` in [`abelian`](super::abelian). This is exactly the
/// direct-product indexing of `P × C_q`, so a trivial action reproduces the
/// direct product table.
pub fn semidirect(
    p_type: &AbelianType,
    q_order: usize,
    act: &ActionSpec,
    limits: &Limits,
) -> Result<FiniteGroup> {
    if q_order == 0 {
        return Err(GroupError::Construction("acting cyclic group of order 0".into()));
    }
    let moduli = p_type.factors();
    let p_order = p_type.order() as usize;
    limits.check_order("semidirect product", p_order * q_order)?;
    if act.images.len() != moduli.len() {
        return Err(GroupError::Construction(format!(
            "action gives {} images for {} generators",
            act.images.len(),
            moduli.len()
        )));
    }
    let images: Vec<Vec<u64>> = act.images.iter().map(|w| w.evaluate(moduli)).collect::<Result<_>>()?;
    // Each φ(a_i) has order dividing |a_i|.
    for (i, (img, &ki)) in images.iter().zip(moduli).enumerate() {
        for (j, (&x, &kj)) in img.iter().zip(moduli).enumerate() {
            if (x * ki) % kj != 0 {
                return Err(GroupError::Construction(format!(
                    "image of generator {i} has order not dividing {ki} (coordinate {j})"
                )));
            }
        }
    }
    let p = cyclic_product(String::new(), moduli, limits)?;
    let decode = |mut idx: usize| {
        let mut v = vec![0u64; moduli.len()];
        for (slot, &k) in v.iter_mut().zip(moduli).rev() {
            *slot = idx as u64 % k;
            idx /= k as usize;
        }
        v
    };
    let encode = |v: &[u64]| v.iter().zip(moduli).fold(0u64, |acc, (&x, &k)| acc * k + x) as usize;
    let phi: Vec<usize> = (0..p_order)
        .map(|idx| {
            let x = decode(idx);
            let mut out = vec![0u64; moduli.len()];
            for (xi, img) in x.iter().zip(&images) {
                for (slot, (&c, &k)) in out.iter_mut().zip(img.iter().zip(moduli)) {
                    *slot = (*slot + xi * c) % k;
                }
            }
            encode(&out)
        })
        .collect();
    let mut hit = vec![false; p_order];
    for &y in &phi {
        if std::mem::replace(&mut hit[y], true) {
            return Err(GroupError::Construction("action is not bijective".into()));
        }
    }
    let order = permutation_order(&phi);
    if !q_order.is_multiple_of(order) {
        return Err(GroupError::Construction(format!(
            "automorphism order {order} does not divide {q_order}"
        )));
    }
    // powers[i] = φ^i
    let mut powers: Vec<Vec<usize>> = vec![(0..p_order).collect()];
    for i in 1..q_order {
        let prev = &powers[i - 1];
        powers.push(prev.iter().map(|&x| phi[x]).collect());
    }
    let n = p_order * q_order;
    let mut table = Vec::with_capacity(n * n);
    // (p₁cⁱ)(p₂cʲ) = p₁·φ^{−i}(p₂)·c^{i+j}
    for a in 0..n {
        let (p1, i) = (a / q_order, a % q_order);
        let twist = &powers[(q_order - i) % q_order];
        for b in 0..n {
            let (p2, j) = (b / q_order, b % q_order);
            let pp = p.mul(p1, twist[p2]);
            table.push((pp * q_order + (i + j) % q_order) as u32);
        }
    }
    let label =
        format!("({}) : C{q_order}", moduli.iter().map(|k| format!("C{k}")).collect::<Vec<_>>().join("x"));
    FiniteGroup::from_table(label, n, table)
}

/// Smallest `k ≥ 2` whose multiplicative order modulo `m` is exactly `order`.
fn permutation_order(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut order = 1u64;
    for start in 0..perm.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len > 0 {
            order = arith::lcm(order, len);
        }
    }
    order as usize
}

pub(crate) fn unit_of_order(m: u64, order: u64) -> Option<u64> {
    (2..m).find(|&k| arith::multiplicative_order(k, m) == Some(order))
}
