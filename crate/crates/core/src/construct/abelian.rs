use serde::{Deserialize, Serialize};

use crate::arith;
use crate::group::{FiniteGroup, Limits};
use crate::{GroupError, Result};

/// Primary decomposition of a finite abelian group: a list of prime powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianType {
    prime_powers: Vec<u64>,
}

impl AbelianType {
    pub fn new(prime_powers: Vec<u64>) -> Result<Self> {
        for &k in &prime_powers {
            if k < 2 || arith::prime_power(k).is_none() {
                return Err(GroupError::Construction(format!("abelian factor {k} is not a prime power")));
            }
        }
        Ok(Self { prime_powers })
    }

    /// `r` copies of `C_{p^e}`.
    pub fn homocyclic(p: u64, e: u32, r: usize) -> Result<Self> {
        Self::new(vec![p.pow(e); r])
    }

    pub fn factors(&self) -> &[u64] {
        &self.prime_powers
    }

    pub fn order(&self) -> u64 {
        self.prime_powers.iter().product()
    }
}

/// Direct product of cyclic groups with the given moduli. An element
/// `(x₀, …, x_{r−1})` has index `((x₀·k₁ + x₁)·k₂ + x₂)…`, so the first
/// coordinate is most significant.
pub(crate) fn cyclic_product(label: String, moduli: &[u64], limits: &Limits) -> Result<FiniteGroup> {
    let n: u64 = moduli.iter().product();
    limits.check_order("abelian group", n as usize)?;
    let n = n as usize;
    let decode = |mut idx: usize| {
        let mut v = vec![0u64; moduli.len()];
        for (slot, &k) in v.iter_mut().zip(moduli).rev() {
            *slot = idx as u64 % k;
            idx /= k as usize;
        }
        v
    };
    let coords: Vec<Vec<u64>> = (0..n).map(decode).collect();
    let mut table = Vec::with_capacity(n * n);
    for a in &coords {
        for b in &coords {
            let mut idx = 0u64;
            for ((x, y), &k) in a.iter().zip(b).zip(moduli) {
                idx = idx * k + (x + y) % k;
            }
            table.push(idx as u32);
        }
    }
    FiniteGroup::from_table(label, n, table)
}

/// `C_n`; element `i` is the `i`-th power of the generator `1`.
pub fn cyclic(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::Construction("cyclic group of order 0".into()));
    }
    cyclic_product(format!("C{n}"), &[n as u64], limits)
}

pub fn abelian(t: &AbelianType, limits: &Limits) -> Result<FiniteGroup> {
    let label = if t.factors().is_empty() {
        "1".to_string()
    } else {
        t.factors().iter().map(|k| format!("C{k}")).collect::<Vec<_>>().join("x")
    };
    cyclic_product(label, t.factors(), limits)
}

/// `G₁ × G₂`; the pair `(x, y)` has index `x·|G₂| + y`.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup, limits: &Limits) -> Result<FiniteGroup> {
    let (n1, n2) = (g1.order(), g2.order());
    limits.check_order("direct product", n1 * n2)?;
    let n = n1 * n2;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let x = g1.mul(a / n2, b / n2);
            let y = g2.mul(a % n2, b % n2);
            table.push((x * n2 + y) as u32);
        }
    }
    FiniteGroup::from_table(format!("{} x {}", g1.label(), g2.label()), n, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let l = Limits::default();
        let c1 = cyclic(1, &l).unwrap();
        assert_eq!(c1.order(), 1);
        let c6 = cyclic(6, &l).unwrap();
        assert_eq!(c6.elem_order(1), 6);
        assert_eq!(c6.elem_order(2), 3);
        assert!(cyclic(0, &l).is_err());
        assert!(cyclic(6000, &l).is_err());
    }

    #[test]
    fn c2_times_c3_matches_c6_order_multiset() {
        let l = Limits::default();
        let p = direct_product(&cyclic(2, &l).unwrap(), &cyclic(3, &l).unwrap(), &l).unwrap();
        let c6 = cyclic(6, &l).unwrap();
        assert_eq!(p.order_statistics(), c6.order_statistics());
        assert_eq!(p.order_statistics(), vec![(1, 1), (2, 1), (3, 2), (6, 2)]);
    }

    #[test]
    fn homocyclic_type() {
        let l = Limits::default();
        let t = AbelianType::homocyclic(2, 2, 3).unwrap();
        assert_eq!(t.factors(), &[4, 4, 4]);
        let g = abelian(&t, &l).unwrap();
        assert_eq!(g.order(), 64);
        assert_eq!(g.exponent(), 4);
        assert!(AbelianType::new(vec![6]).is_err());
        assert!(AbelianType::new(vec![1]).is_err());
        assert_eq!(abelian(&AbelianType::new(vec![]).unwrap(), &l).unwrap().order(), 1);
    }
}
