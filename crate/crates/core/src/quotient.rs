use fixedbitset::FixedBitSet;

use crate::group::{Elem, FiniteGroup};
use crate::subgroup::Subgroup;
use crate::{GroupError, Result};

/// `G/N` on cosets of a normal subgroup.
///
/// Coset `i` is represented by the smallest element index it contains, and
/// cosets are numbered in increasing order of their representatives, so the
/// coset `N` itself is `0`.
#[derive(Debug, Clone)]
pub struct CosetQuotient {
    pub kernel: Subgroup,
    pub quotient: FiniteGroup,
    /// Parent element index → coset index.
    pub projection: Vec<Elem>,
    /// Coset index → representative in the parent.
    pub representatives: Vec<Elem>,
}

impl FiniteGroup {
    pub fn quotient(&self, n: &Subgroup) -> Result<CosetQuotient> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let kernel: Vec<Elem> = n.elements().collect();
        let mut projection = vec![usize::MAX; self.order()];
        let mut representatives = Vec::new();
        for x in self.elements() {
            if projection[x] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(x);
            for &k in &kernel {
                projection[self.mul(x, k)] = c;
            }
        }
        let m = representatives.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &representatives {
            for &b in &representatives {
                table.push(projection[self.mul(a, b)] as u32);
            }
        }
        let label = format!("{}/N[{}]", self.label(), n.order());
        let quotient = FiniteGroup::from_table(label, m, table)?;
        Ok(CosetQuotient { kernel: n.clone(), quotient, projection, representatives })
    }
}

impl CosetQuotient {
    /// Full preimage of a quotient subgroup.
    pub fn preimage(&self, parent: &FiniteGroup, sub: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(parent.order());
        for (x, &c) in self.projection.iter().enumerate() {
            if sub.contains(c) {
                members.insert(x);
            }
        }
        Subgroup::from_bits(members)
    }

    /// Image of a parent subgroup.
    pub fn image(&self, sub: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.quotient.order());
        for x in sub.elements() {
            members.insert(self.projection[x]);
        }
        Subgroup::from_bits(members)
    }
}
