//! Minimal non-abelian subgroups: enumeration, conjugacy classes and the
//! invariants built from them.

mod enumerate;
mod frobenius;
mod partition;
mod report;
mod split;

pub use enumerate::{enumerate_mna, is_minimal_nonabelian};
pub use frobenius::{action_transitivity, is_frobenius, Transitivity, TransitivityKind};
pub use partition::{conjugacy_partition, Orbit, SubgroupClassPartition};
pub use report::{miller_moreno_decompose, mna_report, pi1, MemberShape, MillerMorenoShape, MnaReport};
pub use split::{conj_class_split_check, SplitCheck};

use crate::arith;

/// A prime of the form `2^{2ⁿ} + 1`; 2 itself is excluded.
pub fn is_fermat_prime(p: u64) -> bool {
    arith::fermat_index(p).is_some()
}

/// A prime of the form `2^r − 1`.
pub fn is_mersenne_prime(q: u64) -> bool {
    arith::mersenne_exponent(q).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_and_mersenne() {
        assert!(is_fermat_prime(5));
        assert!(is_mersenne_prime(7));
        assert!(!is_fermat_prime(2) && !is_mersenne_prime(2));
        assert!(!is_mersenne_prime(2047));
        assert!(is_fermat_prime(65537));
        assert!(!is_fermat_prime(9) && !is_mersenne_prime(15));
    }
}
