use crate::arith;
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

/// A Sylow `p`-subgroup, grown from the trivial group by repeatedly adjoining
/// the smallest-index `p`-element of `N_G(S) ∖ S`.
///
/// Returns the trivial subgroup when `p` does not divide `|G|`.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Subgroup {
    let target = arith::p_part(g.order() as u64, p) as usize;
    let mut s = Subgroup::trivial(g);
    let mut gens = Vec::new();
    while s.order() < target {
        let n = g.normalizer(&s);
        let x = n
            .elements()
            .find(|&x| !s.contains(x) && arith::exact_log(g.elem_order(x) as u64, p).is_some())
            .expect("a non-Sylow p-subgroup has p-elements in its normalizer outside it");
        s = g.extend(&s, &gens, x);
        gens.push(x);
    }
    debug_assert_eq!(s.order(), target);
    s
}

/// Nilpotent iff every Sylow subgroup is normal.
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    arith::prime_divisors(g.order() as u64).into_iter().all(|p| g.is_normal(&sylow_subgroup(g, p)))
}

/// `G = G⁽⁰⁾ ≥ G⁽¹⁾ ≥ …`, stopping at the first repeated term.
pub fn derived_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::whole(g)];
    loop {
        let last = series.last().expect("non-empty");
        let next = g.derived_of(last);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

pub fn is_solvable(g: &FiniteGroup) -> bool {
    derived_series(g).last().is_some_and(Subgroup::is_trivial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::catalog::{alternating, dihedral, example72, EXAMPLE72_A, EXAMPLE72_B};
    use crate::Limits;

    #[test]
    fn solvability() {
        let l = Limits::default();
        assert!(!is_solvable(&alternating(5, &l).unwrap()));
        let s4 = crate::construct::catalog::symmetric(4, &l).unwrap();
        let orders: Vec<usize> = derived_series(&s4).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(is_solvable(&s4));
    }

    #[test]
    fn sylow_orders() {
        let l = Limits::default();
        let a5 = alternating(5, &l).unwrap();
        assert_eq!(sylow_subgroup(&a5, 2).order(), 4);
        assert_eq!(sylow_subgroup(&a5, 3).order(), 3);
        assert_eq!(sylow_subgroup(&a5, 5).order(), 5);
        assert_eq!(sylow_subgroup(&a5, 7).order(), 1);
        let d8 = dihedral(8, &l).unwrap();
        assert!(sylow_subgroup(&d8, 2).is_whole(&d8));
        assert!(is_nilpotent(&d8));
        assert!(!is_nilpotent(&a5));
    }

    #[test]
    fn example72_sylow_three() {
        let g = example72(&Limits::default()).unwrap();
        let p = sylow_subgroup(&g, 3);
        assert_eq!(p, g.closure(&[EXAMPLE72_A, EXAMPLE72_B]).unwrap());
        assert_eq!(p.order(), 9);
    }
}
