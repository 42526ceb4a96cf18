use std::collections::HashMap;

use crate::group::{FiniteGroup, Limits};
use crate::{GroupError, Result};

/// The permutation group generated by `generators` on `{0, …, degree−1}`.
///
/// Each generator is an image array (`g[i]` is the image of `i`). Products
/// compose left to right: `x·y` applies `x` first. Elements are numbered in
/// breadth-first order from the identity, trying generators in the given
/// order, so the numbering is deterministic.
pub fn from_permutations(degree: usize, generators: &[Vec<usize>], limits: &Limits) -> Result<FiniteGroup> {
    for (k, g) in generators.iter().enumerate() {
        if g.len() != degree {
            return Err(GroupError::Construction(format!(
                "generator {k} has length {} on degree {degree}",
                g.len()
            )));
        }
        let mut hit = vec![false; degree];
        for &x in g {
            if x >= degree || std::mem::replace(&mut hit[x], true) {
                return Err(GroupError::Construction(format!("generator {k} is not a bijection")));
            }
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(identity.clone(), 0);
    let mut elems = vec![identity];
    // parent[b] = (a, k) with b = a·g_k
    let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
    let mut i = 0;
    while i < elems.len() {
        for (k, g) in generators.iter().enumerate() {
            let next: Vec<usize> = elems[i].iter().map(|&x| g[x]).collect();
            if !index.contains_key(&next) {
                limits.check_order("permutation group", elems.len() + 1)?;
                index.insert(next.clone(), elems.len());
                elems.push(next);
                parent.push((i, k));
            }
        }
        i += 1;
    }
    let n = elems.len();
    // right multiplication by each generator, as index maps
    let right: Vec<Vec<u32>> = generators
        .iter()
        .map(|g| elems.iter().map(|e| index[&e.iter().map(|&x| g[x]).collect::<Vec<_>>()] as u32).collect())
        .collect();
    // column b of the table is column parent(b) followed by the generator step
    let mut columns: Vec<Vec<u32>> = vec![(0..n as u32).collect()];
    for &(a, k) in &parent[1..] {
        let col: Vec<u32> = columns[a].iter().map(|&x| right[k][x as usize]).collect();
        columns.push(col);
    }
    let mut table = vec![0u32; n * n];
    for (b, col) in columns.iter().enumerate() {
        for (a, &x) in col.iter().enumerate() {
            table[a * n + b] = x;
        }
    }
    FiniteGroup::from_table(format!("perm({degree})[{n}]"), n, table)
}

/// Image array of a product of disjoint cycles.
pub fn cycles_to_images(degree: usize, cycles: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut img: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    for c in cycles {
        for (pos, &x) in c.iter().enumerate() {
            if x >= degree {
                return Err(GroupError::Construction(format!("point {x} outside degree {degree}")));
            }
            if std::mem::replace(&mut used[x], true) {
                return Err(GroupError::Construction(format!("point {x} repeated in cycles")));
            }
            img[x] = c[(pos + 1) % c.len()];
        }
    }
    Ok(img)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(degree: usize, cycles: &[&[usize]]) -> Vec<usize> {
        let cs: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        cycles_to_images(degree, &cs).unwrap()
    }

    #[test]
    fn s3_and_a5() {
        let l = Limits::default();
        let s3 = from_permutations(3, &[gen(3, &[&[0, 1, 2]]), gen(3, &[&[0, 1]])], &l).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let a5 = from_permutations(5, &[gen(5, &[&[0, 1, 2, 3, 4]]), gen(5, &[&[0, 1, 2]])], &l).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(a5.order_statistics(), vec![(1, 1), (2, 15), (3, 20), (5, 24)]);
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let l = Limits::default();
        let g = from_permutations(4, &[vec![0, 1, 2, 3]], &l).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn rejects_bad_generators() {
        let l = Limits::default();
        assert!(from_permutations(3, &[vec![0, 0, 1]], &l).is_err());
        assert!(from_permutations(3, &[vec![0, 1]], &l).is_err());
        assert!(cycles_to_images(3, &[vec![0, 1], vec![1, 2]]).is_err());
        let tight = Limits { max_order: 10, ..Limits::default() };
        let big = from_permutations(5, &[gen(5, &[&[0, 1, 2, 3, 4]]), gen(5, &[&[0, 1]])], &tight);
        assert!(matches!(big, Err(GroupError::CapExceeded { .. })));
    }
}
