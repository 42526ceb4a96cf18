//! Named groups and families.
//!
//! Index conventions:
//! - metacyclic families (`dihedral`, `quaternion`, `semidihedral`,
//!   `dicyclic`, `modular`): `x^i y^j` has index `j·m + i`, where `x` has
//!   order `m`; the relation is `y x y⁻¹ = x^r` with `y^s = x^t`.
//! - `heisenberg`: upper unitriangular matrices `(a, b, c)` over `F_p` with
//!   `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`, index `a·p² + b·p + c`.
//! - `symmetric`, `alternating`: permutation groups, numbered as in
//!   [`from_permutations`].
//! - `example72`, `fermat_family`, `mersenne_family`: semidirect products
//!   numbered as in [`semidirect`].

use super::abelian::AbelianType;
use super::perm::{cycles_to_images, from_permutations};
use super::semidirect::{semidirect, unit_of_order, ActionSpec, Word};
use crate::arith;
use crate::group::{Elem, FiniteGroup, Limits};
use crate::{GroupError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogParam {
    Int(i64),
    Sym(String),
}

impl CatalogParam {
    fn int(&self) -> Result<u64> {
        match self {
            CatalogParam::Int(v) if *v >= 0 => Ok(*v as u64),
            other => Err(bad(format!("expected a non-negative integer, found {other:?}"))),
        }
    }
}

fn bad(msg: impl Into<String>) -> GroupError {
    GroupError::Construction(msg.into())
}

fn arity(name: &str, params: &[CatalogParam], n: usize) -> Result<()> {
    if params.len() != n {
        return Err(bad(format!("catalog entry {name} takes {n} parameter(s), got {}", params.len())));
    }
    Ok(())
}

/// Looks up a named group.
///
/// | name | parameters | group |
/// |---|---|---|
/// | `cyclic` | `n` | `C_n` |
/// | `dihedral` | order `2m`, `m ≥ 2` | `⟨x,y | x^m, y², yxy⁻¹ = x⁻¹⟩` |
/// | `quaternion` | order `2ⁿ ≥ 8` | `⟨x,y | x^{2^{n−1}}, y² = x^{2^{n−2}}, yxy⁻¹ = x⁻¹⟩` |
/// | `semidihedral` | order `2ⁿ ≥ 16` | `⟨x,y | x^{2^{n−1}}, y², yxy⁻¹ = x^{2^{n−2}−1}⟩` |
/// | `dicyclic` | order `4k`, `k ≥ 2` | `⟨x,y | x^{2k}, y² = x^k, yxy⁻¹ = x⁻¹⟩` |
/// | `modular` | `p, n` | `M_{pⁿ} = ⟨x,y | x^{p^{n−1}}, y^p, yxy⁻¹ = x^{1+p^{n−2}}⟩` |
/// | `heisenberg` | `p` | unitriangular 3×3 matrices over `F_p` |
/// | `extraspecial` | `p, +/-` | `p^{1+2}_±` (`D₈`/`Q₈` for `p = 2`) |
/// | `symmetric`, `alternating` | `n` | `S_n`, `A_n` |
/// | `example72` | none | `⟨a,b,c | a³=b³=c⁸=1, [a,b]=1, a^c=b, b^c=ab⟩` |
/// | `fermat_family` | Fermat prime `p` | `C_{p²} ⋊ C_{p−1}`, faithful action |
/// | `mersenne_family` | `q = 2^r − 1, r` | `C₄^r ⋊ C_q`, irreducible on `Ω₁` |
pub fn catalog(name: &str, params: &[CatalogParam], limits: &Limits) -> Result<FiniteGroup> {
    match name {
        "cyclic" => {
            arity(name, params, 1)?;
            super::cyclic(params[0].int()? as usize, limits)
        }
        "dihedral" => {
            arity(name, params, 1)?;
            dihedral(params[0].int()? as usize, limits)
        }
        "quaternion" => {
            arity(name, params, 1)?;
            quaternion(params[0].int()? as usize, limits)
        }
        "semidihedral" => {
            arity(name, params, 1)?;
            semidihedral(params[0].int()? as usize, limits)
        }
        "dicyclic" => {
            arity(name, params, 1)?;
            dicyclic(params[0].int()? as usize, limits)
        }
        "modular" => {
            arity(name, params, 2)?;
            modular(params[0].int()?, params[1].int()? as u32, limits)
        }
        "heisenberg" => {
            arity(name, params, 1)?;
            heisenberg(params[0].int()?, limits)
        }
        "extraspecial" => {
            arity(name, params, 2)?;
            let plus = match &params[1] {
                CatalogParam::Sym(s) if s == "+" || s == "plus" => true,
                CatalogParam::Sym(s) if s == "-" || s == "minus" => false,
                other => return Err(bad(format!("extraspecial sign must be + or -, found {other:?}"))),
            };
            extraspecial(params[0].int()?, plus, limits)
        }
        "symmetric" => {
            arity(name, params, 1)?;
            symmetric(params[0].int()? as usize, limits)
        }
        "alternating" => {
            arity(name, params, 1)?;
            alternating(params[0].int()? as usize, limits)
        }
        "example72" => {
            arity(name, params, 0)?;
            example72(limits)
        }
        "fermat_family" => {
            arity(name, params, 1)?;
            fermat_family(params[0].int()?, limits)
        }
        "mersenne_family" => {
            arity(name, params, 2)?;
            mersenne_family(params[0].int()?, params[1].int()? as u32, limits)
        }
        other => Err(bad(format!("unknown catalog entry {other:?}"))),
    }
}

/// `x^i y^j ↦ j·m + i` with `x^m = 1`, `y^s = x^t`, `y x y⁻¹ = x^r`.
fn metacyclic(label: String, m: u64, s: u64, r: u64, t: u64, limits: &Limits) -> Result<FiniteGroup> {
    let n = (m * s) as usize;
    limits.check_order("metacyclic group", n)?;
    let rpow: Vec<u64> = (0..s).map(|j| arith::pow_mod(r, j, m)).collect();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n as u64 {
        let (i, j) = (a % m, a / m);
        for b in 0..n as u64 {
            let (k, l) = (b % m, b / m);
            let mut e = (i + rpow[j as usize] * k) % m;
            let mut f = j + l;
            if f >= s {
                f -= s;
                e = (e + t) % m;
            }
            table.push((f * m + e) as u32);
        }
    }
    FiniteGroup::from_table(label, n, table)
        .map_err(|e| bad(format!("inconsistent metacyclic parameters: {e}")))
}

fn two_power_order(name: &str, order: usize, min: usize) -> Result<u64> {
    if order < min || !order.is_power_of_two() {
        return Err(bad(format!("{name} order must be a power of 2 at least {min}, got {order}")));
    }
    Ok(order as u64)
}

pub fn dihedral(order: usize, limits: &Limits) -> Result<FiniteGroup> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(bad(format!("dihedral order must be even and at least 4, got {order}")));
    }
    let m = order as u64 / 2;
    metacyclic(format!("D{order}"), m, 2, m - 1, 0, limits)
}

pub fn quaternion(order: usize, limits: &Limits) -> Result<FiniteGroup> {
    let n = two_power_order("quaternion", order, 8)?;
    let m = n / 2;
    metacyclic(format!("Q{order}"), m, 2, m - 1, m / 2, limits)
}

pub fn semidihedral(order: usize, limits: &Limits) -> Result<FiniteGroup> {
    let n = two_power_order("semidihedral", order, 16)?;
    let m = n / 2;
    metacyclic(format!("SD{order}"), m, 2, m / 2 - 1, 0, limits)
}

pub fn dicyclic(order: usize, limits: &Limits) -> Result<FiniteGroup> {
    if order < 8 || !order.is_multiple_of(4) {
        return Err(bad(format!("dicyclic order must be a multiple of 4, at least 8, got {order}")));
    }
    let m = order as u64 / 2;
    metacyclic(format!("Dic{order}"), m, 2, m - 1, m / 2, limits)
}

pub fn modular(p: u64, n: u32, limits: &Limits) -> Result<FiniteGroup> {
    if !arith::is_prime(p) {
        return Err(bad(format!("modular group needs a prime, got {p}")));
    }
    let min = if p == 2 { 4 } else { 3 };
    if n < min {
        return Err(bad(format!("M_{{{p}^n}} needs n >= {min}, got {n}")));
    }
    let order = p.checked_pow(n).ok_or_else(|| bad("modular group order overflows"))?;
    limits.check_order("modular group", order as usize)?;
    let m = p.pow(n - 1);
    metacyclic(format!("M{order}"), m, p, 1 + p.pow(n - 2), 0, limits)
}

pub fn heisenberg(p: u64, limits: &Limits) -> Result<FiniteGroup> {
    if !arith::is_prime(p) {
        return Err(bad(format!("heisenberg group needs a prime, got {p}")));
    }
    let n = (p * p * p) as usize;
    limits.check_order("heisenberg group", n)?;
    let dec = |x: u64| (x / (p * p), (x / p) % p, x % p);
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n as u64 {
        let (a, b, c) = dec(x);
        for y in 0..n as u64 {
            let (a2, b2, c2) = dec(y);
            let z = ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p;
            table.push(z as u32);
        }
    }
    FiniteGroup::from_table(format!("Heis({p})"), n, table)
}

pub fn extraspecial(p: u64, plus: bool, limits: &Limits) -> Result<FiniteGroup> {
    let g = match (p, plus) {
        (2, true) => dihedral(8, limits)?,
        (2, false) => quaternion(8, limits)?,
        (_, true) => heisenberg(p, limits)?,
        (_, false) => modular(p, 3, limits)?,
    };
    Ok(g.with_label(format!("{p}^(1+2){}", if plus { "+" } else { "-" })))
}

pub fn symmetric(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(bad("symmetric group of degree 0"));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycles_to_images(n, &[(0..n).collect()])?);
        gens.push(cycles_to_images(n, &[vec![0, 1]])?);
    } else {
        gens.push(vec![0]);
    }
    Ok(from_permutations(n, &gens, limits)?.with_label(format!("S{n}")))
}

/// `A_n` generated by the 3-cycles `(0 1 k)`.
pub fn alternating(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(bad("alternating group of degree 0"));
    }
    let mut gens: Vec<Vec<usize>> =
        (2..n).map(|k| cycles_to_images(n, &[vec![0, 1, k]])).collect::<Result<_>>()?;
    if gens.is_empty() {
        gens.push((0..n).collect());
    }
    Ok(from_permutations(n, &gens, limits)?.with_label(format!("A{n}")))
}

/// Indices of `a`, `b`, `c` in [`example72`].
pub const EXAMPLE72_A: Elem = 24;
pub const EXAMPLE72_B: Elem = 8;
pub const EXAMPLE72_C: Elem = 1;

/// `(C₃ × C₃) ⋊ C₈` with `a^c = b`, `b^c = ab`.
pub fn example72(limits: &Limits) -> Result<FiniteGroup> {
    let act = ActionSpec { images: vec![Word::generator(1), Word::new(vec![(0, 1), (1, 1)])] };
    Ok(semidirect(&AbelianType::new(vec![3, 3])?, 8, &act, limits)?.with_label("Example72"))
}

/// `⟨a⟩ ⋊ ⟨b⟩` with `⟨a⟩ ≅ C_{p²}` and `a^b = a^k`, `k` the smallest unit of
/// multiplicative order `p − 1` modulo `p²`.
pub fn fermat_family(p: u64, limits: &Limits) -> Result<FiniteGroup> {
    if arith::fermat_index(p).is_none() {
        return Err(bad(format!("{p} is not a Fermat prime")));
    }
    let k = unit_of_order(p * p, p - 1).ok_or_else(|| bad("no unit of order p-1 mod p^2"))?;
    let act = ActionSpec { images: vec![Word::new(vec![(0, k as i64)])] };
    Ok(semidirect(&AbelianType::new(vec![p * p])?, (p - 1) as usize, &act, limits)?
        .with_label(format!("Fermat({p})")))
}

/// `C₄^r ⋊ C_q` for a Mersenne prime `q = 2^r − 1`.
///
/// The acting generator is the companion matrix of the smallest irreducible
/// degree-`r` polynomial over `F₂`, taken mod 4 and then raised to the power
/// `q + 1`. That power agrees with the companion matrix mod 2, hence acts
/// irreducibly on `Ω₁(C₄^r)`, and has order exactly `q`.
pub fn mersenne_family(q: u64, r: u32, limits: &Limits) -> Result<FiniteGroup> {
    if arith::mersenne_exponent(q) != Some(r) {
        return Err(bad(format!("{q} is not the Mersenne prime 2^{r} - 1")));
    }
    let m = mersenne_action(r as usize, q);
    let images =
        (0..r as usize).map(|i| Word::new((0..r as usize).map(|j| (j, m[j][i] as i64)).collect())).collect();
    let ptype = AbelianType::homocyclic(2, 2, r as usize)?;
    Ok(semidirect(&ptype, q as usize, &ActionSpec { images }, limits)?
        .with_label(format!("Mersenne({q},{r})")))
}

type Mat = Vec<Vec<u64>>;

fn mat_mul(a: &Mat, b: &Mat, modulus: u64) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum::<u64>() % modulus).collect())
        .collect()
}

fn mat_pow(a: &Mat, mut e: u64, modulus: u64) -> Mat {
    let n = a.len();
    let mut acc: Mat = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base, modulus);
        }
        base = mat_mul(&base, &base, modulus);
        e >>= 1;
    }
    acc
}

/// Whether the `F₂` polynomial with bit mask `f` is irreducible.
fn gf2_irreducible(f: u64) -> bool {
    let deg = 63 - f.leading_zeros();
    for g in 2u64..(1 << (deg / 2 + 1)) {
        if 63 - g.leading_zeros() == 0 {
            continue;
        }
        if gf2_rem(f, g) == 0 {
            return false;
        }
    }
    deg >= 1
}

fn gf2_rem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= db {
        a ^= b << (63 - a.leading_zeros() - db);
    }
    a
}

/// Matrix over `Z/4` (columns are images of basis vectors) used by
/// [`mersenne_family`].
pub(crate) fn mersenne_action(r: usize, q: u64) -> Mat {
    let f = (1u64 << r..1u64 << (r + 1))
        .find(|&f| gf2_irreducible(f))
        .expect("irreducible polynomials exist in every degree");
    // companion matrix of the integer lift of f: e_i -> e_{i+1}, e_{r-1} -> -Σ c_j e_j
    let mut c: Mat = vec![vec![0; r]; r];
    for i in 0..r - 1 {
        c[i + 1][i] = 1;
    }
    for (j, row) in c.iter_mut().enumerate() {
        if f >> j & 1 == 1 {
            row[r - 1] = 3;
        }
    }
    mat_pow(&c, q + 1, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn dihedral_8_order_multiset() {
        let g = dihedral(8, &l()).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.order_statistics(), vec![(1, 1), (2, 5), (4, 2)]);
    }

    #[test]
    fn generalized_quaternion_and_semidihedral() {
        let q16 = quaternion(16, &l()).unwrap();
        assert_eq!(q16.order_statistics(), vec![(1, 1), (2, 1), (4, 10), (8, 4)]);
        let sd16 = semidihedral(16, &l()).unwrap();
        assert_eq!(sd16.order_statistics(), vec![(1, 1), (2, 5), (4, 6), (8, 4)]);
        assert!(quaternion(12, &l()).is_err());
        assert!(semidihedral(8, &l()).is_err());
    }

    #[test]
    fn modular_groups() {
        let m16 = modular(2, 4, &l()).unwrap();
        assert_eq!(m16.order(), 16);
        assert_eq!(m16.exponent(), 8);
        let m27 = modular(3, 3, &l()).unwrap();
        assert_eq!(m27.exponent(), 9);
        assert!(!m27.is_abelian());
        assert!(modular(2, 3, &l()).is_err());
        assert!(modular(4, 3, &l()).is_err());
    }

    #[test]
    fn heisenberg_three() {
        let h = heisenberg(3, &l()).unwrap();
        assert_eq!(h.order(), 27);
        assert_eq!(h.exponent(), 3);
        assert_eq!(h.center().order(), 3);
    }

    #[test]
    fn dihedral_six_matches_s3() {
        let d6 = dihedral(6, &l()).unwrap();
        let s3 = symmetric(3, &l()).unwrap();
        assert_eq!(d6.order_statistics(), s3.order_statistics());
    }

    #[test]
    fn example72_presentation() {
        let g = example72(&l()).unwrap();
        assert_eq!(g.order(), 72);
        let (a, b, c) = (EXAMPLE72_A, EXAMPLE72_B, EXAMPLE72_C);
        assert_eq!(g.elem_order(a), 3);
        assert_eq!(g.elem_order(b), 3);
        assert_eq!(g.elem_order(c), 8);
        assert!(g.commute(a, b));
        assert_eq!(g.conj(a, c), b);
        assert_eq!(g.conj(b, c), g.mul(a, b));
    }

    #[test]
    fn fermat_five() {
        let g = fermat_family(5, &l()).unwrap();
        assert_eq!(g.order(), 100);
        // b = index 1 acts as a -> a^7, a = index 4 (p-part index 1 times q = 4)
        assert_eq!(g.conj(4, 1), g.pow(4, 7));
        assert!(fermat_family(7, &l()).is_err());
    }

    #[test]
    fn mersenne_matrix_has_order_q_and_is_irreducible_mod_2() {
        for (q, r) in [(3u64, 2usize), (7, 3), (31, 5)] {
            let m = mersenne_action(r, q);
            let id: Mat = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
            assert_eq!(mat_pow(&m, q, 4), id);
            assert_ne!(m, id);
            // irreducible mod 2: no nonzero proper invariant subspace, i.e. the
            // orbit of every nonzero vector spans everything; for prime q with
            // r = ord_q(2) this is equivalent to having no fixed nonzero vector
            // and minimal polynomial of degree r, which we check by brute force
            let m2: Mat = m.iter().map(|row| row.iter().map(|x| x % 2).collect()).collect();
            for v in 1u64..(1 << r) {
                let mut span = std::collections::HashSet::new();
                let mut frontier = vec![v];
                span.insert(0u64);
                while let Some(x) = frontier.pop() {
                    let closure: Vec<u64> = span.iter().map(|&s| s ^ x).collect();
                    for s in closure {
                        if span.insert(s) {
                            frontier.push(s);
                        }
                    }
                    let img = (0..r).fold(0u64, |acc, i| {
                        let bit = (0..r).fold(0, |b, j| b ^ (m2[i][j] * ((x >> j) & 1)));
                        acc | (bit << i)
                    });
                    if !span.contains(&img) {
                        frontier.push(img);
                    }
                }
                assert_eq!(span.len(), 1 << r, "invariant subspace through {v:b}");
            }
        }
    }

    #[test]
    fn mersenne_three_two() {
        let g = mersenne_family(3, 2, &l()).unwrap();
        assert_eq!(g.order(), 48);
        assert!(mersenne_family(7, 2, &l()).is_err());
        assert!(mersenne_family(15, 4, &l()).is_err());
    }

    #[test]
    fn unknown_and_malformed_entries() {
        assert!(catalog("nope", &[], &l()).is_err());
        assert!(catalog("dihedral", &[], &l()).is_err());
        assert!(catalog("dihedral", &[CatalogParam::Sym("x".into())], &l()).is_err());
        let g =
            catalog("extraspecial", &[CatalogParam::Int(2), CatalogParam::Sym("-".into())], &l()).unwrap();
        assert_eq!(g.order_statistics(), vec![(1, 1), (2, 1), (4, 6)]);
    }
}
