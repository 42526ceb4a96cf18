//! Small integer arithmetic used throughout: factorization, prime powers,
//! gcd/lcm and modular exponentiation. Trial division is plenty at the group
//! orders this crate handles.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(p, e)` pairs with increasing `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// `Some((p, k))` when `n = p^k` with `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// The largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// `log_p(n)` when `n` is an exact power of `p` (including `p^0 = 1`).
pub fn exact_log(n: u64, p: u64) -> Option<u32> {
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        if !m.is_multiple_of(p) {
            return None;
        }
        m /= p;
        k += 1;
    }
    (m == 1).then_some(k)
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `a` modulo `m`, or `None` if `gcd(a, m) != 1`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * (a % m) % m;
        k += 1;
    }
    Some(k)
}

/// `Some(n)` when `p = 2^(2^n) + 1` is a prime. The prime 2 is excluded.
pub fn fermat_index(p: u64) -> Option<u32> {
    if p < 3 || !is_prime(p) {
        return None;
    }
    let k = exact_log(p - 1, 2)?;
    exact_log(k as u64, 2)
}

/// `Some(r)` when `q = 2^r - 1` is a prime.
pub fn mersenne_exponent(q: u64) -> Option<u32> {
    if !is_prime(q) {
        return None;
    }
    exact_log(q + 1, 2)
}
