//! Integer factorization utilities: sieve, deterministic Miller–Rabin,
//! bounded trial division, and exact squarefree decomposition.
//!
//! Everything here either finishes exactly or reports
//! [`crate::Error::FactorizationIncomplete`]; no probabilistic answer is
//! ever returned as fact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rat::perfect_sqrt;

/// Default trial-division bound.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Primes up to `bound` inclusive, by sieve of Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut is_comp = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !is_comp[p] {
            primes.push(p as u64);
            let mut q = p * p;
            while q <= n {
                is_comp[q] = true;
                q += p;
            }
        }
    }
    primes
}

fn mulmod_u128(a: u128, b: u128, m: u128) -> u128 {
    // m stays below 2^64 here, so the product fits in u128.
    (a * b) % m
}

fn powmod_u128(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_u128(acc, b, m);
        }
        b = mulmod_u128(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for u64 inputs (the chosen base set decides
/// all n below 3.3e24).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u128(a as u128, d as u128, n as u128);
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u128(x, x, n as u128);
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic Miller–Rabin with the 12-prime base set. Sound for all
/// inputs below 3.3e24; larger inputs are rejected so that no probabilistic
/// claim escapes.
pub fn is_prime(n: &BigInt) -> crate::Result<bool> {
    if n.is_negative() {
        return Ok(false);
    }
    if let Some(v) = n.to_u64() {
        return Ok(is_prime_u64(v));
    }
    let limit: BigInt = "3317044064679887385961981".parse().unwrap();
    if *n >= limit {
        return Err(crate::Error::FactorizationIncomplete(format!(
            "{n} exceeds the deterministic Miller-Rabin range"
        )));
    }
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigInt::from(a);
        if &a % n == BigInt::zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Complete factorization of `n > 0` as sorted (prime, exponent) pairs,
/// via trial division up to `bound` and exact cleanup of the cofactor
/// (primality test, perfect-square split). Errors when the cofactor cannot
/// be resolved exactly.
pub fn factorize(n: &BigInt, bound: u64) -> crate::Result<Vec<(BigInt, u32)>> {
    if !n.is_positive() {
        return Err(crate::Error::InvalidInput(format!(
            "factorize needs a positive integer, got {n}"
        )));
    }
    let mut rest = n.clone();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for p in primes_up_to(bound) {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
    }
    if rest.is_one() {
        return Ok(out);
    }
    if is_prime(&rest)? {
        out.push((rest, 1));
        return Ok(out);
    }
    // All prime factors of the cofactor exceed `bound`. A perfect square of
    // a prime is still resolvable exactly.
    if let Some(s) = perfect_sqrt(&rest) {
        if is_prime(&s)? {
            out.push((s, 2));
            return Ok(out);
        }
    }
    Err(crate::Error::FactorizationIncomplete(format!(
        "composite cofactor {rest} has no prime factor below {bound}"
    )))
}

/// Writes `n = m^2 * d` with d squarefree and sign(d) = sign(n);
/// returns `(m, d)` with m > 0.
pub fn squarefree_part(n: &BigInt, bound: u64) -> crate::Result<(BigInt, BigInt)> {
    if n.is_zero() {
        return Err(crate::Error::InvalidInput(
            "squarefree part of 0 is undefined".into(),
        ));
    }
    let factors = factorize(&n.abs(), bound)?;
    let mut m = BigInt::one();
    let mut d = BigInt::one();
    for (p, e) in factors {
        if e >= 2 {
            m *= p.pow(e / 2);
        }
        if e % 2 == 1 {
            d *= p;
        }
    }
    if n.is_negative() {
        d = -d;
    }
    Ok((m, d))
}

/// Kronecker symbol (a|n) for odd prime n, via Euler's criterion.
pub fn legendre_symbol(a: &BigInt, p: u64) -> i32 {
    debug_assert!(p > 2 && is_prime_u64(p));
    let bp = BigInt::from(p);
    let r = a.mod_floor(&bp);
    if r.is_zero() {
        return 0;
    }
    let e = BigInt::from((p - 1) / 2);
    let s = r.modpow(&e, &bp);
    if s.is_one() {
        1
    } else {
        -1
    }
}

/// Kronecker symbol (d|2): 0 for even d, +1 for d ≡ ±1 (mod 8),
/// −1 for d ≡ ±3 (mod 8).
pub fn kronecker_symbol_two(d: &BigInt) -> i32 {
    let r = d.mod_floor(&BigInt::from(8)).to_u64().unwrap();
    match r {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_sieve_matches_primality() {
        let sieved = primes_up_to(1000);
        let scanned: Vec<u64> = (2..=1000).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(sieved, scanned);
        assert_eq!(sieved.len(), 168);
    }

    #[test]
    fn test_is_prime_known_values() {
        for p in [2u64, 3, 5, 1093, 3511, 1_000_003] {
            assert!(is_prime(&BigInt::from(p)).unwrap(), "{p}");
        }
        for c in [1u64, 4, 1093 * 3511, 1_000_001] {
            assert!(!is_prime(&BigInt::from(c)).unwrap(), "{c}");
        }
        // Strong pseudoprime to several small bases.
        assert!(!is_prime(&BigInt::from(3215031751u64)).unwrap());
    }

    #[test]
    fn test_factorize_small() {
        let f = factorize(&BigInt::from(5040), DEFAULT_FACTOR_BOUND).unwrap();
        let expect = [(2, 4), (3, 2), (5, 1), (7, 1)];
        assert_eq!(
            f,
            expect
                .iter()
                .map(|&(p, e)| (BigInt::from(p), e))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn test_factorize_incomplete_semiprime() {
        // Two primes just above a tiny bound: unresolvable at bound 10.
        let n = BigInt::from(101u64 * 103);
        assert!(matches!(
            factorize(&n, 10),
            Err(crate::Error::FactorizationIncomplete(_))
        ));
        // Square of a prime above the bound is still exact.
        let sq = BigInt::from(101u64 * 101);
        assert_eq!(factorize(&sq, 10).unwrap(), vec![(BigInt::from(101), 2)]);
    }

    #[test]
    fn test_squarefree_part() {
        let (m, d) = squarefree_part(&BigInt::from(-127), DEFAULT_FACTOR_BOUND).unwrap();
        assert_eq!((m, d), (BigInt::one(), BigInt::from(-127)));
        let (m, d) = squarefree_part(&BigInt::from(-500), DEFAULT_FACTOR_BOUND).unwrap();
        assert_eq!((m, d), (BigInt::from(10), BigInt::from(-5)));
        let (m, d) = squarefree_part(&BigInt::from(36), DEFAULT_FACTOR_BOUND).unwrap();
        assert_eq!((m, d), (BigInt::from(6), BigInt::one()));
        // Exactness against brute force on a range of small integers.
        for n in 2i64..500 {
            let (m, d) = squarefree_part(&BigInt::from(n), DEFAULT_FACTOR_BOUND).unwrap();
            assert_eq!(&m * &m * &d, BigInt::from(n));
            let d = d.to_u64().unwrap();
            for k in 2u64..=31 {
                assert!(d % (k * k) != 0, "d = {d} not squarefree");
            }
        }
    }

    #[test]
    fn test_legendre() {
        // Squares mod 11 are {1, 3, 4, 5, 9}.
        let squares = [1i64, 3, 4, 5, 9];
        for a in 1..11i64 {
            let expect = if squares.contains(&a) { 1 } else { -1 };
            assert_eq!(legendre_symbol(&BigInt::from(a), 11), expect, "({a}|11)");
        }
        assert_eq!(legendre_symbol(&BigInt::from(-127), 5), -1);
        assert_eq!(legendre_symbol(&BigInt::from(-127), 11), 1);
        assert_eq!(kronecker_symbol_two(&BigInt::from(-127)), 1);
        assert_eq!(kronecker_symbol_two(&BigInt::from(-3)), -1);
    }
}
