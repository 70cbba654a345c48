//! Integer primality and factorization helpers.
//!
//! Deterministic Miller–Rabin witnesses cover every integer below 3.3e24,
//! far past anything the criteria ever test; beyond that the same witness
//! set acts as a strong probabilistic test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Miller–Rabin witnesses; deterministic for n < 3 317 044 064 679 887 385 961 981.
const WITNESSES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Primality of `n` (negative inputs and 0/1 are composite by convention).
pub fn is_prime(n: &BigInt) -> bool {
    if n <= &BigInt::one() {
        return false;
    }
    let two = BigInt::from(2);
    if n == &two {
        return true;
    }
    if n.is_even() {
        return false;
    }
    for p in [3u32, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // n - 1 = d * 2^s with d odd
    let n_minus_1 = n - BigInt::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in WITNESSES {
        let a = BigInt::from(a);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigInt::from(n))
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: &BigInt) -> BigInt {
    let mut candidate = if n < &BigInt::from(2) {
        BigInt::from(2)
    } else if n == &BigInt::from(2) {
        BigInt::from(3)
    } else {
        let mut c = n + BigInt::one();
        if c.is_even() {
            c += 1;
        }
        c
    };
    while !is_prime(&candidate) {
        candidate += if candidate == BigInt::from(2) { BigInt::one() } else { BigInt::from(2) };
    }
    candidate
}

/// Prime factorization of |n| as ascending (prime, exponent) pairs.
/// `n` must be non-zero; zero returns an empty list.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if n <= BigInt::one() {
        return out;
    }
    let push = |p: BigInt, e: u32, out: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = out.last_mut() {
            if last.0 == p {
                last.1 += e;
                return;
            }
        }
        out.push((p, e));
    };
    for p in 2u64.. {
        if p > 100_000 || BigInt::from(p) * BigInt::from(p) > n {
            break;
        }
        let p_big = BigInt::from(p);
        let mut e = 0u32;
        while (&n % &p_big).is_zero() {
            n /= &p_big;
            e += 1;
        }
        if e > 0 {
            push(p_big, e, &mut out);
        }
    }
    if n > BigInt::one() {
        // Remaining cofactor: prime, or cracked recursively via Pollard rho.
        let mut stack = vec![n];
        let mut found: Vec<BigInt> = Vec::new();
        while let Some(m) = stack.pop() {
            if is_prime(&m) {
                found.push(m);
            } else {
                let d = pollard_rho(&m);
                stack.push(&m / &d);
                stack.push(d);
            }
        }
        found.sort();
        for p in found {
            push(p, 1, &mut out);
        }
        // Merge duplicates that arrived separately and restore ascending order.
        out.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(BigInt, u32)> = Vec::new();
        for (p, e) in out {
            if let Some(last) = merged.last_mut() {
                if last.0 == p {
                    last.1 += e;
                    continue;
                }
            }
            merged.push((p, e));
        }
        return merged;
    }
    out
}

/// Brent-cycle Pollard rho; `n` must be odd, composite, and not a prime power
/// handled upstream. Always returns a non-trivial divisor.
fn pollard_rho(n: &BigInt) -> BigInt {
    let one = BigInt::one();
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        let f = |v: &BigInt| (v * v + &c) % n;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = (&x - &y).abs();
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && &d != n {
            return d;
        }
        c += &one;
    }
}

/// Floor square root of a non-negative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative integer");
    n.sqrt()
}

/// Exact square root: `Some(r)` with r >= 0 and r^2 = n, if one exists.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primality() {
        let primes: Vec<u64> = (2..100).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        );
    }

    #[test]
    fn larger_primality() {
        assert!(is_prime(&BigInt::from(1_000_003)));
        assert!(!is_prime(&BigInt::from(1_000_001))); // 101 * 9901
        assert!(is_prime(&BigInt::from(2u64.pow(61) - 1)));
        assert!(!is_prime(&(BigInt::from(2u64.pow(31) - 1) * BigInt::from(2u64.pow(61) - 1))));
    }

    #[test]
    fn factorization_round_trips() {
        for n in [2u64, 12, 360, 1771561, 999_999_937, 600_851_475_143] {
            let n = BigInt::from(n);
            let fac = factorize(&n);
            let mut prod = BigInt::one();
            for (p, e) in &fac {
                assert!(is_prime(p), "non-prime factor {p}");
                prod *= p.pow(*e);
            }
            assert_eq!(prod, n);
            let mut sorted = fac.clone();
            sorted.sort_by(|a, b| a.0.cmp(&b.0));
            assert_eq!(sorted, fac, "factors not ascending");
        }
    }

    #[test]
    fn eleven_to_the_sixth() {
        assert_eq!(factorize(&BigInt::from(1771561)), vec![(BigInt::from(11), 6)]);
    }

    #[test]
    fn next_prime_walks() {
        assert_eq!(next_prime(&BigInt::from(0)), BigInt::from(2));
        assert_eq!(next_prime(&BigInt::from(2)), BigInt::from(3));
        assert_eq!(next_prime(&BigInt::from(13)), BigInt::from(17));
        assert_eq!(next_prime(&BigInt::from(89)), BigInt::from(97));
    }

    #[test]
    fn square_detection() {
        assert_eq!(perfect_sqrt(&BigInt::from(0)), Some(BigInt::from(0)));
        assert_eq!(perfect_sqrt(&BigInt::from(49)), Some(BigInt::from(7)));
        assert_eq!(perfect_sqrt(&BigInt::from(50)), None);
        assert_eq!(perfect_sqrt(&BigInt::from(-4)), None);
    }
}
