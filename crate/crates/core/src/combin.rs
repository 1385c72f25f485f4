//! Integer combinatorics: binomial coefficients, divisors, primes, totient.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rat::Int;

/// C(n, k) with the out-of-range convention C(n, k) = 0 for k < 0 or k > n.
pub fn binom(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// C(n, k) for big `n >= 0` (used by Fleck sums over long Pascal rows).
pub fn binom_big(n: &Int, k: &Int) -> Int {
    assert!(!n.is_negative(), "binom_big: negative row");
    if k.is_negative() || k > n {
        return Int::zero();
    }
    let k = k.min(&(n - k)).clone();
    let mut acc = Int::one();
    let mut i = Int::zero();
    while i < k {
        acc = acc * (n - &i) / (&i + 1);
        i += 1;
    }
    acc
}

pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// All divisors of `n >= 1` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler totient.
pub fn totient(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in prime_factors(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

pub fn is_power_of_two(n: u64) -> bool {
    n >= 1 && n & (n - 1) == 0
}

/// Kronecker symbol (5/p) for p prime; 0 when p = 5.
pub fn kronecker5(p: u64) -> i64 {
    if p == 5 {
        return 0;
    }
    if p == 2 {
        // (5/2) = (2/5) = -1
        return -1;
    }
    match p % 5 {
        1 | 4 => 1,
        _ => -1,
    }
}

/// gcd of two big integers, always nonnegative.
pub fn gcd_big(a: &Int, b: &Int) -> Int {
    num_integer::Integer::gcd(a, b)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

/// `2^k` as a big integer, any sign of k not supported (k >= 0).
pub fn two_pow(k: u64) -> Int {
    BigInt::one() << k as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_small_and_conventions() {
        assert_eq!(binom(4, 2), Int::from(6));
        assert_eq!(binom(5, -1), Int::from(0));
        assert_eq!(binom(3, 7), Int::from(0));
    }

    #[test]
    fn binom_cross_checked_by_pascal() {
        // Pascal-recurrence oracle, independent of the multiplicative formula.
        let mut row = alloc::vec![Int::one()];
        for n in 1..=17u64 {
            let mut next = alloc::vec![Int::one()];
            for k in 1..n as usize {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(Int::one());
            row = next;
            let _ = n;
        }
        assert_eq!(row[13], Int::from(2380));
        assert_eq!(binom(17, 13), Int::from(2380));
        for k in 0..=17i64 {
            assert_eq!(binom(17, k), row[k as usize]);
        }
    }

    #[test]
    fn divisor_and_prime_helpers() {
        assert_eq!(divisors(12), alloc::vec![1, 2, 3, 4, 6, 12]);
        assert!(is_prime(223));
        assert!(!is_prime(221));
        assert_eq!(prime_factors(360), alloc::vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(totient(120), 32);
        assert!(is_power_of_two(64));
        assert!(!is_power_of_two(96));
    }

    #[test]
    fn kronecker_five() {
        assert_eq!(kronecker5(11), 1);
        assert_eq!(kronecker5(7), -1);
        assert_eq!(kronecker5(2), -1);
        assert_eq!(kronecker5(5), 0);
    }
}
