//! Word-sized modular integer helpers.

/// Upper bound on every modulus handled by the crate.
pub const MODULUS_CAP: u64 = 1 << 31;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
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

/// Distinct prime divisors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `base^exp`, or `None` when the result exceeds [`MODULUS_CAP`].
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > MODULUS_CAP {
            return None;
        }
    }
    Some(acc)
}

#[inline]
pub fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, q);
        }
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `q`, if it exists.
pub fn inv_mod(a: u64, q: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % q as i128, q as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quo = old_r / r;
        (old_r, r) = (r, old_r - quo * r);
        (old_s, s) = (s, old_s - quo * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(q as i128) as u64)
}

/// p-adic valuation of `a` inside `Z/p^n`; zero has valuation `n`.
pub fn valuation(a: u64, p: u64, n: u32) -> u32 {
    if a == 0 {
        return n;
    }
    let mut v = 0;
    let mut a = a;
    while a.is_multiple_of(p) && v < n {
        a /= p;
        v += 1;
    }
    v
}

#[inline]
pub fn neg_mod(a: u64, q: u64) -> u64 {
    if a == 0 {
        0
    } else {
        q - a
    }
}

/// Multiplicative order of `b` modulo `n` (requires gcd(b, n) = 1; order 1 when n = 1).
pub fn mult_order(b: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let b = b % n;
    let mut acc = b;
    let mut ord = 1;
    while acc != 1 {
        acc = mul_mod(acc, b, n);
        ord += 1;
    }
    ord
}

pub fn reduce_signed(a: i64, q: u64) -> u64 {
    a.rem_euclid(q as i64) as u64
}
