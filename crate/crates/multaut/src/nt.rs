//! Elementary number theory on machine integers: gcd, trial-division
//! factorization, Euler's totient, modular exponentiation, inverses, and
//! multiplicative orders. Sized for moduli up to 2^16; nothing here tries
//! to be clever.

use crate::Error;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// extended Euclid: g = gcd(a,b) and x, y with a*x + b*y = g
fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division: ascending `(prime, multiplicity)`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// Euler's totient: the number of k in [1, m] with gcd(k, m) = 1, via the
/// product formula over the prime factorization. `euler_phi(1) = 1`.
pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1, "euler_phi needs m >= 1");
    let mut phi = m;
    for (p, _) in factorize(m) {
        phi = phi / p * (p - 1);
    }
    phi
}

pub fn mod_pow(a: u64, mut e: u64, m: u64) -> u64 {
    assert!(m >= 1);
    if m == 1 {
        return 0;
    }
    // square and multiply
    let m = m as u128;
    let mut base = a as u128 % m;
    let mut acc: u128 = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, in [0, m). Errors when gcd(a, m) ≠ 1.
pub fn mod_inverse(a: u64, m: u64) -> Result<u64, Error> {
    assert!(m >= 1);
    if m == 1 {
        return Ok(0);
    }
    let (g, x, _) = egcd(a as i128 % m as i128, m as i128);
    if g != 1 {
        return Err(Error::NotCoprime { value: a, modulus: m });
    }
    Ok(x.rem_euclid(m as i128) as u64)
}

/// Least k ≥ 1 with a^k ≡ 1 (mod m), by iterated multiplication. Accepts
/// m = 1 (the trivial group) and returns 1 there.
pub fn multiplicative_order(a: u64, m: u64) -> Result<u64, Error> {
    assert!(m >= 1);
    if m == 1 {
        return Ok(1);
    }
    let a = a % m;
    if gcd(a, m) != 1 {
        return Err(Error::NotCoprime { value: a, modulus: m });
    }
    let mut k = 1u64;
    let mut acc = a;
    while acc != 1 {
        acc = (acc as u128 * a as u128 % m as u128) as u64;
        k += 1;
    }
    Ok(k)
}
