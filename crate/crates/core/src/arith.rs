//! Modular arithmetic helpers on `u64` values.
//!
//! All moduli used in this crate are primes below 2^31, so products of two
//! reduced residues fit in a `u64` without overflow.

/// Largest modulus accepted by the prime-field kernels.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Deterministic trial-division primality test (moduli are < 2^31).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `b^e mod p` by square-and-multiply.
pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    debug_assert!(p > 0 && p <= MAX_MODULUS);
    b %= p;
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Inverse of `a` mod prime `p`; `None` when `a ≡ 0`.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    Some(pow_mod(a, p - 2, p))
}

/// Reduce a signed integer into `[0, p)`.
pub fn reduce_i64(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(5));
        assert!(is_prime(32003));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
        assert!(!is_prime(4));
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 32003] {
            for a in 1..p.min(50) {
                let inv = inv_mod(a, p).unwrap();
                assert_eq!(a * inv % p, 1);
            }
        }
        assert_eq!(inv_mod(0, 5), None);
    }

    #[test]
    fn signed_reduction() {
        assert_eq!(reduce_i64(-2, 5), 3);
        assert_eq!(reduce_i64(-2, 3), 1);
        assert_eq!(reduce_i64(7, 5), 2);
    }
}
