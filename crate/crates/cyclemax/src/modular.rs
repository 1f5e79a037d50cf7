//! Word-sized modular arithmetic used by the residue fast path of the block
//! permanent: Montgomery multiplication, deterministic primality testing for
//! generating 62-bit prime moduli, and Chinese-remainder reconstruction.

use num_bigint::BigUint;
use num_traits::Zero;

/// Montgomery multiplication context for an odd modulus below 2^62.
#[derive(Clone, Copy, Debug)]
pub struct Montgomery {
    pub p: u64,
    ninv: u64, // -p^{-1} mod 2^64
    r2: u64,   // 2^128 mod p
}

impl Montgomery {
    pub fn new(p: u64) -> Self {
        assert!(p % 2 == 1 && p > 1 && p < 1 << 62);
        // Newton iteration doubles correct low bits each step.
        let mut inv = p;
        for _ in 0..5 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let ninv = inv.wrapping_neg();
        let r2 = ((u128::MAX % p as u128 + 1) % p as u128) as u64;
        Montgomery { p, ninv, r2 }
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.ninv);
        let t = (t + m as u128 * self.p as u128) >> 64;
        let t = t as u64;
        if t >= self.p {
            t - self.p
        } else {
            t
        }
    }

    /// Convert into Montgomery form.
    #[inline]
    pub fn to_mont(&self, a: u64) -> u64 {
        debug_assert!(a < self.p);
        self.redc(a as u128 * self.r2 as u128)
    }

    /// Convert out of Montgomery form.
    #[inline]
    pub fn from_mont(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    /// Product of two values already in Montgomery form.
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for u64 (the listed bases cover the range).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The first `count` primes at or below 2^62 − 1, descending.
pub fn primes_below_2_62(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = (1u64 << 62) - 1;
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

/// Combine residues `r[i] mod p[i]` (pairwise coprime moduli) into the
/// unique value below the product of the moduli.
pub fn crt_combine(residues: &[u64], moduli: &[u64]) -> BigUint {
    assert_eq!(residues.len(), moduli.len());
    let mut x = BigUint::zero();
    let mut big_m = BigUint::from(1u32);
    for (&r, &p) in residues.iter().zip(moduli) {
        // Solve x + m*t = r (mod p) for t.
        let xi = (&x % p).to_u64_digits().first().copied().unwrap_or(0);
        let mi = (&big_m % p).to_u64_digits().first().copied().unwrap_or(0);
        let diff = if r >= xi { r - xi } else { r + p - xi };
        let t = mulmod(diff, inverse_mod(mi, p), p);
        x += &big_m * t;
        big_m *= p;
    }
    x
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid; p prime and a nonzero mod p.
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn montgomery_round_trip() {
        for p in primes_below_2_62(3) {
            let mont = Montgomery::new(p);
            for a in [0u64, 1, 2, 12345, p - 1, p / 2] {
                assert_eq!(mont.from_mont(mont.to_mont(a)), a);
            }
            let (a, b) = (p - 3, p - 7);
            let want = mulmod(a, b, p);
            let got = mont.from_mont(mont.mul(mont.to_mont(a), mont.to_mont(b)));
            assert_eq!(got, want);
        }
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2) && is_prime(3) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(0) && !is_prime(91) && !is_prime(561));
        assert!(is_prime(4611686018427387847)); // just below 2^62
        for p in primes_below_2_62(10) {
            assert!(is_prime(p));
        }
    }

    #[test]
    fn crt_reconstruction() {
        let moduli = primes_below_2_62(4);
        let value = BigUint::parse_bytes(b"123456789012345678901234567890123456789012345", 10)
            .unwrap();
        let residues: Vec<u64> = moduli
            .iter()
            .map(|&p| (&value % p).to_u64_digits().first().copied().unwrap_or(0))
            .collect();
        assert_eq!(crt_combine(&residues, &moduli), value);
    }
}
