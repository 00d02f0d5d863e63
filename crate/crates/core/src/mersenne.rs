//! The Lucas-Lehmer integer sequence and the classical Mersenne primality
//! test built on it (OEIS A003010).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// First `count` terms of s_1 = 4, s_{k+1} = s_k^2 - 2.
///
/// The terms equal the n-th map iterate of the L family evaluated at sqrt 6.
pub fn ll_integer_sequence(count: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count as usize);
    let mut s = BigInt::from(4);
    for _ in 0..count {
        out.push(s.clone());
        s = &s * &s - 2;
    }
    out
}

/// Trial-division primality check for small exponents.
pub fn is_small_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Reduce a nonnegative value modulo the Mersenne number m = 2^p - 1 using
/// shift-and-add folding.
fn mod_mersenne(mut x: BigInt, p: u64, m: &BigInt) -> BigInt {
    while x.bits() > p {
        x = (&x & m) + (x >> p);
    }
    if &x == m {
        BigInt::zero()
    } else {
        x
    }
}

/// Lucas-Lehmer test: 2^p - 1 is prime iff s_{p-2} = 0 where
/// s_0 = 4, s_{k+1} = s_k^2 - 2 (mod 2^p - 1). Requires p to be an odd prime.
pub fn mersenne_test(p: u64) -> Result<bool> {
    if p < 3 || !is_small_prime(p) {
        return Err(Error::InvalidExponent { p });
    }
    let m: BigInt = (BigInt::one() << p) - 1;
    let mut s = BigInt::from(4);
    for _ in 0..(p - 2) {
        s = mod_mersenne(&s * &s, p, &m);
        s -= 2;
        if s < BigInt::zero() {
            s += &m;
        }
    }
    Ok(s.is_zero())
}
