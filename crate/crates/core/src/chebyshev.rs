//! Chebyshev polynomials of the first and second kind and the exact
//! identities linking them to the iterated map:
//!
//!   p_n(x)              = (1/a) * T_{2^(n-1)}(2a^2 x^2 - 1)
//!   prod_{i=1}^n p_i(x) = (1/2a)^n * U_{2^n - 1}(2a^2 x^2 - 1)
//!
//! (a = 1/2 gives the classical forms with the substitution x^2/2 - 1.)
//! Identities are verified by exact coefficient equality, never numerically.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bigreal::BigReal;
use crate::error::{Error, Result};
use crate::family::{build_poly, eval_map, guard_bits, MapParams};
use crate::poly::ExactPoly;

/// First kind (T) or second kind (U).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChebKind {
    First,
    Second,
}

fn check_degree(degree: u64, cap: u32) -> Result<()> {
    let cap_degree = 1u64 << cap.min(63);
    if degree > cap_degree {
        return Err(Error::DegreeCap {
            degree,
            cap_n: cap,
            cap_degree,
        });
    }
    Ok(())
}

/// Exact integer coefficients of T_n or U_n via the shared recurrence
/// p_k = 2x p_{k-1} - p_{k-2} (seeds T_0 = 1, T_1 = x; U_0 = 1, U_1 = 2x).
pub fn cheb_poly(kind: ChebKind, n: u32, cap: u32) -> Result<ExactPoly> {
    check_degree(n as u64, cap)?;
    let one = ExactPoly::one();
    if n == 0 {
        return Ok(one);
    }
    let first = match kind {
        ChebKind::First => ExactPoly::x(),
        ChebKind::Second => ExactPoly::from_integers(&[0, 2]),
    };
    if n == 1 {
        return Ok(first);
    }
    let two_x = ExactPoly::from_integers(&[0, 2]);
    let mut prev = one;
    let mut cur = first;
    for _ in 2..=n {
        let next = two_x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Substitute t(x) = 2a^2 x^2 - 1 into p, expanding exactly.
///
/// The Horner loop runs on a scaled-integer form (one shared denominator)
/// so no per-step gcd reduction is needed; coefficients are normalized once
/// at the end.
pub fn compose_shift(p: &ExactPoly, params: &MapParams, cap: u32) -> Result<ExactPoly> {
    if p.is_zero() {
        return Ok(ExactPoly::zero());
    }
    let deg = p.degree().expect("nonzero") as u64;
    check_degree(deg * 2, cap)?;

    // clear the denominators of p: p = P / d with P integral
    let d = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let int_coeffs: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&d / c.denom()))
        .collect();

    // t(x) = (2u^2 x^2 - v^2) / v^2 for a = u/v
    let u = params.a().numer();
    let v = params.a().denom();
    let t2 = 2 * u * u;
    let t0 = -(v * v);
    let tden = v * v;

    // Horner on (nums, den): r <- r*t + P_k
    let mut nums: Vec<BigInt> = vec![int_coeffs.last().expect("nonzero").clone()];
    let mut den = BigInt::one();
    for k in (0..int_coeffs.len() - 1).rev() {
        let mut next = vec![BigInt::zero(); nums.len() + 2];
        for (i, c) in nums.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[i] += c * &t0;
            next[i + 2] += c * &t2;
        }
        den *= &tden;
        next[0] += &int_coeffs[k] * &den;
        nums = next;
    }

    let full_den = den * d;
    Ok(ExactPoly::from_coeffs(
        nums.into_iter()
            .map(|n| BigRational::new(n, full_den.clone()))
            .collect(),
    ))
}

/// Index and both values of the first coefficient where two expansions
/// disagree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffMismatch {
    pub index: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// Outcome of an exact identity check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityReport {
    pub holds: bool,
    pub first_mismatch: Option<CoeffMismatch>,
}

fn diff_report(lhs: &ExactPoly, rhs: &ExactPoly) -> IdentityReport {
    let len = lhs.coeffs().len().max(rhs.coeffs().len());
    for i in 0..len {
        let (a, b) = (lhs.coeff(i), rhs.coeff(i));
        if a != b {
            return IdentityReport {
                holds: false,
                first_mismatch: Some(CoeffMismatch {
                    index: i,
                    lhs: a,
                    rhs: b,
                }),
            };
        }
    }
    IdentityReport {
        holds: true,
        first_mismatch: None,
    }
}

/// Check p_n(x) = (1/a) T_{2^(n-1)}(t(x)) coefficient for coefficient.
pub fn verify_t_identity(params: &MapParams, n: u32, cap: u32) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::OutOfDomain {
            what: "n",
            value: "0".into(),
            domain: "[1, cap]",
        });
    }
    let lhs = build_poly(params, n, cap)?;
    let t = cheb_poly(ChebKind::First, 1 << (n - 1), cap)?;
    let rhs = compose_shift(&t, params, cap)?.scaled(&params.t_scale());
    Ok(diff_report(&lhs, &rhs))
}

/// Check prod_{i=1}^n p_i(x) = (1/2a)^n U_{2^n - 1}(t(x)) coefficient for
/// coefficient.
pub fn verify_u_identity(params: &MapParams, n: u32, cap: u32) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::OutOfDomain {
            what: "n",
            value: "0".into(),
            domain: "[1, cap]",
        });
    }
    let mut lhs = ExactPoly::one();
    let mut iterate = ExactPoly::x();
    for _ in 1..=n {
        iterate = params.step_poly(&iterate);
        lhs = lhs.mul(&iterate);
    }
    let u = cheb_poly(ChebKind::Second, (1u32 << n) - 1, cap)?;
    let mut scale = BigRational::one();
    for _ in 0..n {
        scale *= params.u_scale();
    }
    let rhs = compose_shift(&u, params, cap)?.scaled(&scale);
    Ok(diff_report(&lhs, &rhs))
}

/// (U_n(1), U_n(-1)) by exact evaluation; equals (n+1, (-1)^n (n+1)).
pub fn u_endpoint(n: u32, cap: u32) -> Result<(BigInt, BigInt)> {
    let u = cheb_poly(ChebKind::Second, n, cap)?;
    let one = BigRational::one();
    let at_one = u.eval(&one);
    let at_minus_one = u.eval(&-one);
    debug_assert!(at_one.is_integer() && at_minus_one.is_integer());
    Ok((at_one.to_integer(), at_minus_one.to_integer()))
}

/// Residual of the sine-quotient form of the product identity:
/// | prod_{i=1}^n L_i(2cos theta) - sin(2^(n+1) theta) / sin(2 theta) |.
///
/// Errors when sin(2 theta) is within 2^(-precision/4) of zero.
pub fn sine_quotient_check(n: u32, theta: &BigReal, precision: usize) -> Result<BigReal> {
    let w = precision + guard_bits(n) + 32;
    let theta_w = theta.with_precision(w);
    let sin2t = theta_w.mul_pow2(1).sin();
    let threshold = -(precision as i64) / 4;
    if sin2t.abs_lt_pow2(threshold) {
        return Err(Error::NearSingular {
            threshold_log2: -threshold,
        });
    }
    let x = theta_w.cos().mul_pow2(1);
    let lucas = MapParams::lucas();
    let mut product = BigReal::from_u64(1, w);
    for i in 1..=n {
        product = product.mul(&eval_map(&lucas, i, &x));
    }
    let rhs = theta_w.mul_pow2(n as i64 + 1).sin().div(&sin2t);
    Ok(product.sub(&rhs).abs().with_precision(precision))
}
