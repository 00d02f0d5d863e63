//! Arbitrary-precision real values with an explicit precision in bits.
//!
//! `BigReal` is a thin wrapper over [`astro_float::BigFloat`] that carries the
//! precision it was computed at. Every arithmetic operation is correctly
//! rounded (round-to-even) at the larger of the operand precisions, so the
//! relative error per operation is at most 2^(1-p).

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Minimum supported precision in bits (an f64 mantissa).
pub const MIN_PRECISION: usize = 53;

/// The backend mantissa is whole 64-bit words, so stated precisions below
/// one word are carried at 64 bits (strictly tighter rounding than asked).
const MIN_WORD_PRECISION: usize = 64;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    // Cache of pi and other constants used by the trig routines.
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Convert a big integer to a `BigFloat` exactly (no rounding).
fn bigint_to_float(v: &BigInt) -> BigFloat {
    let (sign, words) = v.to_u64_digits();
    if words.is_empty() {
        return BigFloat::from_u64(0, MIN_WORD_PRECISION);
    }
    // from_words interprets the buffer as a fraction in [0.5, 1) times 2^e,
    // so e = 64 * len reproduces the integer exactly.
    let e = i32::try_from(64 * words.len()).expect("integer exponent fits");
    let s = if sign == num_bigint::Sign::Minus {
        Sign::Neg
    } else {
        Sign::Pos
    };
    BigFloat::from_words(&words, s, e)
}

/// An arbitrary-precision real number tagged with its precision in bits.
#[derive(Clone, Debug)]
pub struct BigReal {
    value: BigFloat,
    prec: usize,
}

impl BigReal {
    fn wrap(value: BigFloat, prec: usize) -> Self {
        debug_assert!(!value.is_nan(), "NaN escaped an arithmetic path");
        BigReal { value, prec }
    }

    /// Requested precision clamped to the supported minimum of 53 bits.
    fn clamp(prec: usize) -> usize {
        prec.max(MIN_PRECISION)
    }

    /// Backend working precision for a stated precision.
    fn word(prec: usize) -> usize {
        prec.max(MIN_WORD_PRECISION)
    }

    fn wp(&self) -> usize {
        Self::word(self.prec)
    }

    pub fn from_u64(v: u64, prec: usize) -> Self {
        let p = Self::clamp(prec);
        Self::wrap(BigFloat::from_u64(v, Self::word(p)), p)
    }

    pub fn from_i64(v: i64, prec: usize) -> Self {
        let p = Self::clamp(prec);
        Self::wrap(BigFloat::from_i64(v, Self::word(p)), p)
    }

    pub fn from_f64(v: f64, prec: usize) -> Self {
        let p = Self::clamp(prec);
        Self::wrap(BigFloat::from_f64(v, Self::word(p)), p)
    }

    pub fn from_bigint(v: &BigInt, prec: usize) -> Self {
        let p = Self::clamp(prec);
        let mut f = bigint_to_float(v);
        f.set_precision(Self::word(p), RM).expect("finite value");
        Self::wrap(f, p)
    }

    /// Exact numerator / denominator division at the requested precision.
    pub fn from_rational(r: &BigRational, prec: usize) -> Self {
        let p = Self::clamp(prec);
        if r.is_zero() {
            return Self::from_u64(0, p);
        }
        let num = bigint_to_float(r.numer());
        let den = bigint_to_float(r.denom());
        Self::wrap(num.div(&den, Self::word(p), RM), p)
    }

    /// Parse a decimal string such as `-1.25e-3`.
    pub fn parse(input: &str, prec: usize) -> Result<Self> {
        let p = Self::clamp(prec);
        let v = with_consts(|cc| BigFloat::parse(input.trim(), Radix::Dec, Self::word(p), RM, cc));
        if v.is_nan() {
            return Err(Error::NumberFormat {
                input: input.to_string(),
            });
        }
        Ok(Self::wrap(v, p))
    }

    /// The constant pi at the requested precision.
    pub fn pi(prec: usize) -> Self {
        let p = Self::clamp(prec);
        Self::wrap(with_consts(|cc| cc.pi(Self::word(p), RM)), p)
    }

    /// Exact power of two 2^k.
    pub fn pow2(k: i64, prec: usize) -> Self {
        let p = Self::clamp(prec);
        let e = i32::try_from(k + 1).expect("power-of-two exponent fits");
        Self::wrap(BigFloat::from_words(&[1u64 << 63], Sign::Pos, e), p)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    /// Re-round (or extend) to precision `prec`.
    pub fn with_precision(&self, prec: usize) -> Self {
        let p = Self::clamp(prec);
        let mut v = self.value.clone();
        v.set_precision(Self::word(p), RM).expect("finite value");
        Self::wrap(v, p)
    }

    fn join(&self, other: &Self) -> usize {
        self.prec.max(other.prec)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.join(other);
        Self::wrap(self.value.add(&other.value, Self::word(p), RM), p)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.join(other);
        Self::wrap(self.value.sub(&other.value, Self::word(p), RM), p)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.join(other);
        Self::wrap(self.value.mul(&other.value, Self::word(p), RM), p)
    }

    pub fn div(&self, other: &Self) -> Self {
        let p = self.join(other);
        Self::wrap(self.value.div(&other.value, Self::word(p), RM), p)
    }

    pub fn neg(&self) -> Self {
        Self::wrap(self.value.neg(), self.prec)
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.prec)
    }

    /// Multiply by 2^k exactly.
    pub fn mul_pow2(&self, k: i64) -> Self {
        self.mul(&Self::pow2(k, self.prec))
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Integer power by binary exponentiation.
    pub fn powi(&self, exp: usize) -> Self {
        Self::wrap(self.value.powi(exp, self.wp(), RM), self.prec)
    }

    pub fn sqrt(&self) -> Result<Self> {
        let v = self.value.sqrt(self.wp(), RM);
        if v.is_nan() {
            return Err(Error::OutOfDomain {
                what: "sqrt argument",
                value: self.to_string(),
                domain: "[0, +inf)",
            });
        }
        Ok(Self::wrap(v, self.prec))
    }

    pub fn cos(&self) -> Self {
        Self::wrap(
            with_consts(|cc| self.value.cos(self.wp(), RM, cc)),
            self.prec,
        )
    }

    pub fn sin(&self) -> Self {
        Self::wrap(
            with_consts(|cc| self.value.sin(self.wp(), RM, cc)),
            self.prec,
        )
    }

    pub fn acos(&self) -> Result<Self> {
        let v = with_consts(|cc| self.value.acos(self.wp(), RM, cc));
        if v.is_nan() {
            return Err(Error::OutOfDomain {
                what: "acos argument",
                value: self.to_string(),
                domain: "[-1, 1]",
            });
        }
        Ok(Self::wrap(v, self.prec))
    }

    pub fn atan(&self) -> Self {
        Self::wrap(
            with_consts(|cc| self.value.atan(self.wp(), RM, cc)),
            self.prec,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative()
    }

    /// Binary exponent e with |x| in [2^(e-1), 2^e); `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        if self.value.is_zero() {
            None
        } else {
            self.value.exponent().map(i64::from)
        }
    }

    /// True iff |self| < 2^k (zero counts as smaller than any power of two).
    pub fn abs_lt_pow2(&self, k: i64) -> bool {
        match self.exponent() {
            None => true,
            Some(e) => e <= k,
        }
    }

    pub fn total_cmp(&self, other: &Self) -> Ordering {
        match self.value.cmp(&other.value) {
            Some(v) => v.cmp(&0),
            None => panic!("NaN in comparison"),
        }
    }

    /// Lossy conversion for display hints and coarse checks.
    pub fn to_f64(&self) -> f64 {
        if self.value.is_zero() {
            return 0.0;
        }
        if let Some((words, _, s, e, _)) = self.value.as_raw_parts() {
            let top = words.last().copied().unwrap_or(0);
            let frac = (top as f64) / 2f64.powi(64);
            let v = frac * 2f64.powi(e);
            if s == Sign::Neg {
                -v
            } else {
                v
            }
        } else {
            f64::NAN
        }
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.total_cmp(other) == Ordering::Equal
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.total_cmp(other))
    }
}

impl fmt::Display for BigReal {
    /// Decimal form with a digit count derived from the precision.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}
