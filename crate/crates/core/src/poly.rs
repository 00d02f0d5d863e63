//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored densely, index i = coefficient of x^i, with no
//! trailing zeros; the zero polynomial is the empty vector. The iterated map
//! is dense in even powers, so a sparse representation buys nothing.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bigreal::BigReal;

/// Dense exact-rational-coefficient univariate polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactPoly {
    coeffs: Vec<BigRational>,
}

impl ExactPoly {
    /// The zero polynomial (empty coefficient vector, degree `None`).
    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The monomial x.
    pub fn x() -> Self {
        ExactPoly {
            coeffs: vec![BigRational::zero(), BigRational::one()],
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Build from coefficients (index i = coefficient of x^i), trimming
    /// trailing zeros so equality is structural.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    /// Convenience constructor for integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the last nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// True iff every coefficient is an integer.
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scaled(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        if k.is_one() {
            return self.clone();
        }
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn add_constant(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(k.clone());
        } else {
            coeffs[0] += k;
        }
        Self::from_coeffs(coeffs)
    }

    /// Clear denominators: self = (integer polynomial) / d.
    /// Per-coefficient gcd work happens once here instead of inside every
    /// convolution term.
    fn scaled_integers(&self) -> (Vec<BigInt>, BigInt) {
        use num_integer::Integer;
        if self.is_integer() {
            return (
                self.coeffs.iter().map(|c| c.numer().clone()).collect(),
                BigInt::one(),
            );
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (nums, den)
    }

    fn normalize(nums: Vec<BigInt>, den: BigInt) -> Self {
        if den.is_one() {
            return Self::from_coeffs(nums.into_iter().map(BigRational::from_integer).collect());
        }
        Self::from_coeffs(
            nums.into_iter()
                .map(|n| BigRational::new(n, den.clone()))
                .collect(),
        )
    }

    /// Product of two polynomials via a gcd-free big-integer convolution
    /// over cleared denominators.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, da) = self.scaled_integers();
        let (b, db) = other.scaled_integers();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                out[i + j] += ai * bj;
            }
        }
        Self::normalize(out, da * db)
    }

    /// Square, exploiting symmetry of the convolution (cross terms counted
    /// once and doubled).
    pub fn square(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (a, da) = self.scaled_integers();
        let d = a.len() - 1;
        let mut out = vec![BigInt::zero(); 2 * d + 1];
        for i in 0..=d {
            if a[i].is_zero() {
                continue;
            }
            for j in (i + 1)..=d {
                if a[j].is_zero() {
                    continue;
                }
                out[i + j] += &a[i] * &a[j];
            }
        }
        for c in out.iter_mut() {
            *c *= 2;
        }
        for i in 0..=d {
            if !a[i].is_zero() {
                out[2 * i] += &a[i] * &a[i];
            }
        }
        Self::normalize(out, &da * &da)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a big-float point, carried at a working precision
    /// wide enough to absorb the cancellation between terms. The guard is
    /// derived from the coefficient magnitudes and |x|, so the result is
    /// accurate to roughly the precision of `x` even when intermediate terms
    /// dwarf the value.
    pub fn eval_real(&self, x: &BigReal) -> BigReal {
        let p = x.precision();
        if self.is_zero() {
            return BigReal::from_u64(0, p);
        }
        let xe = x.exponent().unwrap_or(0).max(0);
        let mut term_bits: i64 = 0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let b = c.numer().bits() as i64 - c.denom().bits() as i64 + 1 + i as i64 * xe;
            term_bits = term_bits.max(b);
        }
        let count_bits = (usize::BITS - self.coeffs.len().leading_zeros()) as i64;
        let guard = (term_bits + count_bits + 16).max(16) as usize;
        let w = p + guard;
        let xw = x.with_precision(w);
        let mut acc = BigReal::from_u64(0, w);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&xw).add(&BigReal::from_rational(c, w));
        }
        acc.with_precision(p)
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
