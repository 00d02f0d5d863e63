//! The iterated polynomial family: construction, evaluation, differentiation.
//!
//! The map is z -> 2a*z^2 - 1/a with seed x. The classic family L_n is the
//! special case a = 1/2 (z -> z^2 - 2); keeping everything in terms of the
//! exact rational `a` makes the two families share one code path, and the
//! family-reduction property M^(1/2) = L holds by construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bigreal::BigReal;
use crate::error::{Error, Result};
use crate::poly::ExactPoly;

/// Default cap on n for exact expansion (degree 2^n). Coefficient count
/// doubles per iteration; identity tests only need modest n.
pub const DEFAULT_DEGREE_CAP: u32 = 14;

/// Extra working bits for n map iterations at requested precision p.
/// Each squaring can lose O(1) bits and magnitudes reach ~4 inside [-2, 2].
pub fn guard_bits(n: u32) -> usize {
    8 * n as usize + 32
}

/// Which of the two map families a value belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// z -> z^2 - 2, seed x.
    L,
    /// z -> 2a*z^2 - 1/a, seed x, parameterized by a > 0.
    M,
}

/// Family selector plus the exact parameter a (a = 1/2 for the L family).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MapParams {
    family: Family,
    a: BigRational,
}

impl MapParams {
    /// The L family: z -> z^2 - 2.
    pub fn lucas() -> Self {
        MapParams {
            family: Family::L,
            a: BigRational::new(BigInt::one(), BigInt::from(2)),
        }
    }

    /// The M family with parameter a > 0.
    pub fn m(a: BigRational) -> Result<Self> {
        if !a.is_positive() {
            return Err(Error::NonPositiveParameter { a: a.to_string() });
        }
        Ok(MapParams {
            family: Family::M,
            a,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn is_lucas(&self) -> bool {
        self.family == Family::L
    }

    /// Quadratic coefficient 2a of one map step.
    pub fn step_scale(&self) -> BigRational {
        &self.a * BigRational::from_integer(BigInt::from(2))
    }

    /// Constant term -1/a of one map step.
    pub fn step_shift(&self) -> BigRational {
        -self.a.recip()
    }

    /// Scale factor linking the family to the first-kind Chebyshev
    /// polynomial: p_n = (1/a) * T_{2^(n-1)}(shift(x)).
    pub fn t_scale(&self) -> BigRational {
        self.a.recip()
    }

    /// Per-factor scale for the second-kind identity:
    /// prod_{i<=n} p_i = (1/2a)^n * U_{2^n-1}(shift(x)).
    pub fn u_scale(&self) -> BigRational {
        (&self.a * BigRational::from_integer(BigInt::from(2))).recip()
    }

    /// The substitution t(x) = 2a^2 x^2 - 1 (x^2/2 - 1 for the L family).
    pub fn shift_poly(&self) -> ExactPoly {
        let two_a2 = BigRational::from_integer(BigInt::from(2)) * &self.a * &self.a;
        ExactPoly::from_coeffs(vec![-BigRational::one(), BigRational::zero(), two_a2])
    }

    /// Zeros of the level-n map are the L-family radicals scaled by 1/(2a).
    pub fn zero_scale(&self) -> BigRational {
        self.u_scale()
    }

    /// One exact map step on a polynomial: p -> 2a*p^2 - 1/a.
    pub fn step_poly(&self, p: &ExactPoly) -> ExactPoly {
        p.square()
            .scaled(&self.step_scale())
            .add_constant(&self.step_shift())
    }

    /// Short label for reports ("L" or "M[a=3/2]").
    pub fn label(&self) -> String {
        match self.family {
            Family::L => "L".to_string(),
            Family::M => format!("M[a={}]", self.a),
        }
    }
}

fn check_cap(n: u32, cap: u32) -> Result<()> {
    if n > cap {
        return Err(Error::DegreeCap {
            degree: 1u64 << n.min(63),
            cap_n: cap,
            cap_degree: 1u64 << cap.min(63),
        });
    }
    Ok(())
}

/// Exact expanded coefficients of the n-th iterate (seed is x itself).
pub fn build_poly(params: &MapParams, n: u32, cap: u32) -> Result<ExactPoly> {
    check_cap(n, cap)?;
    let mut p = ExactPoly::x();
    for _ in 0..n {
        p = params.step_poly(&p);
    }
    Ok(p)
}

/// n map iterations at a floating point, without expansion. Works for any n;
/// the working precision is the input precision plus [`guard_bits`].
pub fn eval_map(params: &MapParams, n: u32, x: &BigReal) -> BigReal {
    let p = x.precision();
    let w = p + guard_bits(n);
    let mut z = x.with_precision(w);
    let scale = BigReal::from_rational(&params.step_scale(), w);
    let shift = BigReal::from_rational(&params.step_shift(), w);
    let scale_is_one = params.step_scale().is_one();
    for _ in 0..n {
        z = z.square();
        if !scale_is_one {
            z = z.mul(&scale);
        }
        z = z.add(&shift);
    }
    z.with_precision(p)
}

/// The closed product form of the derivative:
/// d/dx p_n = (4a)^n * x * prod_{i=1}^{n-1} p_i  (2^n for the L family).
/// Expanded exactly; equals `build_poly(params, n, cap)?.derivative()`
/// coefficient for coefficient.
pub fn derivative_product(params: &MapParams, n: u32, cap: u32) -> Result<ExactPoly> {
    if n < 2 {
        return Err(Error::OutOfDomain {
            what: "n",
            value: n.to_string(),
            domain: "[2, cap]",
        });
    }
    check_cap(n, cap)?;
    let four_a = BigRational::from_integer(BigInt::from(4)) * params.a();
    let mut factor = BigRational::one();
    for _ in 0..n {
        factor *= &four_a;
    }
    let mut acc = ExactPoly::x().scaled(&factor);
    let mut iterate = ExactPoly::x();
    for _ in 1..n {
        iterate = params.step_poly(&iterate);
        acc = acc.mul(&iterate);
    }
    Ok(acc)
}
