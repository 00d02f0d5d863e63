//! Local cosine behavior, curvature at maxima, the theta representation,
//! orthogonality quadrature, asymptotics, and the pi approximation built
//! from the all-plus nested radical.

use num_rational::BigRational;
use num_traits::One;

use crate::bigreal::BigReal;
use crate::error::{Error, Result};
use crate::family::{eval_map, guard_bits, MapParams};
use crate::radicals::plus_chain;

/// Gauss-Chebyshev quadrature request: midpoint-theta nodes mapped to
/// [-2, 2] via x = 2cos(theta).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuadratureSpec {
    pub node_count: u32,
    pub precision: usize,
}

/// Local cosine model 2cos(2^(n-1) k (x - x0)) around a maximum x0:
/// the frequency factor satisfies k^2 = 4 / (4 - x0^2), so |k| >= 1.
#[derive(Clone, Debug)]
pub struct LocalModel {
    pub center: BigReal,
    pub k: BigReal,
}

/// First three exact coefficients of the level-n iterate around 0,
/// computed by iterating the map on truncated expansions (truncation
/// commutes with the polynomial square, so these equal the low-order
/// coefficients of the full expansion).
///
/// The closed forms are (1/a, 0, -a 2^(2n-1)); (2, 0, -4^(n-1)) for L.
pub fn taylor_at_zero(
    params: &MapParams,
    n: u32,
    cap: u32,
) -> Result<(BigRational, BigRational, BigRational)> {
    if n < 2 {
        return Err(Error::OutOfDomain {
            what: "n",
            value: n.to_string(),
            domain: "[2, cap]",
        });
    }
    if n > cap {
        return Err(Error::DegreeCap {
            degree: 1u64 << n.min(63),
            cap_n: cap,
            cap_degree: 1u64 << cap.min(63),
        });
    }
    let scale = params.step_scale();
    let shift = params.step_shift();
    let (mut c0, mut c1, mut c2) = (
        BigRational::from_integer(0.into()),
        BigRational::one(),
        BigRational::from_integer(0.into()),
    );
    for _ in 0..n {
        let s0 = &c0 * &c0;
        let s1 = BigRational::from_integer(2.into()) * &c0 * &c1;
        let s2 = &c1 * &c1 + BigRational::from_integer(2.into()) * &c0 * &c2;
        c0 = s0 * &scale + &shift;
        c1 = s1 * &scale;
        c2 = s2 * &scale;
    }
    Ok((c0, c1, c2))
}

/// Second derivative of the level-n L iterate at a maximum x0, in closed
/// form: 2^(2n+1) / (x0^2 - 4).
pub fn curvature_at_max(n: u32, x0: &BigReal) -> Result<BigReal> {
    if n < 2 {
        return Err(Error::OutOfDomain {
            what: "n",
            value: n.to_string(),
            domain: "[2, inf)",
        });
    }
    check_inside_two(x0)?;
    let p = x0.precision();
    let w = p + 32;
    let x = x0.with_precision(w);
    let denom = x.square().sub(&BigReal::from_u64(4, w));
    Ok(BigReal::pow2(2 * n as i64 + 1, w)
        .div(&denom)
        .with_precision(p))
}

fn check_inside_two(x0: &BigReal) -> Result<()> {
    let two = BigReal::from_u64(2, x0.precision());
    if x0.abs() >= two {
        return Err(Error::OutOfDomain {
            what: "x0",
            value: x0.to_string(),
            domain: "(-2, 2)",
        });
    }
    Ok(())
}

/// Frequency factor of the local cosine model at x0:
/// k = 1 / sqrt(1 - x0^2/4), monotone increasing in |x0|.
pub fn local_k(x0: &BigReal) -> Result<LocalModel> {
    check_inside_two(x0)?;
    let p = x0.precision();
    let w = p + 32;
    let x = x0.with_precision(w);
    let four = BigReal::from_u64(4, w);
    let k = BigReal::from_u64(2, w).div(
        &four
            .sub(&x.square())
            .sqrt()
            .expect("positive inside (-2,2)"),
    );
    Ok(LocalModel {
        center: x0.clone(),
        k: k.with_precision(p),
    })
}

/// theta(x) = arccos(x^2/2 - 1) / 2 on [-2, 2], taking values in [0, pi/2].
///
/// Satisfies L_n(x) = 2cos(2^n theta(x)); the principal arccos branch makes
/// the representation single-valued, and any additive multiple of pi is
/// absorbed by the cosine after multiplication by 2^n.
pub fn theta_of_x(x: &BigReal) -> Result<BigReal> {
    let p = x.precision();
    let two = BigReal::from_u64(2, p);
    if x.abs() > two {
        return Err(Error::OutOfDomain {
            what: "x",
            value: x.to_string(),
            domain: "[-2, 2]",
        });
    }
    let w = p + 32;
    let xw = x.with_precision(w);
    let mut u = xw.square().mul_pow2(-1).sub(&BigReal::from_u64(1, w));
    // x^2/2 - 1 lands in [-1, 1] up to rounding; clamp for acos
    let one = BigReal::from_u64(1, w);
    if u > one {
        u = one.clone();
    } else if u < one.neg() {
        u = one.neg();
    }
    Ok(u.acos()
        .expect("clamped to [-1, 1]")
        .mul_pow2(-1)
        .with_precision(p))
}

/// Weighted inner product (1/4) ∫ L_m L_n (4 - x^2)^(-1/2) dx over [-2, 2]
/// by Gauss-Chebyshev quadrature with midpoint-theta nodes:
/// (pi / 4N) * sum_j L_m(2cos theta_j) L_n(2cos theta_j),
/// theta_j = (j - 1/2) pi / N.
///
/// Exact for the polynomial integrand when N > (2^m + 2^n) / 2, which is
/// enforced as a precondition. Off-diagonal entries vanish; the diagonal
/// equals pi/2. Summation runs in ascending node order for reproducibility.
pub fn orthogonality_integral(m: u32, n: u32, spec: &QuadratureSpec) -> Result<BigReal> {
    if m > 62 || n > 62 {
        return Err(Error::ExponentRange {
            n: m.max(n),
            max_n: 62,
        });
    }
    let needed = ((1u64 << m) + (1u64 << n)) / 2;
    if u64::from(spec.node_count) <= needed {
        return Err(Error::InsufficientNodes {
            m,
            n,
            needed,
            got: spec.node_count,
        });
    }
    let count = spec.node_count;
    let w = spec.precision + guard_bits(m.max(n)) + 16;
    let pi = BigReal::pi(w);
    let two_count = BigReal::from_u64(2 * u64::from(count), w);
    let lucas = MapParams::lucas();
    let mut sum = BigReal::from_u64(0, w);
    for j in 1..=u64::from(count) {
        let theta = BigReal::from_u64(2 * j - 1, w).mul(&pi).div(&two_count);
        let x = theta.cos().mul_pow2(1);
        let fm = eval_map(&lucas, m, &x);
        let fn_ = if n == m {
            fm.clone()
        } else {
            eval_map(&lucas, n, &x)
        };
        sum = sum.add(&fm.mul(&fn_));
    }
    let scale = pi.div(&BigReal::from_u64(4 * u64::from(count), w));
    Ok(sum.mul(&scale).with_precision(spec.precision))
}

/// Ratio of the level-n iterate to its large-|x| asymptotic form
/// (2a)^(2^(n-1) - 1) * (2a x^2 - 1/a)^(2^(n-1)); tends to 1 as |x| grows.
/// Requires |x| > 1/a (|x| > 2 for the L family).
pub fn asymptotic_ratio(params: &MapParams, n: u32, x: &BigReal) -> Result<BigReal> {
    if n == 0 || n > 32 {
        return Err(Error::ExponentRange { n, max_n: 32 });
    }
    let p = x.precision();
    let bound = BigReal::from_rational(&params.a().recip(), p + 16);
    if x.abs().with_precision(p + 16) <= bound {
        return Err(Error::OutOfDomain {
            what: "x",
            value: x.to_string(),
            domain: "|x| > 1/a",
        });
    }
    let w = p + guard_bits(n) + 16;
    let xw = x.with_precision(w);
    let e = 1usize << (n - 1);
    let scale = BigReal::from_rational(&params.step_scale(), w);
    let shift = BigReal::from_rational(&params.step_shift(), w);
    let base = xw.square().mul(&scale).add(&shift);
    let asymptotic = base.powi(e).mul(&scale.powi(e - 1));
    let value = eval_map(params, n, &xw);
    Ok(value.div(&asymptotic).with_precision(p))
}

/// Pi from the all-plus nested radical: 2^(n+1) sqrt(2 - chain(n)).
///
/// Equals 2^(n+2) sin(pi / 2^(n+2)), so it increases towards pi with the
/// error shrinking by a factor of 4 per step.
pub fn pi_approx(n: u32, precision: usize) -> BigReal {
    // subtracting the chain from 2 cancels about 2n leading bits
    let w = precision + 2 * n as usize + 48;
    let chain = plus_chain(n, w);
    let gap = BigReal::from_u64(2, w).sub(&chain);
    gap.sqrt()
        .expect("chain stays below 2")
        .mul_pow2(n as i64 + 1)
        .with_precision(precision)
}

/// One row of the map-versus-cosine comparison table.
#[derive(Clone, Debug)]
pub struct CosineSample {
    pub x: BigReal,
    pub map_value: BigReal,
    pub cosine_value: BigReal,
}

/// Uniform samples of the level-n L iterate against its small-x cosine
/// model 2cos(2^(n-1) x) on [-half_width, half_width].
pub fn cosine_compare_samples(
    n: u32,
    half_width: &BigReal,
    count: u32,
) -> Result<Vec<CosineSample>> {
    if n < 2 {
        return Err(Error::OutOfDomain {
            what: "n",
            value: n.to_string(),
            domain: "[2, inf)",
        });
    }
    if count < 2 {
        return Err(Error::OutOfDomain {
            what: "count",
            value: count.to_string(),
            domain: "[2, inf)",
        });
    }
    let p = half_width.precision();
    let w = p + n as usize + 32;
    let h = half_width.with_precision(w);
    let step = h
        .mul_pow2(1)
        .div(&BigReal::from_u64(u64::from(count) - 1, w));
    let lucas = MapParams::lucas();
    let two = BigReal::from_u64(2, w);
    let mut out = Vec::with_capacity(count as usize);
    for i in 0..u64::from(count) {
        let x = h.neg().add(&step.mul(&BigReal::from_u64(i, w)));
        let map_value = eval_map(&lucas, n, &x);
        let cosine_value = two.mul(&x.mul_pow2(n as i64 - 1).cos());
        out.push(CosineSample {
            x: x.with_precision(p),
            map_value: map_value.with_precision(p),
            cosine_value: cosine_value.with_precision(p),
        });
    }
    Ok(out)
}
