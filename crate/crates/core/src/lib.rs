//! # llpoly
//!
//! The Lucas-Lehmer polynomial family L_n(x) = L_{n-1}(x)^2 - 2 (seed x) and
//! its one-parameter generalization M^a_n = 2a (M^a_{n-1})^2 - 1/a, with:
//!
//! - exact rational coefficient expansion, evaluation, differentiation and
//!   the closed product form of the derivative ([`family`], [`poly`]);
//! - zeros as nested radicals ± sqrt(2 ± sqrt(2 ± ...)), ordered purely by
//!   their sign patterns, and the critical-point sets ([`radicals`]);
//! - exact Chebyshev bridge identities of the first and second kind
//!   ([`chebyshev`]);
//! - local cosine models, the theta representation, Gauss-Chebyshev
//!   orthogonality quadrature, asymptotics, and a pi approximation from the
//!   all-plus radical ([`analysis`]);
//! - the Lucas-Lehmer integer sequence 4, 14, 194, ... and the classical
//!   Mersenne primality test ([`mersenne`]).
//!
//! Everything exact is kept exact: identity checks compare coefficients, not
//! floats. Numeric paths run on [`BigReal`] (arbitrary-precision floats with
//! an explicit precision in bits) with documented guard bits.
//!
//! All operations are pure; values are immutable and safe to share across
//! threads.

pub mod analysis;
pub mod bigreal;
pub mod chebyshev;
pub mod error;
pub mod family;
pub mod mersenne;
pub mod poly;
pub mod radicals;

pub use analysis::{
    asymptotic_ratio, cosine_compare_samples, curvature_at_max, local_k, orthogonality_integral,
    pi_approx, taylor_at_zero, theta_of_x, CosineSample, LocalModel, QuadratureSpec,
};
pub use bigreal::{BigReal, MIN_PRECISION};
pub use chebyshev::{
    cheb_poly, compose_shift, sine_quotient_check, u_endpoint, verify_t_identity,
    verify_u_identity, ChebKind, CoeffMismatch, IdentityReport,
};
pub use error::{Error, Result};
pub use family::{
    build_poly, derivative_product, eval_map, guard_bits, Family, MapParams, DEFAULT_DEGREE_CAP,
};
pub use mersenne::{is_small_prime, ll_integer_sequence, mersenne_test};
pub use poly::ExactPoly;
pub use radicals::{
    compare_symbolic, critical_points, m_zeros, plus_chain, zeros, zeros_trig, CriticalLocation,
    CriticalPoint, CriticalPointReport, ExtremumKind, RadicalSign, ScaledZero, SignPattern,
    DEFAULT_ENUM_CAP,
};
