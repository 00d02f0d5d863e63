//! Error type shared across the library.

use thiserror::Error;

/// Convenience alias for results produced by this crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact expansion was asked for a degree above the configured cap.
    /// Coefficient count doubles per iteration, so the cap is a hard guard.
    #[error("requested degree {degree} exceeds the exact-expansion cap of {cap_degree} (max n = {cap_n})")]
    DegreeCap {
        degree: u64,
        cap_n: u32,
        cap_degree: u64,
    },

    /// Zero/critical-point enumeration was asked for more levels than the cap allows.
    #[error("level n = {n} exceeds the enumeration cap {cap} (2^n points)")]
    EnumerationCap { n: u32, cap: u32 },

    /// The map parameter `a` must be a positive rational.
    #[error("map parameter a must be positive, got {a}")]
    NonPositiveParameter { a: String },

    /// Sign patterns of different levels cannot be ordered by the symbolic rules.
    #[error("sign patterns have different levels: {left} vs {right}")]
    LevelMismatch { left: u32, right: u32 },

    /// A malformed sign pattern produced a negative argument under a radical.
    #[error("nested radical has a negative radicand at depth {depth}")]
    NegativeRadicand { depth: u32 },

    /// The Lucas-Lehmer primality test is only defined for prime exponents p >= 3.
    #[error("exponent {p} is not a prime >= 3")]
    InvalidExponent { p: u64 },

    /// Generic domain violation (argument outside the documented range).
    #[error("{what} = {value} is outside the domain {domain}")]
    OutOfDomain {
        what: &'static str,
        value: String,
        domain: &'static str,
    },

    /// Quadrature node count too small for the requested polynomial degrees.
    #[error("quadrature for degrees 2^{m} and 2^{n} needs more than {needed} nodes, got {got}")]
    InsufficientNodes {
        m: u32,
        n: u32,
        needed: u64,
        got: u32,
    },

    /// sin(2*theta) is too close to zero for the sine-quotient form.
    #[error("sin(2*theta) is within 2^-{threshold_log2} of zero; quotient is near-singular")]
    NearSingular { threshold_log2: i64 },

    /// An iterate exponent 2^(n-1) does not fit the evaluation range.
    #[error("n = {n} puts the exponent 2^(n-1) outside the evaluation range (max n = {max_n})")]
    ExponentRange { n: u32, max_n: u32 },

    /// A numeric string could not be parsed.
    #[error("cannot parse {input:?} as a number")]
    NumberFormat { input: String },
}
