//! Nested-radical zeros, their purely symbolic ordering, and the
//! critical-point sets of the iterated map.
//!
//! Every zero of the n-th iterate is ± sqrt(2 ± sqrt(2 ± ... ± sqrt 2)) with
//! n nested square roots. A zero is therefore identified by its outer sign
//! plus the n-1 inner signs, and two same-level radicals can be ordered by
//! scanning the signs alone: a `+` against a `-` decides immediately, a
//! `+,+` pair keeps scanning, and a `-,-` pair keeps scanning with the
//! direction flipped (the deeper value is subtracted, reversing the order).

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;

use crate::bigreal::BigReal;
use crate::error::{Error, Result};
use crate::family::guard_bits;

/// Default cap on the enumeration level (2^n points per level).
pub const DEFAULT_ENUM_CAP: u32 = 20;

/// A single ± choice inside a nested radical.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum RadicalSign {
    Minus,
    Plus,
}

impl RadicalSign {
    pub fn as_char(self) -> char {
        match self {
            RadicalSign::Plus => '+',
            RadicalSign::Minus => '-',
        }
    }
}

/// The ± choices of one level-n nested-radical zero.
///
/// `inner[0]` is the outermost of the n-1 inner signs:
/// x = outer * sqrt(2 s_1 sqrt(2 s_2 ... sqrt(2 s_{n-1} sqrt 2))).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignPattern {
    outer: RadicalSign,
    inner: Vec<RadicalSign>,
}

impl SignPattern {
    pub fn new(outer: RadicalSign, inner: Vec<RadicalSign>) -> Self {
        SignPattern { outer, inner }
    }

    /// Number of nested square roots (inner signs + 1).
    pub fn level(&self) -> u32 {
        self.inner.len() as u32 + 1
    }

    pub fn outer_sign(&self) -> RadicalSign {
        self.outer
    }

    pub fn inner_signs(&self) -> &[RadicalSign] {
        &self.inner
    }

    /// Same magnitude, opposite outer sign.
    pub fn mirrored(&self) -> Self {
        let outer = match self.outer {
            RadicalSign::Plus => RadicalSign::Minus,
            RadicalSign::Minus => RadicalSign::Plus,
        };
        SignPattern {
            outer,
            inner: self.inner.clone(),
        }
    }

    /// Numeric value of the radical at the requested precision, evaluated
    /// from the innermost sqrt(2) outward. Malformed patterns (possible for
    /// hand-built inputs, never for enumerated zeros) are rejected when a
    /// radicand would go negative.
    pub fn eval(&self, precision: usize) -> Result<BigReal> {
        let w = precision + 32;
        let two = BigReal::from_u64(2, w);
        let mut v = two.sqrt().expect("2 is nonnegative");
        for (depth_back, s) in self.inner.iter().rev().enumerate() {
            let radicand = match s {
                RadicalSign::Plus => two.add(&v),
                RadicalSign::Minus => two.sub(&v),
            };
            if radicand.is_negative() {
                return Err(Error::NegativeRadicand {
                    depth: self.inner.len() as u32 - depth_back as u32,
                });
            }
            v = radicand.sqrt().expect("checked nonnegative");
        }
        if self.outer == RadicalSign::Minus {
            v = v.neg();
        }
        Ok(v.with_precision(precision))
    }

    /// Rendering such as `-sqrt(2-sqrt(2+sqrt(2)))`.
    pub fn radical_string(&self) -> String {
        let mut s = String::new();
        if self.outer == RadicalSign::Minus {
            s.push('-');
        }
        s.push_str("sqrt(2");
        for sign in &self.inner {
            s.push(sign.as_char());
            s.push_str("sqrt(2");
        }
        s.push_str(&")".repeat(self.level() as usize));
        s
    }
}

impl fmt::Display for SignPattern {
    /// Compact sign string: outer sign first, then the inner signs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.outer.as_char())?;
        for s in &self.inner {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// Order two same-level positive-branch patterns from the signs alone,
/// scanning outer-to-inner with a direction flag that flips on `-,-`.
fn cmp_positive(a: &SignPattern, b: &SignPattern) -> Ordering {
    let mut ascending = true;
    for (sa, sb) in a.inner.iter().zip(&b.inner) {
        match (sa, sb) {
            (RadicalSign::Plus, RadicalSign::Minus) => {
                return if ascending {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (RadicalSign::Minus, RadicalSign::Plus) => {
                return if ascending {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (RadicalSign::Plus, RadicalSign::Plus) => {}
            (RadicalSign::Minus, RadicalSign::Minus) => ascending = !ascending,
        }
    }
    Ordering::Equal
}

/// Total order on same-level patterns. Patterns with negative outer sign
/// sort below positive ones; two negatives are the mirror of the positive
/// comparison. Errors on mismatched levels: the symbolic rules have no base
/// case for patterns of unequal depth.
pub fn compare_symbolic(a: &SignPattern, b: &SignPattern) -> Result<Ordering> {
    if a.level() != b.level() {
        return Err(Error::LevelMismatch {
            left: a.level(),
            right: b.level(),
        });
    }
    Ok(match (a.outer, b.outer) {
        (RadicalSign::Plus, RadicalSign::Plus) => cmp_positive(a, b),
        (RadicalSign::Minus, RadicalSign::Minus) => cmp_positive(a, b).reverse(),
        (RadicalSign::Minus, RadicalSign::Plus) => Ordering::Less,
        (RadicalSign::Plus, RadicalSign::Minus) => Ordering::Greater,
    })
}

fn check_level(n: u32, cap: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfDomain {
            what: "level n",
            value: n.to_string(),
            domain: "[1, cap]",
        });
    }
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    Ok(())
}

/// All 2^n zeros of the level-n map, sorted ascending by the symbolic order.
pub fn zeros(n: u32, cap: u32) -> Result<Vec<SignPattern>> {
    check_level(n, cap)?;
    let inner_len = (n - 1) as usize;
    let count = 1usize << inner_len;
    let mut positives = Vec::with_capacity(count);
    for bits in 0..count {
        let inner: Vec<RadicalSign> = (0..inner_len)
            .map(|i| {
                if bits >> i & 1 == 1 {
                    RadicalSign::Plus
                } else {
                    RadicalSign::Minus
                }
            })
            .collect();
        positives.push(SignPattern::new(RadicalSign::Plus, inner));
    }
    positives.sort_by(cmp_positive);
    let mut out = Vec::with_capacity(2 * count);
    for p in positives.iter().rev() {
        out.push(p.mirrored());
    }
    out.extend(positives);
    Ok(out)
}

/// The same zeros in closed trigonometric form: 2cos((2k+1) pi / 2^(n+1))
/// for k = 0 .. 2^n - 1, obtained by solving 2cos(2^n theta) = 0.
pub fn zeros_trig(n: u32, precision: usize, cap: u32) -> Result<Vec<BigReal>> {
    check_level(n, cap)?;
    let w = precision + n as usize + 32;
    let pi = BigReal::pi(w);
    let denom = BigReal::pow2(n as i64 + 1, w);
    let two = BigReal::from_u64(2, w);
    let mut out = Vec::with_capacity(1usize << n);
    for k in 0..(1u64 << n) {
        let odd = BigReal::from_u64(2 * k + 1, w);
        let theta = odd.mul(&pi).div(&denom);
        out.push(two.mul(&theta.cos()).with_precision(precision));
    }
    Ok(out)
}

/// Kind of a critical point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtremumKind {
    Maximum,
    Minimum,
}

/// Where a critical point sits: the origin, or a zero of an earlier iterate.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CriticalLocation {
    Origin,
    Zero(SignPattern),
}

impl CriticalLocation {
    pub fn eval(&self, precision: usize) -> Result<BigReal> {
        match self {
            CriticalLocation::Origin => Ok(BigReal::from_u64(0, precision)),
            CriticalLocation::Zero(p) => p.eval(precision),
        }
    }
}

impl fmt::Display for CriticalLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalLocation::Origin => write!(f, "0"),
            CriticalLocation::Zero(p) => write!(f, "{p}"),
        }
    }
}

/// One classified critical point; the value is exactly 2 or -2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalPoint {
    pub location: CriticalLocation,
    pub kind: ExtremumKind,
    pub value: i32,
}

/// Zeros Z_n and classified critical points M_n of the level-n L iterate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalPointReport {
    pub n: u32,
    /// Z_n, sorted ascending.
    pub zeros: Vec<SignPattern>,
    /// M_n: the origin first, then the zeros of levels 1 .. n-1 in
    /// ascending level and in-level order.
    pub critical_points: Vec<CriticalPoint>,
}

/// Critical points of the level-n iterate: M_n = {0} ∪ Z_1 ∪ ... ∪ Z_{n-1}.
/// The minima are exactly Z_{n-1} (value -2); everything else is a maximum
/// (value 2). For n = 1 the origin is the single minimum.
pub fn critical_points(n: u32, cap: u32) -> Result<CriticalPointReport> {
    check_level(n, cap)?;
    let zs = zeros(n, cap)?;
    let mut points = Vec::with_capacity((1usize << n) - 1);
    if n == 1 {
        points.push(CriticalPoint {
            location: CriticalLocation::Origin,
            kind: ExtremumKind::Minimum,
            value: -2,
        });
    } else {
        points.push(CriticalPoint {
            location: CriticalLocation::Origin,
            kind: ExtremumKind::Maximum,
            value: 2,
        });
        for level in 1..n {
            let (kind, value) = if level == n - 1 {
                (ExtremumKind::Minimum, -2)
            } else {
                (ExtremumKind::Maximum, 2)
            };
            for pattern in zeros(level, cap)? {
                points.push(CriticalPoint {
                    location: CriticalLocation::Zero(pattern),
                    kind,
                    value,
                });
            }
        }
    }
    Ok(CriticalPointReport {
        n,
        zeros: zs,
        critical_points: points,
    })
}

/// The all-plus nested radical with n twos: sqrt(2 + sqrt(2 + ... + sqrt 2)),
/// which equals 2cos(pi / 2^(n+1)). Expects n >= 1; n = 0 degrades to the
/// single radical sqrt 2.
pub fn plus_chain(n: u32, precision: usize) -> BigReal {
    let w = precision + 32;
    let two = BigReal::from_u64(2, w);
    let mut v = two.sqrt().expect("2 is nonnegative");
    for _ in 1..n {
        v = two.add(&v).sqrt().expect("radicand positive");
    }
    v.with_precision(precision)
}

/// A level-n zero of the M family: an L-family radical scaled by 1/(2a).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledZero {
    pub pattern: SignPattern,
    pub scale: BigRational,
}

impl ScaledZero {
    pub fn eval(&self, precision: usize) -> Result<BigReal> {
        let v = self.pattern.eval(precision + 16)?;
        Ok(v.mul(&BigReal::from_rational(&self.scale, precision + 16))
            .with_precision(precision))
    }
}

/// Zeros of the level-n M-family iterate with parameter a > 0: the level-n
/// patterns scaled by 1/(2a), in the same ascending order.
pub fn m_zeros(n: u32, a: &BigRational, cap: u32) -> Result<Vec<ScaledZero>> {
    use num_traits::Signed;
    if !a.is_positive() {
        return Err(Error::NonPositiveParameter { a: a.to_string() });
    }
    let scale = (a * BigRational::from_integer(2.into())).recip();
    Ok(zeros(n, cap)?
        .into_iter()
        .map(|pattern| ScaledZero {
            pattern,
            scale: scale.clone(),
        })
        .collect())
}

/// Guard-adjusted tolerance exponent for comparisons at precision p after a
/// level-n evaluation: differences below 2^-(p - guard) are rounding noise.
pub fn noise_floor(n: u32, precision: usize) -> i64 {
    -(precision as i64 - guard_bits(n) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_poly, eval_map, MapParams, DEFAULT_DEGREE_CAP};
    use num_bigint::BigInt;

    const CAP: u32 = DEFAULT_ENUM_CAP;

    fn pat(outer: char, inner: &str) -> SignPattern {
        let o = if outer == '+' {
            RadicalSign::Plus
        } else {
            RadicalSign::Minus
        };
        let signs = inner
            .chars()
            .map(|c| {
                if c == '+' {
                    RadicalSign::Plus
                } else {
                    RadicalSign::Minus
                }
            })
            .collect();
        SignPattern::new(o, signs)
    }

    #[test]
    fn level_one_is_sqrt_two() {
        let v = pat('+', "").eval(128).unwrap();
        assert!((v.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-9);
        let m = pat('-', "").eval(128).unwrap();
        assert!(m.is_negative());
    }

    #[test]
    fn level_two_values_match_cosine_oracle() {
        // sqrt(2 + sqrt 2) = 2cos(pi/8), sqrt(2 - sqrt 2) = 2cos(3pi/8):
        // the cosine path is independent of the sqrt chain.
        let prec = 192;
        let pi = BigReal::pi(prec + 16);
        let two = BigReal::from_u64(2, prec + 16);
        let cases = [(pat('+', "+"), 1u64), (pat('+', "-"), 3u64)];
        for (pattern, mult) in cases {
            let trig = two.mul(
                &pi.mul(&BigReal::from_u64(mult, prec + 16))
                    .div(&BigReal::from_u64(8, prec + 16))
                    .cos(),
            );
            let v = pattern.eval(prec).unwrap();
            assert!(v.sub(&trig).abs_lt_pow2(-180), "pattern {pattern}");
        }
        assert!((pat('+', "+").eval(96).unwrap().to_f64() - 1.8477590650).abs() < 1e-9);
        assert!((pat('+', "-").eval(96).unwrap().to_f64() - 0.7653668647).abs() < 1e-9);
    }

    #[test]
    fn every_enumerated_pattern_evaluates() {
        // radicands stay in (0, 4) for patterns over 2, so eval never fails
        for n in 1..=6u32 {
            for p in zeros(n, CAP).unwrap() {
                assert!(p.eval(96).is_ok());
            }
        }
    }

    #[test]
    fn radical_rendering() {
        assert_eq!(pat('+', "").radical_string(), "sqrt(2)");
        assert_eq!(pat('-', "-+").radical_string(), "-sqrt(2-sqrt(2+sqrt(2)))");
    }

    #[test]
    fn sign_rule_comparisons() {
        // plus beats minus at the first differing depth
        assert_eq!(
            compare_symbolic(&pat('+', "+"), &pat('+', "-")).unwrap(),
            Ordering::Greater
        );
        // identical patterns are equal
        assert_eq!(
            compare_symbolic(&pat('+', "+-"), &pat('+', "+-")).unwrap(),
            Ordering::Equal
        );
        // a minus-minus prefix flips the deeper comparison
        assert_eq!(
            compare_symbolic(&pat('+', "-+"), &pat('+', "--")).unwrap(),
            Ordering::Less
        );
        // negative branch mirrors the positive one
        assert_eq!(
            compare_symbolic(&pat('-', "+"), &pat('-', "-")).unwrap(),
            Ordering::Less
        );
        // negatives sort below positives
        assert_eq!(
            compare_symbolic(&pat('-', "+"), &pat('+', "-")).unwrap(),
            Ordering::Less
        );
        assert!(compare_symbolic(&pat('+', "+"), &pat('+', "++")).is_err());
    }

    #[test]
    fn symbolic_order_matches_numeric_order() {
        // the numeric sort at 128 bits is the oracle for the sign rules
        for n in 1..=10u32 {
            let zs = zeros(n, CAP).unwrap();
            let mut prev: Option<BigReal> = None;
            for z in &zs {
                let v = z.eval(128).unwrap();
                if let Some(p) = &prev {
                    assert!(p < &v, "level {n}: {z} out of order");
                }
                prev = Some(v);
            }
        }
    }

    #[test]
    fn zero_counts_and_symmetry() {
        for n in 1..=10u32 {
            let zs = zeros(n, CAP).unwrap();
            assert_eq!(zs.len(), 1 << n);
            let negatives = zs.iter().filter(|p| p.outer_sign() == RadicalSign::Minus);
            assert_eq!(negatives.count(), 1 << (n - 1));
        }
        assert!(zeros(0, CAP).is_err());
        assert!(zeros(CAP + 1, CAP).is_err());
    }

    #[test]
    fn level_two_sorted_values() {
        let zs = zeros(2, CAP).unwrap();
        let shown: Vec<String> = zs.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["-+", "--", "+-", "++"]);
        let values: Vec<f64> = zs.iter().map(|p| p.eval(96).unwrap().to_f64()).collect();
        let expect = [-1.8477590650, -0.7653668647, 0.7653668647, 1.8477590650];
        for (v, e) in values.iter().zip(expect) {
            assert!((v - e).abs() < 1e-9, "{v} vs {e}");
        }
    }

    #[test]
    fn zeros_annihilate_the_map() {
        let l = MapParams::lucas();
        for n in 1..=8u32 {
            for z in zeros(n, CAP).unwrap() {
                let x = z.eval(192).unwrap();
                let v = eval_map(&l, n, &x);
                assert!(v.abs_lt_pow2(-96), "level {n} zero {z}: residual {v}");
            }
        }
    }

    #[test]
    fn trig_zeros_match_radical_zeros() {
        for n in 1..=6u32 {
            let mut trig = zeros_trig(n, 128, CAP).unwrap();
            trig.sort_by(|a, b| a.total_cmp(b));
            let radical: Vec<BigReal> = zeros(n, CAP)
                .unwrap()
                .iter()
                .map(|p| p.eval(128).unwrap())
                .collect();
            assert_eq!(trig.len(), radical.len());
            for (t, r) in trig.iter().zip(&radical) {
                assert!(t.sub(r).abs_lt_pow2(noise_floor(n, 128)), "level {n}");
            }
        }
    }

    #[test]
    fn trig_zero_small_cases() {
        // n=1: {2cos(pi/4), 2cos(3pi/4)} = {sqrt 2, -sqrt 2}
        let t = zeros_trig(1, 128, CAP).unwrap();
        assert!((t[0].to_f64() - std::f64::consts::SQRT_2).abs() < 1e-9);
        assert!((t[1].to_f64() + std::f64::consts::SQRT_2).abs() < 1e-9);
    }

    #[test]
    fn critical_point_structure() {
        // n=1: one minimum at the origin with value -2
        let r1 = critical_points(1, CAP).unwrap();
        assert_eq!(r1.critical_points.len(), 1);
        assert_eq!(r1.critical_points[0].location, CriticalLocation::Origin);
        assert_eq!(r1.critical_points[0].kind, ExtremumKind::Minimum);
        assert_eq!(r1.critical_points[0].value, -2);

        // n=2: maximum at the origin (value 2), minima at ±sqrt 2 (value -2)
        let r2 = critical_points(2, CAP).unwrap();
        assert_eq!(r2.critical_points.len(), 3);
        assert_eq!(r2.critical_points[0].kind, ExtremumKind::Maximum);
        assert_eq!(r2.critical_points[0].value, 2);
        for cp in &r2.critical_points[1..] {
            assert_eq!(cp.kind, ExtremumKind::Minimum);
            assert_eq!(cp.value, -2);
            match &cp.location {
                CriticalLocation::Zero(p) => assert_eq!(p.level(), 1),
                other => panic!("unexpected location {other:?}"),
            }
        }
    }

    #[test]
    fn critical_point_counts() {
        for n in 1..=10u32 {
            let r = critical_points(n, CAP).unwrap();
            assert_eq!(r.critical_points.len(), (1 << n) - 1, "card(M_{n})");
            let positives = r
                .critical_points
                .iter()
                .filter(|cp| match &cp.location {
                    CriticalLocation::Origin => false,
                    CriticalLocation::Zero(p) => p.outer_sign() == RadicalSign::Plus,
                })
                .count();
            assert_eq!(positives, (1 << (n - 1)) - 1, "card(M_{n}^+)");
        }
    }

    #[test]
    fn set_recurrence_m_is_previous_union_zeros() {
        // M_n = M_{n-1} ∪ Z_{n-1}, disjointly, as exact pattern sets
        use std::collections::HashSet;
        for n in 2..=9u32 {
            let prev: HashSet<_> = critical_points(n - 1, CAP)
                .unwrap()
                .critical_points
                .into_iter()
                .map(|cp| cp.location)
                .collect();
            let z_prev: HashSet<_> = zeros(n - 1, CAP)
                .unwrap()
                .into_iter()
                .map(CriticalLocation::Zero)
                .collect();
            let current: HashSet<_> = critical_points(n, CAP)
                .unwrap()
                .critical_points
                .into_iter()
                .map(|cp| cp.location)
                .collect();
            assert!(prev.is_disjoint(&z_prev), "M and Z overlap at {n}");
            let union: HashSet<_> = prev.union(&z_prev).cloned().collect();
            assert_eq!(current, union, "recurrence fails at {n}");
        }
    }

    #[test]
    fn derivative_vanishes_at_critical_points() {
        let l = MapParams::lucas();
        for n in 2..=6u32 {
            let dp = build_poly(&l, n, DEFAULT_DEGREE_CAP).unwrap().derivative();
            for cp in critical_points(n, CAP).unwrap().critical_points {
                let x = cp.location.eval(192).unwrap();
                let v = dp.eval_real(&x);
                assert!(
                    v.abs_lt_pow2(-96),
                    "derivative at {} (n={n}): {v}",
                    cp.location
                );
            }
        }
    }

    #[test]
    fn everything_lies_inside_the_open_interval() {
        // strict containment in (-2, 2) with margin 2^-40
        let two = BigReal::from_u64(2, 128);
        for n in 1..=8u32 {
            let report = critical_points(n, CAP).unwrap();
            for z in &report.zeros {
                let v = z.eval(128).unwrap().abs();
                assert!(two.sub(&v).exponent().unwrap_or(i64::MIN) > -40);
            }
            for cp in &report.critical_points {
                let v = cp.location.eval(128).unwrap().abs();
                assert!(two.sub(&v).exponent().unwrap_or(i64::MIN) > -40);
            }
        }
    }

    #[test]
    fn plus_chain_matches_cosine() {
        // sqrt 2 = 2cos(pi/4)
        let v1 = plus_chain(1, 128);
        assert!((v1.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-9);
        // sqrt(2 + sqrt 2) = 2cos(pi/8)
        let v2 = plus_chain(2, 128);
        assert!((v2.to_f64() - 1.8477590650).abs() < 1e-9);
        // n=10 against the cosine oracle to >= 100 bits
        let prec = 128;
        let w = prec + 16;
        let expect = BigReal::pi(w)
            .div(&BigReal::pow2(11, w))
            .cos()
            .mul(&BigReal::from_u64(2, w));
        let v10 = plus_chain(10, prec);
        assert!(v10.sub(&expect.with_precision(prec)).abs_lt_pow2(-100));
    }

    #[test]
    fn m_zeros_scale_and_annihilate() {
        use num_rational::BigRational;
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        // a = 1/2 reduces to the plain radicals
        for (s, p) in m_zeros(3, &half, CAP)
            .unwrap()
            .iter()
            .zip(zeros(3, CAP).unwrap())
        {
            assert_eq!(s.pattern, p);
            assert_eq!(s.eval(128).unwrap(), p.eval(128).unwrap());
        }
        // a = 1, n = 1: ±sqrt(2)/2
        let one = BigRational::from_integer(BigInt::from(1));
        let z1 = m_zeros(1, &one, CAP).unwrap();
        assert!((z1[1].eval(96).unwrap().to_f64() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
        // a = 2, n = 2: zeros(2)/4 annihilate the map to < 2^-64
        let two = BigRational::from_integer(BigInt::from(2));
        let m = MapParams::m(two.clone()).unwrap();
        for z in m_zeros(2, &two, CAP).unwrap() {
            let x = z.eval(128).unwrap();
            let v = eval_map(&m, 2, &x);
            assert!(v.abs_lt_pow2(-64), "residual {v}");
        }
        assert!(m_zeros(2, &BigRational::from_integer(BigInt::from(-1)), CAP).is_err());
    }
}
