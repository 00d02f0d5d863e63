//! Acceptance suite. Each test covers one numbered criterion, pins its
//! tolerance in code, and prints a single pass/fail line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use llpoly::{
    build_poly, critical_points, curvature_at_max, derivative_product, eval_map,
    ll_integer_sequence, local_k, mersenne_test, orthogonality_integral, pi_approx, taylor_at_zero,
    verify_t_identity, verify_u_identity, zeros, zeros_trig, BigReal, CriticalLocation,
    ExtremumKind, MapParams, QuadratureSpec, RadicalSign, DEFAULT_DEGREE_CAP, DEFAULT_ENUM_CAP,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

const CAP: u32 = DEFAULT_DEGREE_CAP;
const ENUM_CAP: u32 = DEFAULT_ENUM_CAP;

fn conclude(id: u32, what: &str, failures: Vec<String>) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id:2} [{what}]: {status}");
    assert!(failures.is_empty(), "criterion {id} [{what}]: {failures:?}");
}

fn a_grid() -> Vec<BigRational> {
    [(1, 2), (1, 1), (3, 2), (2, 1)]
        .iter()
        .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect()
}

#[test]
fn criterion_01_first_kind_identity_exact() {
    let mut failures = Vec::new();
    let lucas = MapParams::lucas();
    for n in 1..=10u32 {
        let report = verify_t_identity(&lucas, n, CAP).unwrap();
        if !report.holds {
            failures.push(format!("L n={n}: {:?}", report.first_mismatch));
        }
    }
    for a in a_grid() {
        let params = MapParams::m(a.clone()).unwrap();
        for n in 1..=8u32 {
            let report = verify_t_identity(&params, n, CAP).unwrap();
            if !report.holds {
                failures.push(format!("a={a} n={n}: {:?}", report.first_mismatch));
            }
        }
    }
    conclude(1, "T-identity coefficient-exact", failures);
}

#[test]
fn criterion_02_second_kind_identity_exact() {
    let mut failures = Vec::new();
    let lucas = MapParams::lucas();
    for n in 1..=8u32 {
        let report = verify_u_identity(&lucas, n, CAP).unwrap();
        if !report.holds {
            failures.push(format!("L n={n}: {:?}", report.first_mismatch));
        }
    }
    for a in a_grid() {
        let params = MapParams::m(a.clone()).unwrap();
        for n in 1..=8u32 {
            let report = verify_u_identity(&params, n, CAP).unwrap();
            if !report.holds {
                failures.push(format!("a={a} n={n}: {:?}", report.first_mismatch));
            }
        }
    }
    conclude(2, "U-identity coefficient-exact", failures);
}

#[test]
fn criterion_03_derivative_product_exact() {
    let mut failures = Vec::new();
    let mut families = vec![MapParams::lucas()];
    families.extend(a_grid().into_iter().map(|a| MapParams::m(a).unwrap()));
    for params in families {
        for n in 2..=10u32 {
            let product = derivative_product(&params, n, CAP).unwrap();
            let formal = build_poly(&params, n, CAP).unwrap().derivative();
            if product != formal {
                failures.push(format!("{} n={n}", params.label()));
            }
        }
    }
    conclude(3, "derivative product formula", failures);
}

#[test]
fn criterion_04_zero_soundness_and_ordering() {
    let mut failures = Vec::new();
    let lucas = MapParams::lucas();
    for n in 1..=12u32 {
        let zs = zeros(n, ENUM_CAP).unwrap();
        if zs.len() != 1 << n {
            failures.push(format!("card(Z_{n}) = {}", zs.len()));
            continue;
        }
        // |L_n(zero)| < 2^-96 at 192 bits, and the radical multiset equals
        // the trig multiset 2cos((2k+1)pi/2^(n+1)) to 2^-96
        let mut radical: Vec<BigReal> = Vec::with_capacity(zs.len());
        for z in &zs {
            let x = z.eval(192).unwrap();
            let residual = eval_map(&lucas, n, &x);
            if !residual.abs_lt_pow2(-96) {
                failures.push(format!("residual at level {n}, zero {z}: {residual}"));
            }
            radical.push(x);
        }
        // symbolic order equals numeric order at the 128-bit oracle precision
        for pair in radical.windows(2) {
            if pair[0].with_precision(128) >= pair[1].with_precision(128) {
                failures.push(format!("ordering violated at level {n}"));
                break;
            }
        }
        let mut trig = zeros_trig(n, 192, ENUM_CAP).unwrap();
        trig.sort_by(|a, b| a.total_cmp(b));
        for (r, t) in radical.iter().zip(&trig) {
            if !r.sub(t).abs_lt_pow2(-96) {
                failures.push(format!("trig multiset mismatch at level {n}"));
                break;
            }
        }
    }
    conclude(4, "zero soundness and ordering", failures);
}

#[test]
fn criterion_05_critical_point_structure() {
    let mut failures = Vec::new();
    let lucas = MapParams::lucas();
    let two = BigReal::from_u64(2, 192);
    for n in 1..=12u32 {
        let report = critical_points(n, ENUM_CAP).unwrap();
        if report.critical_points.len() != (1 << n) - 1 {
            failures.push(format!("card(M_{n}) = {}", report.critical_points.len()));
        }
        let positive = report
            .critical_points
            .iter()
            .filter(|cp| match &cp.location {
                CriticalLocation::Origin => false,
                CriticalLocation::Zero(p) => p.outer_sign() == RadicalSign::Plus,
            })
            .count();
        if positive != (1 << (n - 1)) - 1 {
            failures.push(format!("card(M_{n}^+) = {positive}"));
        }
        for cp in &report.critical_points {
            let x = cp.location.eval(192).unwrap();
            // strictly inside (-2, 2)
            if !x.abs().sub(&two).is_negative() {
                failures.push(format!("level {n}: {} outside (-2,2)", cp.location));
            }
            // maxima evaluate to 2, minima to -2
            let v = eval_map(&lucas, n, &x);
            let expect = BigReal::from_i64(cp.value.into(), 192);
            let kind_ok = match cp.kind {
                ExtremumKind::Maximum => cp.value == 2,
                ExtremumKind::Minimum => cp.value == -2,
            };
            if !kind_ok {
                failures.push(format!("level {n}: {} kind/value disagree", cp.location));
            }
            if !v.sub(&expect).abs_lt_pow2(-96) {
                failures.push(format!(
                    "level {n}: value at {} is {v}, expected {}",
                    cp.location, cp.value
                ));
            }
        }
    }
    conclude(5, "critical-point structure", failures);
}

#[test]
fn criterion_06_taylor_coefficients_exact() {
    let mut failures = Vec::new();
    let lucas = MapParams::lucas();
    let two = BigRational::from_integer(BigInt::from(2));
    for n in 2..=12u32 {
        let (c0, c1, c2) = taylor_at_zero(&lucas, n, CAP).unwrap();
        // (2, 0, -4^(n-1))
        let expect_c2 = -BigRational::from_integer(BigInt::one() << (2 * n - 2));
        if c0 != two || !c1.is_zero() || c2 != expect_c2 {
            failures.push(format!("L n={n}: ({c0}, {c1}, {c2})"));
        }
    }
    for a in a_grid() {
        let params = MapParams::m(a.clone()).unwrap();
        for n in 2..=12u32 {
            let (c0, c1, c2) = taylor_at_zero(&params, n, CAP).unwrap();
            // (1/a, 0, -a 2^(2n-1))
            let expect_c0 = a.recip();
            let expect_c2 = -(&a * BigRational::from_integer(BigInt::one() << (2 * n - 1)));
            if c0 != expect_c0 || !c1.is_zero() || c2 != expect_c2 {
                failures.push(format!("a={a} n={n}: ({c0}, {c1}, {c2})"));
            }
        }
    }
    conclude(6, "Taylor coefficients at zero", failures);
}

#[test]
fn criterion_07_curvature_at_maxima() {
    let mut failures = Vec::new();
    let lucas = MapParams::lucas();
    // k(0) = 1 exactly
    let k0 = local_k(&BigReal::from_u64(0, 192)).unwrap();
    if k0.k != BigReal::from_u64(1, 192) {
        failures.push(format!("k(0) = {}", k0.k));
    }
    for n in 2..=8u32 {
        let second = build_poly(&lucas, n, CAP)
            .unwrap()
            .derivative()
            .derivative();
        let mut positive_maxima: Vec<BigReal> = Vec::new();
        for cp in critical_points(n, ENUM_CAP).unwrap().critical_points {
            if cp.kind != ExtremumKind::Maximum {
                continue;
            }
            let x0 = cp.location.eval(192).unwrap();
            let formula = curvature_at_max(n, &x0).unwrap();
            let exact = second.eval_real(&x0);
            if !formula.sub(&exact).abs_lt_pow2(-64) {
                failures.push(format!(
                    "n={n} at {}: formula {formula} vs exact {exact}",
                    cp.location
                ));
            }
            if let CriticalLocation::Zero(p) = &cp.location {
                if p.outer_sign() == RadicalSign::Plus {
                    positive_maxima.push(x0);
                }
            }
        }
        // k strictly increases along the positive maxima
        positive_maxima.sort_by(|a, b| a.total_cmp(b));
        let ks: Vec<BigReal> = positive_maxima
            .iter()
            .map(|x0| local_k(x0).unwrap().k)
            .collect();
        for pair in ks.windows(2) {
            if pair[0] >= pair[1] {
                failures.push(format!("n={n}: k not increasing"));
                break;
            }
        }
        if let Some(first) = ks.first() {
            if first <= &BigReal::from_u64(1, 192) {
                failures.push(format!("n={n}: k at smallest positive maximum <= 1"));
            }
        }
    }
    conclude(7, "curvature factor at maxima", failures);
}

#[test]
fn criterion_08_orthogonality() {
    let mut failures = Vec::new();
    let spec = QuadratureSpec {
        node_count: 257, // > (2^8 + 2^8) / 2, enough for every pair below
        precision: 128,
    };
    let half_pi = BigReal::pi(128).mul_pow2(-1);
    for m in 0..=8u32 {
        for n in m..=8u32 {
            let v = orthogonality_integral(m, n, &spec).unwrap();
            if m == n {
                if !v.sub(&half_pi).abs_lt_pow2(-88) {
                    failures.push(format!("<L_{m}, L_{m}> = {v}, expected pi/2"));
                }
            } else if !v.abs_lt_pow2(-88) {
                failures.push(format!("<L_{m}, L_{n}> = {v}"));
            }
        }
    }
    conclude(8, "orthogonality quadrature", failures);
}

#[test]
fn criterion_09_pi_approximation() {
    let mut failures = Vec::new();
    let prec = 256;
    let pi = BigReal::pi(prec);
    let mut prev_err: Option<BigReal> = None;
    for n in 4..=13u32 {
        let err = pi.sub(&pi_approx(n, prec)).abs();
        if let Some(prev) = &prev_err {
            let ratio = err.div(prev).to_f64();
            if !(0.2375..=0.2625).contains(&ratio) {
                failures.push(format!("step {} -> {n}: ratio {ratio}", n - 1));
            }
        }
        prev_err = Some(err);
    }
    // six decimal digits at n = 10
    let err10 = pi.sub(&pi_approx(10, prec)).abs();
    let bound = BigReal::parse("5e-7", prec).unwrap();
    if err10 >= bound {
        failures.push(format!("pi_approx(10) error {err10}"));
    }
    conclude(9, "pi approximation convergence", failures);
}

#[test]
fn criterion_10_mersenne_plumbing() {
    let start = std::time::Instant::now();
    let mut failures = Vec::new();
    for p in [3u64, 5, 7, 13, 17, 19, 31] {
        if !mersenne_test(p).unwrap() {
            failures.push(format!("2^{p}-1 reported composite"));
        }
    }
    for p in [11u64, 23, 29, 37] {
        if mersenne_test(p).unwrap() {
            failures.push(format!("2^{p}-1 reported prime"));
        }
    }
    let seq = ll_integer_sequence(4);
    let expect: Vec<BigInt> = [4, 14, 194, 37634]
        .iter()
        .map(|&v| BigInt::from(v))
        .collect();
    if seq != expect {
        failures.push(format!("sequence {seq:?}"));
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        failures.push(format!("runtime {elapsed:?} exceeds 1 s"));
    }
    conclude(10, "Mersenne test and integer sequence", failures);
}

#[test]
fn criterion_11_family_reduction_and_asymptotics() {
    let mut failures = Vec::new();
    let lucas = MapParams::lucas();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let m_half = MapParams::m(half).unwrap();
    for n in 0..=10u32 {
        if build_poly(&lucas, n, CAP).unwrap() != build_poly(&m_half, n, CAP).unwrap() {
            failures.push(format!("M^(1/2) != L at n={n}"));
        }
    }
    let tol = BigReal::parse("1e-3", 128).unwrap();
    for params in [&lucas, &m_half] {
        for n in 1..=4u32 {
            for sign in [1i64, -1] {
                let x = BigReal::from_i64(100 * sign, 128);
                let ratio = llpoly::asymptotic_ratio(params, n, &x).unwrap();
                let dev = ratio.sub(&BigReal::from_u64(1, 128)).abs();
                if dev >= tol {
                    failures.push(format!(
                        "{} n={n} x={}: ratio off by {dev}",
                        params.label(),
                        x
                    ));
                }
            }
        }
    }
    conclude(11, "family reduction and asymptotic ratio", failures);
}
