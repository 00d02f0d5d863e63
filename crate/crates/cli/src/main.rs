//! CLI front end. Every subcommand prints one output envelope (human table
//! by default, `--json` / `--csv` for machines) and reports numeric payloads
//! at an explicit precision. Exit codes: 0 success, 1 domain errors or
//! failed checks, 2 usage errors.

mod output;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use llpoly::{
    build_poly, cosine_compare_samples, critical_points, derivative_product, eval_map,
    ll_integer_sequence, m_zeros, mersenne_test, orthogonality_integral, pi_approx,
    verify_t_identity, verify_u_identity, zeros, BigReal, CriticalLocation, ExtremumKind,
    MapParams, QuadratureSpec, DEFAULT_DEGREE_CAP, DEFAULT_ENUM_CAP,
};
use output::{Envelope, Format, StreamWriter};

#[derive(Parser)]
#[command(
    name = "llpoly",
    version,
    about = "Lucas-Lehmer polynomial family: exact expansions, nested-radical zeros, \
             Chebyshev identities, orthogonality quadrature and derived constants"
)]
struct Cli {
    /// Emit the output envelope as JSON
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit the output table as CSV
    #[arg(long, global = true)]
    csv: bool,

    /// Precision in bits for numeric payloads
    #[arg(long, global = true, default_value_t = 128)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "M", alias = "m")]
    M,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Iterate the map in big floats (any n)
    Map,
    /// Evaluate the exact expansion at an exact rational (n within the cap)
    Poly,
}

#[derive(Subcommand)]
enum Command {
    /// Exact expanded coefficients of the n-th iterate
    Poly {
        #[arg(long, value_enum, default_value_t = FamilyArg::L)]
        family: FamilyArg,
        /// Map parameter a > 0 (M family only)
        #[arg(long, value_parser = rational_arg)]
        a: Option<BigRational>,
        #[arg(long)]
        n: u32,
    },
    /// Evaluate the n-th iterate at a point x
    Eval {
        #[arg(long, value_enum, default_value_t = FamilyArg::L)]
        family: FamilyArg,
        #[arg(long, value_parser = rational_arg)]
        a: Option<BigRational>,
        #[arg(long)]
        n: u32,
        /// Point, as a fraction ("3/2") or decimal ("-0.25", "1e-3")
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        x: BigRational,
        #[arg(long, value_enum, default_value_t = MethodArg::Map)]
        method: MethodArg,
    },
    /// The 2^n zeros of the level-n iterate, sorted ascending
    Zeros {
        #[arg(long, value_enum, default_value_t = FamilyArg::L)]
        family: FamilyArg,
        #[arg(long, value_parser = rational_arg)]
        a: Option<BigRational>,
        #[arg(long)]
        n: u32,
    },
    /// Classified critical points of the level-n L iterate
    CriticalPoints {
        #[arg(long)]
        n: u32,
    },
    /// Exact identity suite (T, U, derivative product) over an n-range
    /// and a-grid: nonzero exit on any failure
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        /// Grid values for a (repeatable); defaults to 1/2, 1, 3/2, 2
        #[arg(long = "a", value_parser = rational_arg)]
        a_grid: Vec<BigRational>,
    },
    /// Orthogonality matrix under the weight 1/(4 sqrt(4 - x^2))
    Quadrature {
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        /// Node count (default 2^max_n + 1, the minimum exact count)
        #[arg(long)]
        nodes: Option<u32>,
    },
    /// Pi approximation 2^(n+1) sqrt(2 - chain(n)) with its error
    Pi {
        #[arg(long)]
        n: u32,
        /// Tabulate every level 1..=n instead of just n
        #[arg(long)]
        all: bool,
    },
    /// Lucas-Lehmer primality test for 2^p - 1
    Mersenne {
        #[arg(long)]
        p: u64,
    },
    /// Lucas-Lehmer integer sequence 4, 14, 194, ...
    Sequence {
        #[arg(long)]
        count: u32,
    },
    /// Samples of the iterate against its cosine model 2cos(2^(n-1) x)
    PlotData {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        half_width: BigRational,
        #[arg(long, default_value_t = 41)]
        count: u32,
    },
}

enum CliError {
    Usage(String),
    Lib(llpoly::Error),
}

impl From<llpoly::Error> for CliError {
    fn from(e: llpoly::Error) -> Self {
        CliError::Lib(e)
    }
}

/// Exact rational from "p/q", "-3", "0.25" or "1e-3".
fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().ok()?;
        let den: BigInt = d.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = digits.parse().ok()?;
    let scale = frac_part.len() as i64 - i64::from(exp);
    let ten = BigInt::from(10);
    Some(if scale >= 0 {
        BigRational::new(num, ten.pow(u32::try_from(scale).ok()?))
    } else {
        BigRational::from_integer(num * ten.pow(u32::try_from(-scale).ok()?))
    })
}

fn rational_arg(s: &str) -> Result<BigRational, String> {
    parse_rational(s).ok_or_else(|| format!("{s:?} is not a rational number"))
}

fn make_params(family: FamilyArg, a: Option<BigRational>) -> Result<MapParams, CliError> {
    match family {
        FamilyArg::L => {
            if a.is_some() {
                return Err(CliError::Usage("--a only applies to --family M".into()));
            }
            Ok(MapParams::lucas())
        }
        FamilyArg::M => {
            let a = a.ok_or_else(|| CliError::Usage("--family M requires --a".into()))?;
            Ok(MapParams::m(a)?)
        }
    }
}

/// Exact-expansion cap, overridable through LLPOLY_MAX_N.
fn degree_cap() -> Result<u32, CliError> {
    match std::env::var("LLPOLY_MAX_N") {
        Err(_) => Ok(DEFAULT_DEGREE_CAP),
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::Usage(format!("LLPOLY_MAX_N={v:?} is not an integer"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Human
    };
    match run(cli, format) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli, format: Format) -> Result<ExitCode, CliError> {
    let precision = cli.precision;
    match cli.command {
        Command::Poly { family, a, n } => {
            let params = make_params(family, a)?;
            let p = build_poly(&params, n, degree_cap()?)?;
            let rows = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![i.to_string(), c.to_string()])
                .collect();
            let envelope = Envelope {
                command: "poly",
                params: BTreeMap::from([("family", params.label()), ("n", n.to_string())]),
                precision_bits: precision,
                columns: vec!["power", "coefficient"],
                rows,
            };
            print!("{}", envelope.render(format));
            Ok(ExitCode::SUCCESS)
        }

        Command::Eval {
            family,
            a,
            n,
            x,
            method,
        } => {
            let params = make_params(family, a)?;
            let (method_name, x_shown, value) = match method {
                MethodArg::Poly => {
                    let p = build_poly(&params, n, degree_cap()?)?;
                    ("poly", x.to_string(), p.eval(&x).to_string())
                }
                MethodArg::Map => {
                    let xr = BigReal::from_rational(&x, precision);
                    let v = eval_map(&params, n, &xr);
                    ("map", xr.to_string(), v.to_string())
                }
            };
            let envelope = Envelope {
                command: "eval",
                params: BTreeMap::from([
                    ("family", params.label()),
                    ("n", n.to_string()),
                    ("method", method_name.to_string()),
                ]),
                precision_bits: precision,
                columns: vec!["x", "value"],
                rows: vec![vec![x_shown, value]],
            };
            print!("{}", envelope.render(format));
            Ok(ExitCode::SUCCESS)
        }

        Command::Zeros { family, a, n } => {
            let params = make_params(family, a)?;
            let scale = params.zero_scale();
            let head = Envelope {
                command: "zeros",
                params: BTreeMap::from([
                    ("family", params.label()),
                    ("n", n.to_string()),
                    ("count", (1u64 << n.min(63)).to_string()),
                    ("scale", scale.to_string()),
                ]),
                precision_bits: precision,
                columns: vec!["index", "pattern", "radical", "value"],
                rows: Vec::new(),
            };
            // up to 2^20 rows: stream instead of buffering
            let stdout = std::io::stdout();
            let mut writer = StreamWriter::new(stdout.lock(), &head, format)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            if params.is_lucas() {
                for (i, z) in zeros(n, DEFAULT_ENUM_CAP)?.iter().enumerate() {
                    let v = z.eval(precision)?;
                    writer
                        .row(&[
                            i.to_string(),
                            z.to_string(),
                            z.radical_string(),
                            v.to_string(),
                        ])
                        .map_err(|e| CliError::Usage(e.to_string()))?;
                }
            } else {
                for (i, z) in m_zeros(n, params.a(), DEFAULT_ENUM_CAP)?.iter().enumerate() {
                    let v = z.eval(precision)?;
                    writer
                        .row(&[
                            i.to_string(),
                            z.pattern.to_string(),
                            format!("{}*{}", z.scale, z.pattern.radical_string()),
                            v.to_string(),
                        ])
                        .map_err(|e| CliError::Usage(e.to_string()))?;
                }
            }
            writer
                .finish()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(ExitCode::SUCCESS)
        }

        Command::CriticalPoints { n } => {
            let report = critical_points(n, DEFAULT_ENUM_CAP)?;
            let mut rows = Vec::with_capacity(report.critical_points.len());
            for cp in &report.critical_points {
                let level = match &cp.location {
                    CriticalLocation::Origin => 0,
                    CriticalLocation::Zero(p) => p.level(),
                };
                let kind = match cp.kind {
                    ExtremumKind::Maximum => "max",
                    ExtremumKind::Minimum => "min",
                };
                rows.push(vec![
                    cp.location.to_string(),
                    level.to_string(),
                    kind.to_string(),
                    cp.value.to_string(),
                    cp.location.eval(precision)?.to_string(),
                ]);
            }
            let envelope = Envelope {
                command: "critical-points",
                params: BTreeMap::from([
                    ("n", n.to_string()),
                    ("zero_count", report.zeros.len().to_string()),
                    ("critical_count", report.critical_points.len().to_string()),
                ]),
                precision_bits: precision,
                columns: vec!["location", "level", "kind", "value", "numeric"],
                rows,
            };
            print!("{}", envelope.render(format));
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { max_n, a_grid } => {
            let cap = degree_cap()?;
            let grid = if a_grid.is_empty() {
                ["1/2", "1", "3/2", "2"]
                    .iter()
                    .map(|s| parse_rational(s).expect("grid literals parse"))
                    .collect()
            } else {
                a_grid
            };
            let mut families = vec![MapParams::lucas()];
            for a in grid {
                families.push(MapParams::m(a)?);
            }
            let mut rows = Vec::new();
            let mut all_pass = true;
            for params in &families {
                for n in 1..=max_n {
                    let t = verify_t_identity(params, n, cap)?;
                    push_check(
                        &mut rows,
                        "t-identity",
                        params,
                        n,
                        t.holds,
                        &t.first_mismatch,
                    );
                    all_pass &= t.holds;

                    let u = verify_u_identity(params, n, cap)?;
                    push_check(
                        &mut rows,
                        "u-identity",
                        params,
                        n,
                        u.holds,
                        &u.first_mismatch,
                    );
                    all_pass &= u.holds;

                    if n >= 2 {
                        let product = derivative_product(params, n, cap)?;
                        let formal = build_poly(params, n, cap)?.derivative();
                        let ok = product == formal;
                        push_check(&mut rows, "derivative-product", params, n, ok, &None);
                        all_pass &= ok;
                    }
                }
            }
            let envelope = Envelope {
                command: "verify",
                params: BTreeMap::from([
                    ("max_n", max_n.to_string()),
                    ("checks", rows.len().to_string()),
                ]),
                precision_bits: precision,
                columns: vec!["check", "family", "n", "status", "detail"],
                rows,
            };
            print!("{}", envelope.render(format));
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Quadrature { max_n, nodes } => {
            let node_count = nodes.unwrap_or_else(|| (1u32 << max_n.min(30)) + 1);
            let spec = QuadratureSpec {
                node_count,
                precision,
            };
            let half_pi = BigReal::pi(precision).mul_pow2(-1);
            let tolerance_log2 = -(precision as i64 - 40);
            let mut rows = Vec::new();
            let mut all_pass = true;
            for m in 0..=max_n {
                for n in m..=max_n {
                    let v = orthogonality_integral(m, n, &spec)?;
                    let (expected, deviation) = if m == n {
                        (half_pi.to_string(), v.sub(&half_pi).abs())
                    } else {
                        ("0".to_string(), v.abs())
                    };
                    let ok = deviation.abs_lt_pow2(tolerance_log2);
                    all_pass &= ok;
                    rows.push(vec![
                        m.to_string(),
                        n.to_string(),
                        v.to_string(),
                        expected,
                        if ok { "PASS".into() } else { "FAIL".into() },
                    ]);
                }
            }
            let envelope = Envelope {
                command: "quadrature",
                params: BTreeMap::from([
                    ("max_n", max_n.to_string()),
                    ("nodes", node_count.to_string()),
                    ("tolerance_log2", tolerance_log2.to_string()),
                ]),
                precision_bits: precision,
                columns: vec!["m", "n", "value", "expected", "status"],
                rows,
            };
            print!("{}", envelope.render(format));
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Pi { n, all } => {
            let pi = BigReal::pi(precision);
            let levels: Vec<u32> = if all { (1..=n).collect() } else { vec![n] };
            let rows = levels
                .iter()
                .map(|&k| {
                    let v = pi_approx(k, precision);
                    let err = pi.sub(&v).abs();
                    vec![k.to_string(), v.to_string(), err.to_string()]
                })
                .collect();
            let envelope = Envelope {
                command: "pi",
                params: BTreeMap::from([("n", n.to_string())]),
                precision_bits: precision,
                columns: vec!["n", "value", "error"],
                rows,
            };
            print!("{}", envelope.render(format));
            Ok(ExitCode::SUCCESS)
        }

        Command::Mersenne { p } => {
            let is_prime = mersenne_test(p)?;
            let envelope = Envelope {
                command: "mersenne",
                params: BTreeMap::from([("p", p.to_string())]),
                precision_bits: precision,
                columns: vec!["p", "number", "is_prime"],
                rows: vec![vec![
                    p.to_string(),
                    format!("2^{p}-1"),
                    is_prime.to_string(),
                ]],
            };
            print!("{}", envelope.render(format));
            Ok(ExitCode::SUCCESS)
        }

        Command::Sequence { count } => {
            let rows = ll_integer_sequence(count)
                .iter()
                .enumerate()
                .map(|(i, s)| vec![(i + 1).to_string(), s.to_string()])
                .collect();
            let envelope = Envelope {
                command: "sequence",
                params: BTreeMap::from([("count", count.to_string())]),
                precision_bits: precision,
                columns: vec!["k", "term"],
                rows,
            };
            print!("{}", envelope.render(format));
            Ok(ExitCode::SUCCESS)
        }

        Command::PlotData {
            n,
            half_width,
            count,
        } => {
            if !half_width.is_positive() {
                return Err(CliError::Usage("--half-width must be positive".into()));
            }
            let h = BigReal::from_rational(&half_width, precision);
            let samples = cosine_compare_samples(n, &h, count)?;
            let rows = samples
                .iter()
                .map(|s| {
                    let delta = s.map_value.sub(&s.cosine_value).abs();
                    vec![
                        s.x.to_string(),
                        s.map_value.to_string(),
                        s.cosine_value.to_string(),
                        delta.to_string(),
                    ]
                })
                .collect();
            let envelope = Envelope {
                command: "plot-data",
                params: BTreeMap::from([
                    ("n", n.to_string()),
                    ("half_width", half_width.to_string()),
                    ("count", count.to_string()),
                ]),
                precision_bits: precision,
                columns: vec!["x", "map", "cosine", "delta"],
                rows,
            };
            print!("{}", envelope.render(format));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn push_check(
    rows: &mut Vec<Vec<String>>,
    check: &str,
    params: &MapParams,
    n: u32,
    ok: bool,
    mismatch: &Option<llpoly::CoeffMismatch>,
) {
    let detail = match mismatch {
        Some(m) => format!("coeff {} differs: {} vs {}", m.index, m.lhs, m.rhs),
        None => "-".to_string(),
    };
    rows.push(vec![
        check.to_string(),
        params.label(),
        n.to_string(),
        if ok { "PASS".into() } else { "FAIL".into() },
        if ok { "-".into() } else { detail },
    ]);
}
