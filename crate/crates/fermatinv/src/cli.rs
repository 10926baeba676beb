//! Command-line surface: one subcommand per pipeline, each emitting a
//! `CommandReport` as JSON (`--json`) or an aligned text table, plus the
//! newline-delimited `search` stream. Exit codes: 0 success, 2 input
//! validation, 3 computation error.

use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::curves::{fermat_model, AffinePoint};
use crate::cycunits::{cyclotomic_unit_generators, irregularity, subextension_count};
use crate::exactnum::{ExactField, Fp, Rat, DEFAULT_FACTOR_BOUND};
use crate::invariant::{psi, search_nonvanishing};
use crate::jacobian::{jacobian_order_finite_field, Jacobian};
use crate::padic::{
    good_reduction_field, hensel_lift, ramification_report, wieferich_scan, GoodReductionField,
    PadicApprox, ZPoly,
};
use crate::poly::Poly;
use crate::quadclass::class_group;

/// Name of the environment variable overriding the trial-division bound
/// used by `invariant` and `search`.
pub const FACTOR_BOUND_ENV: &str = "FERMATINV_FACTOR_BOUND";

#[derive(Parser, Debug)]
#[command(
    name = "fermatinv",
    version,
    about = "Exact arithmetic on Jacobians of Fermat quotient curves",
    disable_help_subcommand = true
)]
pub struct Cli {
    /// Emit a JSON report instead of a text table.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Primes p ≤ bound with base^(p−1) ≡ 1 (mod p²).
    Wieferich {
        #[arg(long)]
        base: u64,
        #[arg(long)]
        bound: u64,
    },
    /// How p factors in the splitting data of X^p − l.
    Ramification {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        l: u64,
    },
    /// Smallest field with everywhere-good reduction above p.
    #[command(name = "good-reduction-field")]
    GoodReductionField {
        #[arg(long)]
        p: u64,
    },
    /// Lift the seed root l mod p of X^p − l to higher p-adic precision.
    Hensel {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_negative_numbers = true)]
        l: i64,
        /// Starting residue; defaults to l mod p.
        #[arg(long, allow_negative_numbers = true)]
        x0: Option<i64>,
        /// Target precision: the root is returned mod p^target.
        #[arg(long, default_value_t = 2)]
        target: u32,
    },
    /// The genus-(p−1)/2 quotient curve and its odd-degree model.
    Curve {
        #[arg(long)]
        p: u64,
    },
    /// Two-torsion divisors of y² = ∏(x − tᵢ) for given rational roots.
    #[command(name = "two-torsion")]
    TwoTorsion {
        /// Comma-separated roots, e.g. 0,1,2,3,4 (fractions allowed).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        roots: Vec<String>,
    },
    /// Order of a divisor class on the quotient-curve jacobian over ℚ.
    Order {
        #[arg(long)]
        p: u64,
        /// "Q" for the base point class (X, −1/2), or "u,v" coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
    /// Number of points on a jacobian over the prime field F_q.
    #[command(name = "jacobian-count")]
    JacobianCount {
        #[arg(long)]
        q: u64,
        /// Reduce the quotient-curve model for this p mod q.
        #[arg(long, conflicts_with = "coeffs")]
        p: Option<u64>,
        /// Comma-separated integer coefficients of f, constant term first.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Option<Vec<i64>>,
    },
    /// Class group of an imaginary quadratic discriminant.
    Classgroup {
        #[arg(long, allow_negative_numbers = true)]
        d: i128,
    },
    /// The generators ξ_a of the cyclotomic units of ℚ(ζ_p).
    #[command(name = "cyclotomic-units")]
    CyclotomicUnits {
        #[arg(long)]
        p: u64,
    },
    /// Count of degree-p Kummer subextensions cut out by cyclotomic units.
    #[command(name = "kummer-count")]
    KummerCount {
        #[arg(long)]
        p: u64,
        /// Assert the Vandiver hypothesis for p (required).
        #[arg(long)]
        vandiver: bool,
    },
    /// Irregular primes and their Bernoulli-numerator witnesses.
    Irregular {
        /// Test a single prime.
        #[arg(long, conflicts_with = "bound")]
        p: Option<u64>,
        /// Scan all odd primes up to this bound.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// The ideal-class invariant of the point attached to (p, u).
    Invariant {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_negative_numbers = true)]
        u: i64,
    },
    /// Scan a u-range for nonvanishing invariants (newline-delimited JSON).
    Search {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_negative_numbers = true)]
        umin: i64,
        #[arg(long, allow_negative_numbers = true)]
        umax: i64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Restart the scan at this u (skips every |u| below it).
        #[arg(long = "resume-from", allow_negative_numbers = true)]
        resume_from: Option<i64>,
    },
}

/// One finished command: what ran, with which inputs, and what came out.
#[derive(Clone, Debug)]
pub struct CommandReport {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub elapsed_ms: u64,
}

impl CommandReport {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    /// Aligned key/value table; nested result keys are dotted, and a result
    /// row that restates an input row verbatim is shown once.
    pub fn to_table(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("command".into(), self.command.clone())];
        flatten_json("", &self.inputs, &mut rows);
        let input_rows = rows.clone();
        flatten_json("", &self.result, &mut rows);
        rows.push(("elapsed_ms".into(), self.elapsed_ms.to_string()));
        let mut seen = 0usize;
        rows.retain(|row| {
            let dup = seen >= input_rows.len() && input_rows.contains(row);
            seen += 1;
            !dup
        });
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn flatten_json(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten_json(&key, val, rows);
            }
        }
        _ => rows.push((prefix.to_string(), scalar_text(v))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => items
            .iter()
            .map(scalar_text)
            .collect::<Vec<_>>()
            .join(", "),
        other => other.to_string(),
    }
}

/// Trial-division bound: the override from the environment, or the default.
pub fn factor_bound_from_env() -> crate::Result<u64> {
    match std::env::var(FACTOR_BOUND_ENV) {
        Err(_) => Ok(DEFAULT_FACTOR_BOUND),
        Ok(s) => match s.trim().parse::<u64>() {
            Ok(b) if b >= 2 => Ok(b),
            _ => Err(crate::Error::InvalidInput(format!(
                "{FACTOR_BOUND_ENV} must be an integer of at least 2, got `{s}`"
            ))),
        },
    }
}

/// Parses argv, runs the chosen subcommand, prints its report, and returns
/// the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs one parsed command against stdout/stderr.
pub fn execute(cli: &Cli) -> crate::Result<()> {
    if let Command::Search {
        p,
        umin,
        umax,
        workers,
        resume_from,
    } = &cli.command
    {
        return run_search(*p, *umin, *umax, *workers, *resume_from);
    }
    let start = Instant::now();
    let (name, inputs, result) = dispatch(&cli.command)?;
    let report = CommandReport {
        command: name.to_string(),
        inputs,
        result,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    if cli.json {
        println!("{}", report.to_json());
    } else {
        println!("{}", report.to_table());
    }
    Ok(())
}

fn dispatch(command: &Command) -> crate::Result<(&'static str, Value, Value)> {
    match command {
        Command::Wieferich { base, bound } => {
            let primes = wieferich_scan(*base, *bound)?;
            Ok((
                "wieferich",
                json!({"base": base, "bound": bound}),
                json!({"primes": primes}),
            ))
        }
        Command::Ramification { p, l } => {
            let r = ramification_report(*p, *l)?;
            Ok((
                "ramification",
                json!({"p": p, "l": l}),
                json!({
                    "wieferich": r.wieferich,
                    "p_unramified_in_n": r.p_unramified_in_n,
                    "shape_in_l": r.shape_in_l.to_string(),
                    "num_primes_above_p_in_n": r.num_primes_above_p_in_n,
                }),
            ))
        }
        Command::GoodReductionField { p } => {
            let field = match good_reduction_field(*p)? {
                GoodReductionField::K => "K".to_string(),
                GoodReductionField::KAdjoinPthRootOfTwo => format!("K(2^(1/{p}))"),
            };
            Ok((
                "good-reduction-field",
                json!({"p": p}),
                json!({"field": field}),
            ))
        }
        Command::Hensel { p, l, x0, target } => {
            let f = ZPoly::x_pow_minus(u32::try_from(*p).map_err(|_| {
                crate::Error::InvalidInput(format!("exponent {p} is too large"))
            })?, *l);
            let seed_value = x0.unwrap_or((*l).rem_euclid(*p as i64));
            let seed = PadicApprox::new(*p, 1, seed_value)?;
            let root = hensel_lift(&f, &seed, *target)?;
            let modulus = BigInt::from(*p).pow(*target);
            Ok((
                "hensel",
                json!({"p": p, "l": l, "x0": seed.value().to_string(), "target": target}),
                json!({
                    "f": format!("X^{p} - ({l})"),
                    "root": root.value().to_string(),
                    "modulus": modulus.to_string(),
                }),
            ))
        }
        Command::Curve { p } => {
            let model = fermat_model(*p)?;
            Ok((
                "curve",
                json!({"p": p}),
                json!({
                    "genus": model.genus(),
                    "hyper": model.hyper().to_json("Q"),
                    "integral": model.integral().to_json("Q"),
                }),
            ))
        }
        Command::TwoTorsion { roots } => {
            let parsed: Vec<Rat> = roots
                .iter()
                .map(|s| Rat::parse(s))
                .collect::<crate::Result<_>>()?;
            let mut f = Poly::new(vec![Rat::one()]);
            for t in &parsed {
                f = f.mul(&Poly::new(vec![t.neg(), Rat::one()]));
            }
            let curve = crate::curves::HyperellipticCurve::new(f)?;
            let jac = Jacobian::new(curve);
            let basis = jac.two_torsion_basis()?;
            let mut doubles_vanish = true;
            let mut sum = jac.identity();
            for d in &basis.divisors {
                doubles_vanish &= jac.add(d, d)?.is_identity();
                sum = jac.add(&sum, d)?;
            }
            Ok((
                "two-torsion",
                json!({"roots": roots}),
                json!({
                    "genus": jac.genus(),
                    "divisors": basis.divisors.iter().map(|d| d.to_json()).collect::<Vec<_>>(),
                    "doubles_vanish": doubles_vanish,
                    "sum_vanishes": sum.is_identity(),
                }),
            ))
        }
        Command::Order { p, point, bound } => {
            let model = fermat_model(*p)?;
            let jac = Jacobian::new(model.hyper().clone());
            let pt = parse_point(point)?;
            let divisor = jac.point_divisor(&pt)?;
            let order = jac.order_of(&divisor, *bound)?;
            Ok((
                "order",
                json!({"p": p, "point": point, "bound": bound}),
                json!({"divisor": divisor.to_json(), "order": order}),
            ))
        }
        Command::JacobianCount { q, p, coeffs } => {
            let sample = Fp::new(*q, 0)?;
            let curve = match (p, coeffs) {
                (Some(p), None) => fermat_model(*p)?.hyper_over(&sample)?,
                (None, Some(cs)) => {
                    let coeffs: Vec<Fp> = cs
                        .iter()
                        .map(|&c| Fp::new(*q, c))
                        .collect::<crate::Result<_>>()?;
                    crate::curves::HyperellipticCurve::new(Poly::new(coeffs))?
                }
                _ => {
                    return Err(crate::Error::InvalidInput(
                        "give exactly one of --p (quotient model) or --coeffs".into(),
                    ))
                }
            };
            let count = jacobian_order_finite_field(&curve)?;
            let inputs = match (p, coeffs) {
                (Some(p), _) => json!({"q": q, "p": p}),
                (_, Some(cs)) => json!({"q": q, "coeffs": cs}),
                _ => unreachable!("validated above"),
            };
            Ok((
                "jacobian-count",
                inputs,
                json!({"genus": curve.genus(), "count": count}),
            ))
        }
        Command::Classgroup { d } => {
            let cg = class_group(*d)?;
            Ok(("classgroup", json!({"d": d.to_string()}), cg.to_json()))
        }
        Command::CyclotomicUnits { p } => {
            let gens = cyclotomic_unit_generators(*p)?;
            Ok((
                "cyclotomic-units",
                json!({"p": p}),
                json!({
                    "count": gens.len(),
                    "generators": gens.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::KummerCount { p, vandiver } => {
            let report = subextension_count(*p, *vandiver)?;
            Ok(("kummer-count", json!({"p": p}), report.to_json()))
        }
        Command::Irregular { p, bound } => match (p, bound) {
            (Some(p), None) => {
                let report = irregularity(*p)?;
                Ok(("irregular", json!({"p": p}), report.to_json()))
            }
            (None, Some(bound)) => {
                let mut found = Vec::new();
                for q in crate::exactnum::primes_up_to(*bound) {
                    if q < 5 {
                        continue;
                    }
                    let report = irregularity(q)?;
                    if report.irregular {
                        found.push(report.to_json());
                    }
                }
                Ok((
                    "irregular",
                    json!({"bound": bound}),
                    json!({"irregular_primes": found}),
                ))
            }
            _ => Err(crate::Error::InvalidInput(
                "give exactly one of --p or --bound".into(),
            )),
        },
        Command::Invariant { p, u } => {
            let report = psi(*p, *u, factor_bound_from_env()?)?;
            if report.degenerate_field {
                eprintln!(
                    "warning: u = {u} gives the degenerate field d = -3, \
                     where x0 is a root of unity and the invariant vanishes"
                );
            }
            Ok(("invariant", json!({"p": p, "u": u}), report.to_json()))
        }
        Command::Search { .. } => unreachable!("search streams through execute"),
    }
}

/// Witness reports as one JSON line each (|u| ascending), then the footer.
fn run_search(
    p: u64,
    umin: i64,
    umax: i64,
    workers: usize,
    resume_from: Option<i64>,
) -> crate::Result<()> {
    let bound = factor_bound_from_env()?;
    let outcome = search_nonvanishing(p, umin, umax, workers, resume_from, bound)?;
    for report in &outcome.reports {
        println!("{}", report.to_json());
    }
    println!("{}", outcome.footer_json());
    Ok(())
}

/// "Q" for the base point class (0, −1/2), or "u,v" exact coordinates on
/// the odd-degree model.
fn parse_point(s: &str) -> crate::Result<AffinePoint<Rat>> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("q") {
        return Ok(AffinePoint::finite(
            Rat::zero(),
            Rat::new(BigInt::from(-1), BigInt::from(2))?,
        ));
    }
    let (u, v) = s.split_once(',').ok_or_else(|| {
        crate::Error::InvalidInput(format!(
            "point must be `Q` or `u,v` with exact rationals, got `{s}`"
        ))
    })?;
    Ok(AffinePoint::finite(Rat::parse(u)?, Rat::parse(v)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_parse_point() {
        let q = parse_point("Q").unwrap();
        match &q {
            AffinePoint::Finite { x, y } => {
                assert!(x.is_zero());
                assert_eq!(y, &Rat::new(BigInt::from(-1), BigInt::from(2)).unwrap());
            }
            _ => panic!("expected finite point"),
        }
        let pt = parse_point("-2, 1/2").unwrap();
        match &pt {
            AffinePoint::Finite { x, y } => {
                assert_eq!(x, &Rat::from_int(-2));
                assert_eq!(y, &Rat::new(BigInt::from(1), BigInt::from(2)).unwrap());
            }
            _ => panic!("expected finite point"),
        }
        assert!(parse_point("nope").is_err());
        assert!(parse_point("1,2,3").is_err());
    }

    #[test]
    fn test_report_shapes() {
        let (name, inputs, result) = dispatch(&Command::Wieferich {
            base: 2,
            bound: 5000,
        })
        .unwrap();
        assert_eq!(name, "wieferich");
        assert_eq!(inputs, json!({"base": 2, "bound": 5000}));
        assert_eq!(result, json!({"primes": [1093, 3511]}));
        let report = CommandReport {
            command: name.to_string(),
            inputs,
            result,
            elapsed_ms: 7,
        };
        assert_eq!(
            report.to_json().to_string(),
            "{\"command\":\"wieferich\",\"inputs\":{\"base\":2,\"bound\":5000},\
             \"result\":{\"primes\":[1093,3511]},\"elapsed_ms\":7}"
        );
        let table = report.to_table();
        assert!(table.contains("command     wieferich"));
        assert!(table.contains("primes      1093, 3511"));
        assert!(table.ends_with("elapsed_ms  7"));
    }

    #[test]
    fn test_dispatch_good_reduction_field() {
        let (_, _, result) = dispatch(&Command::GoodReductionField { p: 5 }).unwrap();
        assert_eq!(result, json!({"field": "K(2^(1/5))"}));
        let (_, _, result) = dispatch(&Command::GoodReductionField { p: 1093 }).unwrap();
        assert_eq!(result, json!({"field": "K"}));
    }

    #[test]
    fn test_dispatch_order_of_base_point() {
        let (_, _, result) = dispatch(&Command::Order {
            p: 5,
            point: "Q".into(),
            bound: 100,
        })
        .unwrap();
        assert_eq!(result["order"], 5);
    }

    #[test]
    fn test_dispatch_rejects_bad_combinations() {
        assert!(matches!(
            dispatch(&Command::JacobianCount {
                q: 7,
                p: None,
                coeffs: None
            }),
            Err(crate::Error::InvalidInput(_))
        ));
        assert!(matches!(
            dispatch(&Command::Irregular {
                p: None,
                bound: None
            }),
            Err(crate::Error::InvalidInput(_))
        ));
    }

    #[test]
    fn test_dispatch_jacobian_count_matches_library() {
        let (_, _, by_p) = dispatch(&Command::JacobianCount {
            q: 3,
            p: Some(5),
            coeffs: None,
        })
        .unwrap();
        // f = u⁵ + 1/4 reduces to u⁵ + 1 mod 3.
        let (_, _, by_coeffs) = dispatch(&Command::JacobianCount {
            q: 3,
            p: None,
            coeffs: Some(vec![1, 0, 0, 0, 0, 1]),
        })
        .unwrap();
        assert_eq!(by_p["count"], by_coeffs["count"]);
        assert_eq!(by_p["count"], 10);
    }
}
