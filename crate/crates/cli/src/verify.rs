//! Batch identity checks behind `parkgram verify`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use parkgram::algebra::{format_rational, int, rat, Rational};
use parkgram::counting::{
    abel_identity_sides, abel_uniform_sides, check_scaling, count_periodic_egf,
    count_periodic_grammar, count_periodic_scaled, count_periodic_specsum, q_bruteforce,
    q_periodic,
};
use parkgram::parking::{ab_threshold_vector, enumerate_u_parking};
use parkgram::Limits;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::commands::scale_factor;
use crate::{Failure, Outcome, Suite, VerifyArgs};

struct Case {
    suite: &'static str,
    label: String,
    pass: bool,
}

struct Report {
    cases: Vec<Case>,
}

impl Report {
    fn push(&mut self, suite: &'static str, label: String, pass: bool) {
        self.cases.push(Case { suite, label, pass });
    }
}

fn random_rational(rng: &mut ChaCha8Rng, nonzero: bool) -> Rational {
    loop {
        let r = rat(rng.gen_range(-12..=12), rng.gen_range(1..=6));
        if !nonzero || r != int(0) {
            return r;
        }
    }
}

fn list(xs: &[Rational]) -> String {
    let parts: Vec<String> = xs.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn abel(
    r: &mut Report,
    rng: &mut ChaCha8Rng,
    k: Option<u64>,
    n: Option<u64>,
    trials: usize,
) -> Result<(), Failure> {
    for _ in 0..trials {
        let k = k.unwrap_or_else(|| rng.gen_range(1..=4));
        let n = n.unwrap_or_else(|| rng.gen_range(1..=6));
        let xs: Vec<Rational> = (0..k).map(|_| random_rational(rng, true)).collect();
        let (l, rhs) = abel_identity_sides(&xs, n)?;
        r.push("abel", format!("xs={} n={n}", list(&xs)), l == rhs);
    }
    Ok(())
}

fn abel_uniform(
    r: &mut Report,
    rng: &mut ChaCha8Rng,
    k: Option<u64>,
    n: Option<u64>,
    trials: usize,
) -> Result<(), Failure> {
    let mut done = 0;
    while done < trials {
        let k = k.unwrap_or_else(|| rng.gen_range(1..=4));
        let n = n.unwrap_or_else(|| rng.gen_range(1..=6));
        let x = random_rational(rng, false);
        if x == int(k as i64) {
            continue;
        }
        let (l, rhs) = abel_uniform_sides(&x, n, k)?;
        r.push(
            "abel-uniform",
            format!("x={} n={n} k={k}", format_rational(&x)),
            l == rhs,
        );
        done += 1;
    }
    Ok(())
}

fn scaling(r: &mut Report, rng: &mut ChaCha8Rng, n: Option<u64>, trials: usize) {
    let factors = [int(2), int(3), rat(5, 2)];
    for i in 0..trials {
        let n = n.unwrap_or_else(|| rng.gen_range(1..=6));
        let u: Vec<Rational> = (0..n).map(|_| random_rational(rng, false)).collect();
        let k = &factors[i % factors.len()];
        r.push(
            "scaling",
            format!("u={} k={}", list(&u), format_rational(k)),
            check_scaling(&u, k),
        );
    }
}

fn periodic_routes(r: &mut Report, a: u64, b: u64, k: u64, limits: &Limits) -> Result<(), Failure> {
    let spec = Rational::from_integer(count_periodic_specsum(a, b, k)?);
    let scale = scale_factor(b, k);
    let big = |v: BigInt| Rational::from_integer(v);
    let mut routes = vec![
        ("spec-sum", spec.clone()),
        ("scaled/b^kb", big(count_periodic_scaled(a, b, k)?) / &scale),
        ("egf", big(count_periodic_egf(a, b, k)?)),
        (
            "grammar/b^kb",
            big(count_periodic_grammar(a, b, k, limits)?) / &scale,
        ),
    ];
    if (k * b) as usize <= limits.max_enum_len {
        let u = ab_threshold_vector(k * a, k * b, (k * b) as usize);
        routes.insert(
            0,
            (
                "bruteforce",
                int(enumerate_u_parking(&u, limits)?.len() as i64),
            ),
        );
    }
    for (name, value) in routes {
        let pass = value == spec;
        r.push(
            "periodic",
            format!("({a},{b},{k}) {name} = {}", format_rational(&value)),
            pass,
        );
    }
    Ok(())
}

fn q_periodic_case(r: &mut Report, a: u64, b: u64, d: u64, limits: &Limits) -> Result<(), Failure> {
    let formula = q_periodic(a, b, d)?;
    let brute = q_bruteforce(&ab_threshold_vector(a, b, (d * b) as usize), limits)?;
    r.push(
        "q-periodic",
        format!("({a},{b},{d}) {formula}"),
        formula == brute,
    );
    Ok(())
}

fn required3(
    a: Option<u64>,
    b: Option<u64>,
    c: Option<u64>,
    flags: &str,
) -> Result<(u64, u64, u64), Failure> {
    match (a, b, c) {
        (Some(a), Some(b), Some(c)) => Ok((a, b, c)),
        _ => Err(Failure::Usage(format!("missing required flags {flags}"))),
    }
}

pub fn run(args: &VerifyArgs, json: bool, limits: &Limits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut r = Report { cases: Vec::new() };
    let trials = if args.quick {
        args.trials.min(5)
    } else {
        args.trials
    };
    match args.suite {
        Suite::Abel => abel(&mut r, &mut rng, args.k, args.n, trials)?,
        Suite::AbelUniform => abel_uniform(&mut r, &mut rng, args.k, args.n, trials)?,
        Suite::Scaling => scaling(&mut r, &mut rng, args.n, trials),
        Suite::Periodic => {
            let (a, b, k) = required3(args.a, args.b, args.k, "-a -b -k")?;
            periodic_routes(&mut r, a, b, k, limits)?;
        }
        Suite::QPeriodic => {
            let (a, b, d) = required3(args.a, args.b, args.d, "-a -b -d")?;
            q_periodic_case(&mut r, a, b, d, limits)?;
        }
        Suite::All => {
            abel(&mut r, &mut rng, None, None, trials)?;
            abel_uniform(&mut r, &mut rng, None, None, trials)?;
            scaling(&mut r, &mut rng, None, trials);
            let periodic: &[(u64, u64, u64)] = if args.quick {
                &[(3, 2, 2), (2, 3, 2)]
            } else {
                &[
                    (3, 2, 1),
                    (3, 2, 2),
                    (2, 3, 1),
                    (2, 3, 2),
                    (4, 3, 1),
                    (4, 3, 2),
                    (5, 2, 1),
                    (5, 2, 2),
                ]
            };
            for &(a, b, k) in periodic {
                periodic_routes(&mut r, a, b, k, limits)?;
            }
            let q: &[(u64, u64, u64)] = if args.quick {
                &[(3, 2, 1), (3, 2, 2)]
            } else {
                &[(3, 2, 1), (3, 2, 2), (4, 3, 1), (5, 2, 2)]
            };
            for &(a, b, d) in q {
                q_periodic_case(&mut r, a, b, d, limits)?;
            }
        }
    }

    let passed = r.cases.iter().filter(|c| c.pass).count();
    let failed = r.cases.len() - passed;
    let out = if json {
        let cases: Vec<_> = r
            .cases
            .iter()
            .map(|c| json!({ "suite": c.suite, "case": c.label, "pass": c.pass }))
            .collect();
        format!(
            "{}\n",
            json!({ "seed": args.seed, "cases": cases, "passed": passed, "failed": failed })
        )
    } else {
        let mut s = String::new();
        for c in &r.cases {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            writeln!(s, "{tag} {} {}", c.suite, c.label).unwrap();
        }
        writeln!(s, "{passed} passed, {failed} failed (seed {})", args.seed).unwrap();
        s
    };
    if failed == 0 {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}
