use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Pow;
use parkgram::algebra::{
    format_rational, is_identifier, parse_rational, Assignment, Rational, Var,
};
use parkgram::counting::{
    count_basic, count_periodic_egf, count_periodic_grammar_normalized, count_periodic_specsum,
    count_rational, count_u_incl_excl, q_basic, q_block_thresholds, q_bruteforce, q_classical,
    q_periodic, q_unit_head, spec_compositions, QPolynomial,
};
use parkgram::grammar::{builtin_grammar, GrammarName, SpecStepFunctional};
use parkgram::parking::{
    ab_threshold_vector, ab_to_u_pf, block_threshold_vector, decompose_blocks, dyck_path_of,
    enumerate_u_parking, is_ab_parking, is_u_parking, is_x_parking, parse_rational_csv, u_pf_to_ab,
    ABParkingSeq, LatticePath, PFSeq, ThresholdVector, WeightVector,
};
use parkgram::{Grammar, Limits, Polynomial};
use serde_json::json;

use crate::{
    required, usage, CheckArgs, ConvertArgs, CountArgs, CountKind, DeriveArgs, Direction,
    EnumerateArgs, Failure, Method, Outcome, QKind, QpolyArgs, SpecArgs,
};

fn rational_flag(v: &Option<String>, flag: &str) -> Result<Rational, Failure> {
    match v {
        Some(s) => Ok(parse_rational(s)?),
        None => usage(format!("missing required flag {flag}")),
    }
}

fn int_value(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

/// Results of several methods for the same count, in method order.
fn report_methods(values: &BTreeMap<Method, Rational>, json: bool) -> Outcome {
    let agree = values.values().all(|v| Some(v) == values.values().next());
    let out = if json {
        let map: serde_json::Map<String, serde_json::Value> = values
            .iter()
            .map(|(m, v)| (method_name(*m).to_string(), json!(format_rational(v))))
            .collect();
        json_line(json!({ "values": map, "agree": agree }))
    } else {
        let mut s = String::new();
        for (m, v) in values {
            writeln!(s, "{:<10} {}", method_name(*m), format_rational(v)).unwrap();
        }
        s + if agree { "AGREE\n" } else { "DISAGREE\n" }
    };
    if agree {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Formula => "formula",
        Method::Bruteforce => "bruteforce",
        Method::Egf => "egf",
        Method::Grammar => "grammar",
        Method::Inclexcl => "inclexcl",
    }
}

/// Enumeration counts integer sequences, which matches the polynomial value
/// only for integral thresholds.
fn integral(u: &ThresholdVector) -> bool {
    u.values().iter().all(|v| v.is_integer())
}

fn brute_count(u: &ThresholdVector, limits: &Limits) -> Result<Rational, Failure> {
    Ok(int_value(enumerate_u_parking(u, limits)?.len()))
}

pub fn count(args: &CountArgs, json: bool, limits: &Limits) -> Outcome {
    type Route<'a> = Box<dyn Fn() -> Result<Rational, Failure> + 'a>;
    let routes: Vec<(Method, Route)> = match args.kind {
        CountKind::Basic => {
            let alpha = rational_flag(&args.alpha, "--alpha")?;
            let beta = rational_flag(&args.beta, "--beta")?;
            let n = required(args.n, "-n")?;
            let x = WeightVector::basic(alpha.clone(), beta.clone(), n as usize)?;
            let u = x.thresholds()?;
            let mut routes: Vec<(Method, Route)> = vec![
                (
                    Method::Formula,
                    Box::new(move || Ok(count_basic(&alpha, &beta, n))),
                ),
                (
                    Method::Inclexcl,
                    Box::new({
                        let u = u.clone();
                        move || Ok(count_u_incl_excl(u.values()))
                    }),
                ),
            ];
            if integral(&u) {
                routes.push((
                    Method::Bruteforce,
                    Box::new(move || brute_count(&u, limits)),
                ));
            }
            routes
        }
        CountKind::Rational => {
            let a = required(args.a, "-a")?;
            let b = required(args.b, "-b")?;
            let formula = Rational::from_integer(count_rational(a, b)?);
            let u = ab_threshold_vector(a, b, b as usize);
            let u2 = u.clone();
            vec![
                (Method::Formula, Box::new(move || Ok(formula.clone()))),
                (
                    Method::Bruteforce,
                    Box::new(move || brute_count(&u, limits)),
                ),
                (
                    Method::Inclexcl,
                    Box::new(move || Ok(count_u_incl_excl(u2.values()))),
                ),
            ]
        }
        CountKind::Periodic => {
            let a = required(args.a, "-a")?;
            let b = required(args.b, "-b")?;
            let k = required(args.k, "-k")?;
            let formula = Rational::from_integer(count_periodic_specsum(a, b, k)?);
            let u = ab_threshold_vector(k * a, k * b, (k * b) as usize);
            vec![
                (Method::Formula, Box::new(move || Ok(formula.clone()))),
                (
                    Method::Bruteforce,
                    Box::new(move || brute_count(&u, limits)),
                ),
                (
                    Method::Egf,
                    Box::new(move || Ok(Rational::from_integer(count_periodic_egf(a, b, k)?))),
                ),
                (
                    Method::Grammar,
                    Box::new(move || {
                        Ok(Rational::from_integer(count_periodic_grammar_normalized(
                            a, b, k, limits,
                        )?))
                    }),
                ),
            ]
        }
        CountKind::U => {
            let u: ThresholdVector = required(args.u.as_deref(), "-u")?.parse()?;
            let mut routes: Vec<(Method, Route)> = vec![(
                Method::Inclexcl,
                Box::new({
                    let u = u.clone();
                    move || Ok(count_u_incl_excl(u.values()))
                }),
            )];
            if integral(&u) {
                routes.push((
                    Method::Bruteforce,
                    Box::new(move || brute_count(&u, limits)),
                ));
            }
            routes
        }
    };

    if args.all_methods {
        if args.method.is_some() {
            return usage("--method and --all-methods are exclusive");
        }
        let mut values = BTreeMap::new();
        for (m, route) in &routes {
            values.insert(*m, route()?);
        }
        return report_methods(&values, json);
    }

    let method = args.method.unwrap_or(routes[0].0);
    let Some((_, route)) = routes.iter().find(|(m, _)| *m == method) else {
        return usage(format!(
            "method {} does not apply here",
            method_name(method)
        ));
    };
    let value = route()?;
    Ok(if json {
        json_line(json!({ "method": method_name(method), "value": format_rational(&value) }))
    } else {
        format!("{}\n", format_rational(&value))
    })
}

fn threshold_source(
    u: &Option<String>,
    a: Option<u64>,
    b: Option<u64>,
    k: u64,
) -> Result<ThresholdVector, Failure> {
    match (u, a, b) {
        (Some(u), _, _) => Ok(u.parse()?),
        (None, Some(a), Some(b)) => {
            if k == 0 {
                return usage("-k must be >= 1");
            }
            Ok(ab_threshold_vector(k * a, k * b, (k * b) as usize))
        }
        _ => usage("give either -u or both -a and -b"),
    }
}

pub fn enumerate(args: &EnumerateArgs, json: bool, limits: &Limits) -> Outcome {
    let u = threshold_source(&args.u, args.a, args.b, args.k)?;
    let all = enumerate_u_parking(&u, limits)?;
    if args.count_only {
        return Ok(if json {
            json_line(json!({ "count": all.len() }))
        } else {
            format!("{}\n", all.len())
        });
    }
    Ok(if json {
        let rows: Vec<&[u32]> = all.iter().map(PFSeq::entries).collect();
        json_line(json!(rows))
    } else {
        all.iter().map(|c| format!("{c}\n")).collect()
    })
}

pub fn check(args: &CheckArgs, json: bool) -> Outcome {
    if let (Some(a), Some(b)) = (args.a, args.b) {
        let c: ABParkingSeq = args.s.parse()?;
        let (ka, kb) = (args.k * a, args.k * b);
        let parking = is_ab_parking(&c, ka, kb)?;
        let mut text = format!("{}\n", verdict(parking));
        let mut blocks = serde_json::Value::Null;
        if args.blocks && parking {
            let d = decompose_blocks(&ab_to_u_pf(&c), a, b, args.k)?;
            writeln!(text, "lengths {}", d.lengths).unwrap();
            for (t, block) in d.blocks.iter().enumerate() {
                let pos: Vec<String> = d.positions[t].iter().map(usize::to_string).collect();
                if block.is_empty() {
                    writeln!(text, "block {}: empty", t + 1).unwrap();
                } else {
                    writeln!(
                        text,
                        "block {}: {} at positions {}",
                        t + 1,
                        block,
                        pos.join(",")
                    )
                    .unwrap();
                }
            }
            blocks = json!({
                "lengths": d.lengths.parts(),
                "blocks": d.blocks.iter().map(PFSeq::entries).collect::<Vec<_>>(),
                "positions": d.positions,
            });
        }
        return Ok(if json {
            json_line(json!({ "parking": parking, "decomposition": blocks }))
        } else {
            text
        });
    }
    let c: PFSeq = args.s.parse()?;
    let parking = match (&args.u, &args.x) {
        (Some(u), None) => is_u_parking(&c, &u.parse()?)?,
        (None, Some(x)) => is_x_parking(&c, &WeightVector::new(parse_rational_csv(x)?)?)?,
        _ => return usage("give one of -u, -x, or -a with -b"),
    };
    Ok(if json {
        json_line(json!({ "parking": parking }))
    } else {
        format!("{}\n", verdict(parking))
    })
}

fn verdict(parking: bool) -> &'static str {
    if parking {
        "parking"
    } else {
        "not parking"
    }
}

fn arithmetic(first: u64, step: u64, n: u64) -> ThresholdVector {
    let u: Vec<i64> = (0..n).map(|i| (first + i * step) as i64).collect();
    ThresholdVector::from_integers(&u).expect("arithmetic thresholds are nondecreasing")
}

fn render_qpoly(p: &QPolynomial) -> String {
    let dense: Vec<String> = p.coefficients().iter().map(format_rational).collect();
    format!("{p}\ncoefficients: [{}]\n", dense.join(", "))
}

pub fn qpoly(args: &QpolyArgs, json: bool, limits: &Limits) -> Outcome {
    let (poly, oracle_u) = match args.kind {
        QKind::Classical => {
            let n = required(args.n, "-n")?;
            (q_classical(n)?, arithmetic(1, 1, n))
        }
        QKind::Basic => {
            let (a, b, n) = (
                required(args.a, "-a")?,
                required(args.b, "-b")?,
                required(args.n, "-n")?,
            );
            (q_basic(a, b, n)?, arithmetic(a, b, n))
        }
        QKind::UnitHead => {
            let (l, k) = (required(args.l, "-l")?, required(args.k, "-k")?);
            (q_unit_head(l, k)?, arithmetic(1, k, l))
        }
        QKind::Periodic => {
            let (a, b, d) = (
                required(args.a, "-a")?,
                required(args.b, "-b")?,
                required(args.d, "-d")?,
            );
            (
                q_periodic(a, b, d)?,
                ab_threshold_vector(a, b, (d * b) as usize),
            )
        }
        QKind::Blocks => {
            let (b, d) = (required(args.b, "-b")?, required(args.d, "-d")?);
            (q_block_thresholds(b, d)?, block_threshold_vector(b, d))
        }
        QKind::Bruteforce => {
            let u: ThresholdVector = required(args.u.as_deref(), "-u")?.parse()?;
            (q_bruteforce(&u, limits)?, u)
        }
    };
    let checked = if args.check {
        Some(q_bruteforce(&oracle_u, limits)? == poly)
    } else {
        None
    };
    let out = if json {
        let mut v = serde_json::to_value(&poly).expect("q-polynomials serialise");
        if let Some(ok) = checked {
            v["check"] = json!(ok);
        }
        json_line(v)
    } else {
        let mut s = render_qpoly(&poly);
        match checked {
            Some(true) => s += "CHECK OK\n",
            Some(false) => {
                s += &format!(
                    "CHECK FAILED: brute force gives {}\n",
                    q_bruteforce(&oracle_u, limits)?
                )
            }
            None => {}
        }
        s
    };
    match checked {
        Some(false) => Err(Failure::Verification(out)),
        _ => Ok(out),
    }
}

fn parse_subst(text: &str) -> Result<Assignment, Failure> {
    let mut out = Assignment::new();
    for pair in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let Some((name, value)) = pair.split_once('=') else {
            return usage(format!(
                "substitution `{pair}` is not of the form var=value"
            ));
        };
        let name = name.trim();
        if !is_identifier(name) {
            return usage(format!("`{name}` is not a variable name"));
        }
        out.insert(Var::new(name), parse_rational(value)?);
    }
    Ok(out)
}

/// Counter variables `t1, t2, ...` of a grammar, in index order.
fn counters(g: &Grammar) -> Vec<Var> {
    let mut ts: Vec<(u64, Var)> = g
        .rules()
        .filter_map(|(v, _)| {
            let idx = v.name().strip_prefix('t')?.parse().ok()?;
            Some((idx, v.clone()))
        })
        .collect();
    ts.sort();
    ts.into_iter().map(|(_, v)| v).collect()
}

fn parse_hook(spec: &str, g: &Grammar) -> Result<SpecStepFunctional, Failure> {
    let b = spec
        .strip_prefix("spec:b=")
        .and_then(|b| b.trim().parse::<i64>().ok())
        .filter(|&b| b >= 0);
    let Some(b) = b else {
        return usage(format!(
            "unknown hook `{spec}`; expected spec:b=<nonnegative integer>"
        ));
    };
    let ts = counters(g);
    if ts.is_empty() {
        return usage("the grammar has no counter variables t1, t2, ...");
    }
    Ok(SpecStepFunctional::new(b, ts))
}

pub fn derive(args: &DeriveArgs, json: bool, limits: &Limits) -> Outcome {
    let grammar = match (&args.g, &args.rules) {
        (Some(name), None) => {
            let name: GrammarName = name.parse()?;
            match name {
                GrammarName::F => parkgram::grammar::faa_di_bruno_grammar(args.n.max(1)),
                other => builtin_grammar(&other)?,
            }
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Grammar::parse(&text)?
        }
        _ => return usage("give exactly one of -g and --rules"),
    };
    let start: Polynomial = args.s.parse()?;
    let d = grammar.derive_n(&start, args.n, limits)?;

    let assignment = match &args.subst {
        Some(s) => Some(parse_subst(s)?),
        None => None,
    };
    if let Some(hook) = &args.hook {
        let hook = parse_hook(hook, &grammar)?;
        let value = d.eval_with_functional(&assignment.unwrap_or_default(), &hook)?;
        return Ok(rational_output(&value, json));
    }
    let result = match assignment {
        Some(s) => d.substitute(&s)?,
        None => d,
    };
    Ok(match result.as_constant() {
        Some(c) if args.subst.is_some() => rational_output(&c, json),
        _ if json => json_line(serde_json::to_value(&result).expect("polynomials serialise")),
        _ => format!("{result}\n"),
    })
}

fn rational_output(v: &Rational, json: bool) -> String {
    if json {
        json_line(json!({ "value": format_rational(v) }))
    } else {
        format!("{}\n", format_rational(v))
    }
}

pub fn spec(args: &SpecArgs, json: bool) -> Outcome {
    if args.k == 0 || args.b == 0 {
        return usage("k and b must be >= 1");
    }
    let all = spec_compositions(args.k, args.b);
    Ok(if json {
        json_line(json!(all.iter().map(|j| j.parts()).collect::<Vec<_>>()))
    } else {
        all.iter().map(|j| format!("{j}\n")).collect()
    })
}

pub fn convert(args: &ConvertArgs, json: bool) -> Outcome {
    let text = match args.direction {
        Direction::Ab2u => {
            let c: ABParkingSeq = args.s.parse()?;
            ab_to_u_pf(&c).to_string()
        }
        Direction::U2ab => {
            let c: PFSeq = args.s.parse()?;
            u_pf_to_ab(&c).to_string()
        }
        Direction::Pf2dyck => {
            let (a, b) = (required(args.a, "-a")?, required(args.b, "-b")?);
            let c: ABParkingSeq = args.s.parse()?;
            dyck_path_of(&c, a, b)?.to_string()
        }
        Direction::Dyck2pf => {
            let path: LatticePath = args.s.parse()?;
            let c = path.to_parking()?;
            if let (Some(a), Some(b)) = (args.a, args.b) {
                if !is_ab_parking(&c, a, b)? {
                    return Err(parkgram::Error::NotAParkingFunction(format!(
                        "{c} is not a ({a},{b})-parking function"
                    ))
                    .into());
                }
            }
            c.to_string()
        }
    };
    Ok(if json {
        json_line(json!({ "result": text }))
    } else {
        format!("{text}\n")
    })
}

/// `b^(kb)`, used to compare the scaled routes.
pub fn scale_factor(b: u64, k: u64) -> Rational {
    Pow::pow(&Rational::from_integer(b.into()), (k * b) as u32)
}
