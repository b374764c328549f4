//! Context-free grammars as substitution rules, and the formal derivative they
//! induce.
//!
//! A grammar maps each variable to a polynomial. The derivative `D` is the
//! unique linear map that obeys the Leibniz rule and sends each ruled variable
//! to its right-hand side; variables without a rule are constants. Integer
//! powers (negative ones included) follow `D(v^n) = n v^(n-1) D(v)`.

mod builtin;
mod hook;
mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{int, is_identifier, parse_polynomial, Polynomial, Var};
use crate::error::{Error, Result};
use crate::limits::Limits;

pub use builtin::{builtin_grammar, faa_di_bruno_grammar, GrammarName};
pub use hook::SpecStepFunctional;
pub use tables::{faa_di_bruno_coefficients, planted_forest_coefficients, tree_coefficient_table};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Grammar {
    rules: BTreeMap<Var, Polynomial>,
}

impl Grammar {
    pub fn new(rules: BTreeMap<Var, Polynomial>) -> Self {
        Grammar { rules }
    }

    pub fn from_rules<I: IntoIterator<Item = (Var, Polynomial)>>(rules: I) -> Self {
        Grammar {
            rules: rules.into_iter().collect(),
        }
    }

    /// Right-hand side for `v`. `Some(0)` is an explicit `v -> 0` rule; `None`
    /// means `v` has no rule.
    pub fn rule(&self, v: &Var) -> Option<&Polynomial> {
        self.rules.get(v)
    }

    pub fn rules(&self) -> impl Iterator<Item = (&Var, &Polynomial)> {
        self.rules.iter()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn derive(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            for (v, e) in m.iter() {
                let Some(rhs) = self.rules.get(v) else {
                    continue;
                };
                if rhs.is_zero() {
                    continue;
                }
                let rest = m.shifted(v, -1);
                let k = c * int(e);
                for (rm, rc) in rhs.terms() {
                    out.accumulate(rest.mul(rm), &k * rc);
                }
            }
        }
        out
    }

    pub fn derive_n(&self, p: &Polynomial, n: usize, limits: &Limits) -> Result<Polynomial> {
        if n > limits.max_order {
            return Err(Error::OrderTooLarge {
                order: n,
                cap: limits.max_order,
            });
        }
        let mut cur = p.clone();
        for _ in 0..n {
            if cur.is_zero() {
                break;
            }
            cur = self.derive(&cur);
        }
        Ok(cur)
    }

    /// Parses one rule per line, `<var> -> <expression>`. Blank lines and
    /// lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rules = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| {
                Error::Parse(format!("line {}: expected `<var> -> <expr>`", lineno + 1))
            })?;
            let lhs = lhs.trim();
            if !is_identifier(lhs) {
                return Err(Error::Parse(format!(
                    "line {}: `{lhs}` is not a variable name",
                    lineno + 1
                )));
            }
            let rhs = parse_polynomial(rhs)?;
            if rules.insert(Var::new(lhs), rhs).is_some() {
                return Err(Error::Parse(format!(
                    "line {}: duplicate rule for `{lhs}`",
                    lineno + 1
                )));
            }
        }
        Ok(Grammar { rules })
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, rhs) in &self.rules {
            writeln!(f, "{v} -> {rhs}")?;
        }
        Ok(())
    }
}

impl FromStr for Grammar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Grammar::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Assignment, Rational};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn g() -> Grammar {
        builtin_grammar(&GrammarName::G).unwrap()
    }

    #[test]
    fn derive_examples() {
        assert_eq!(g().derive(&p("S")), p("A*S^2"));
        assert_eq!(g().derive(&p("A*S")), p("A^3*S^2 + A^2*S^2"));
        assert_eq!(g().derive(&Polynomial::one()), Polynomial::zero());
        assert_eq!(g().derive(&p("Q^5")), Polynomial::zero());
    }

    #[test]
    fn derive_n_examples() {
        let l = Limits::DEFAULT;
        assert_eq!(g().derive_n(&p("S"), 0, &l).unwrap(), p("S"));
        let ones: Assignment = [(Var::new("A"), int(1)), (Var::new("S"), int(1))]
            .into_iter()
            .collect();
        for n in 1..=8u32 {
            let d = g().derive_n(&p("S"), n as usize, &l).unwrap();
            let v = d.evaluate(&ones).unwrap();
            assert_eq!(v, Rational::from_integer((n as i64 + 1).pow(n - 1).into()));
        }
        assert_eq!(
            g().derive_n(&p("S"), 13, &l),
            Err(Error::OrderTooLarge { order: 13, cap: 12 })
        );
    }

    #[test]
    fn eq41_example() {
        let h = builtin_grammar(&GrammarName::H).unwrap();
        let d = h.derive_n(&p("z"), 4, &Limits::DEFAULT).unwrap();
        let a: Assignment = [("y", 1), ("z", 1), ("x", 2), ("w", 3)]
            .iter()
            .map(|(n, v)| (Var::new(n), int(*v)))
            .collect();
        assert_eq!(d.evaluate(&a).unwrap(), int(2 * 14i64.pow(3)));
    }

    #[test]
    fn negative_power_chain_rule() {
        let gr = g();
        let s = p("S");
        let ds = gr.derive(&s);
        for n in -3i64..=5 {
            let lhs = gr.derive(&s.pow_laurent(n).unwrap());
            let rhs = if n == 0 {
                Polynomial::zero()
            } else {
                &s.pow_laurent(n - 1).unwrap().scale(&int(n)) * &ds
            };
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn text_round_trip_keeps_zero_rules() {
        let k = builtin_grammar(&GrammarName::K(1)).unwrap();
        let text = k.to_string();
        assert!(text.contains("t1 -> 0"));
        assert_eq!(Grammar::parse(&text).unwrap(), k);
        assert_eq!(k.rule(&Var::new("t1")), Some(&Polynomial::zero()));
        assert_eq!(k.rule(&Var::new("q")), None);
    }

    #[test]
    fn parse_errors() {
        assert!(Grammar::parse("x => y").is_err());
        assert!(Grammar::parse("1x -> y").is_err());
        assert!(Grammar::parse("x -> y\nx -> z").is_err());
        assert!(Grammar::parse("# comment\n\nx -> x*y\n").is_ok());
    }
}
