//! JSON form of [`Polynomial`]:
//! `{"terms":[{"coeff":"p/q","exps":{"var":int,...}},...]}`, terms in
//! canonical monomial order.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::parse::is_identifier;
use super::polynomial::{Monomial, Polynomial, Var};
use super::rational::{format_rational, parse_rational};

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: BTreeMap<String, i64>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(m, c)| TermJson {
                coeff: format_rational(c),
                exps: m.iter().map(|(v, e)| (v.name().to_string(), e)).collect(),
            })
            .collect();
        PolynomialJson { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c = parse_rational(&t.coeff).map_err(D::Error::custom)?;
            let mut pairs = Vec::with_capacity(t.exps.len());
            for (name, e) in t.exps {
                if !is_identifier(&name) {
                    return Err(D::Error::custom(format!("invalid variable name `{name}`")));
                }
                pairs.push((Var::new(&name), e));
            }
            terms.push((Monomial::from_pairs(pairs), c));
        }
        Ok(Polynomial::from_terms(terms))
    }
}
