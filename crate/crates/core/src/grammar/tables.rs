//! Coefficient tables read off iterated derivatives. Each reader checks that
//! every monomial has the expected shape before extracting anything.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{builtin_grammar, faa_di_bruno_grammar, GrammarName};
use crate::algebra::rational::expect_integer;
use crate::algebra::{int, Assignment, Monomial, Polynomial, Rational, Var};
use crate::error::{Error, Result};
use crate::limits::Limits;

fn shape_err(m: &Monomial, expected: &str) -> Error {
    Error::ShapeViolation(format!("monomial {m} is not of the form {expected}"))
}

fn integer_coeff(c: &Rational, m: &Monomial) -> Result<BigInt> {
    expect_integer(c).map_err(|_| Error::ShapeViolation(format!("non-integer coefficient on {m}")))
}

/// `k -> T(n+1, k)`: coefficients of `A^(n+k) S^(n+1)` in `D^n(S)` under `G`.
pub fn tree_coefficient_table(n: usize, limits: &Limits) -> Result<BTreeMap<usize, BigInt>> {
    if n == 0 {
        return Err(Error::BadParameter("n must be >= 1".into()));
    }
    let g = builtin_grammar(&GrammarName::G)?;
    let d = g.derive_n(&Polynomial::var(Var::new("S")), n, limits)?;
    let (a, s) = (Var::new("A"), Var::new("S"));
    let n = n as i64;
    let expected = format!("A^({n}+k)*S^{}", n + 1);
    let mut table = BTreeMap::new();
    for (m, c) in d.terms() {
        let ea = m.exponent(&a);
        if m.len() != 2 || m.exponent(&s) != n + 1 || !(n..=2 * n).contains(&ea) {
            return Err(shape_err(m, &expected));
        }
        table.insert((ea - n) as usize, integer_coeff(c, m)?);
    }
    Ok(table)
}

/// `k -> p_k(n)`: coefficients of `x^k w^(n-k) z` in `D^n(z)|_{y=1}` under `H`.
pub fn planted_forest_coefficients(n: usize, limits: &Limits) -> Result<BTreeMap<usize, BigInt>> {
    if n == 0 {
        return Err(Error::BadParameter("n must be >= 1".into()));
    }
    let h = builtin_grammar(&GrammarName::H)?;
    let d = h.derive_n(&Polynomial::var(Var::new("z")), n, limits)?;
    let y1: Assignment = [(Var::new("y"), int(1))].into_iter().collect();
    let d = d.substitute(&y1)?;
    let (x, w, z) = (Var::new("x"), Var::new("w"), Var::new("z"));
    let n = n as i64;
    let expected = format!("x^k*w^({n}-k)*z");
    let mut table = BTreeMap::new();
    for (m, c) in d.terms() {
        let k = m.exponent(&x);
        let wanted = Monomial::from_pairs([(x.clone(), k), (w.clone(), n - k), (z.clone(), 1)]);
        if !(1..=n).contains(&k) || *m != wanted {
            return Err(shape_err(m, &expected));
        }
        table.insert(k as usize, integer_coeff(c, m)?);
    }
    Ok(table)
}

/// `(t1, ..., tk) -> coefficient` of `f_t g1^t1 ... gk^tk` in `D^k(f0)` under
/// the Faà di Bruno grammar, where `t = t1 + ... + tk`.
pub fn faa_di_bruno_coefficients(k: usize, limits: &Limits) -> Result<BTreeMap<Vec<u32>, BigInt>> {
    if k == 0 {
        return Err(Error::BadParameter("k must be >= 1".into()));
    }
    if k > limits.max_order {
        return Err(Error::OrderTooLarge {
            order: k,
            cap: limits.max_order,
        });
    }
    let f = faa_di_bruno_grammar(k);
    let d = f.derive_n(&Polynomial::var(Var::new("f0")), k, limits)?;
    let expected = "f_t*g1^t1*...*gk^tk";
    let mut table = BTreeMap::new();
    for (m, c) in d.terms() {
        let mut f_index = None;
        let mut ts = vec![0u32; k];
        for (v, e) in m.iter() {
            let name = v.name();
            let idx: Option<usize> = name.get(1..).and_then(|s| s.parse().ok());
            match (name.as_bytes()[0], idx) {
                (b'f', Some(i)) if e == 1 && f_index.is_none() => f_index = Some(i),
                (b'g', Some(i)) if (1..=k).contains(&i) && e > 0 => ts[i - 1] = e as u32,
                _ => return Err(shape_err(m, expected)),
            }
        }
        let t: u32 = ts.iter().sum();
        let weight: usize = ts
            .iter()
            .enumerate()
            .map(|(i, &ti)| (i + 1) * ti as usize)
            .sum();
        if f_index != Some(t as usize) || weight != k {
            return Err(shape_err(m, expected));
        }
        table.insert(ts, integer_coeff(c, m)?);
    }
    Ok(table)
}
