//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! Both [`Monomial`] and [`Polynomial`] are kept in canonical form at all
//! times: no zero exponents, no zero coefficients. Terms are ordered by the
//! derived `Ord` on [`Monomial`], which compares `(name, exponent)` pairs
//! lexicographically over the sorted variable names.

use std::collections::{btree_map, BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, pow_int, Rational};
use crate::error::{Error, Result};

/// A variable name such as `A`, `z1` or `q`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    /// Panics on an empty name.
    pub fn new(name: &str) -> Self {
        assert!(!name.is_empty(), "variable names must be non-empty");
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Self {
        Var::new(s)
    }
}

/// Product of variables raised to (possibly negative) integer powers.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<Var, i64>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(v: Var) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: Var, exp: i64) -> Self {
        let mut m = Monomial::one();
        m.set(v, exp);
        m
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, i64)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            let cur = m.exponent(&v);
            m.set(v, cur + e);
        }
        m
    }

    /// Exponent of `v` (0 if absent).
    pub fn exponent(&self, v: &Var) -> i64 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, i64)> {
        self.0.iter().map(|(v, &e)| (v, e))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn set(&mut self, v: Var, exp: i64) {
        if exp == 0 {
            self.0.remove(&v);
        } else {
            self.0.insert(v, exp);
        }
    }

    /// Copy of `self` with the exponent of `v` shifted by `delta`.
    pub fn shifted(&self, v: &Var, delta: i64) -> Self {
        let mut m = self.clone();
        let e = m.exponent(v) + delta;
        m.set(v.clone(), e);
        m
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (v, e) in small.iter() {
            let cur = out.exponent(v);
            out.set(v.clone(), cur + e);
        }
        out
    }

    pub fn pow(&self, n: i64) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, &e)| (v.clone(), e * n)).collect())
    }

    pub fn total_degree(&self) -> i64 {
        self.0.values().sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

pub type Assignment = BTreeMap<Var, Rational>;

/// Evaluation hook that sees the full exponent map of a monomial and returns a
/// multiplier. Variables it [`consumes`](MonomialFunctional::consumes) are not
/// substituted numerically.
pub trait MonomialFunctional {
    fn consumes(&self, var: &Var) -> bool;
    fn weight(&self, monomial: &Monomial) -> Rational;
}

/// Consumes a fixed set of variables and always returns 1.
#[derive(Debug, Clone, Default)]
pub struct NeutralFunctional {
    pub vars: BTreeSet<Var>,
}

impl NeutralFunctional {
    pub fn new<I: IntoIterator<Item = Var>>(vars: I) -> Self {
        NeutralFunctional {
            vars: vars.into_iter().collect(),
        }
    }
}

impl MonomialFunctional for NeutralFunctional {
    fn consumes(&self, var: &Var) -> bool {
        self.vars.contains(var)
    }

    fn weight(&self, _monomial: &Monomial) -> Rational {
        Rational::one()
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.accumulate(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.accumulate(m, c);
        }
        p
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub(crate) fn accumulate(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    /// True iff no stored coefficient or exponent is zero.
    pub fn is_canonical(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| !c.is_zero() && m.iter().all(|(_, e)| e != 0))
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, k: &Rational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(tm, c)| (tm.mul(m), c * k))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut sq = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Integer power; negative exponents are only defined for a single term.
    pub fn pow_laurent(&self, n: i64) -> Result<Polynomial> {
        if n >= 0 {
            return Ok(self.pow(n as u32));
        }
        match self.terms.len() {
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                Ok(Polynomial::term(m.pow(n), pow_int(c, n).expect("nonzero")))
            }
            0 => Err(Error::ZeroToNegativePower("0".into())),
            _ => Err(Error::BadParameter(
                "negative powers are only defined for single terms".into(),
            )),
        }
    }

    /// Replaces the assigned variables by their values; the rest stay symbolic.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Monomial::one();
            for (v, e) in m.iter() {
                match assignment.get(v) {
                    Some(val) => {
                        let f = pow_int(val, e)
                            .ok_or_else(|| Error::ZeroToNegativePower(v.to_string()))?;
                        coeff *= f;
                    }
                    None => rest.set(v.clone(), e),
                }
            }
            out.accumulate(rest, coeff);
        }
        Ok(out)
    }

    /// Sum over terms of `coeff * (assigned values) * hook(monomial)`.
    pub fn eval_with_functional(
        &self,
        assignment: &Assignment,
        hook: &dyn MonomialFunctional,
    ) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            for (v, _) in m.iter() {
                if !hook.consumes(v) && !assignment.contains_key(v) {
                    return Err(Error::UnassignedVariable(v.to_string()));
                }
            }
            let w = hook.weight(m);
            if w.is_zero() {
                continue;
            }
            let mut value = c * w;
            for (v, e) in m.iter() {
                if hook.consumes(v) {
                    continue;
                }
                let f = pow_int(&assignment[v], e)
                    .ok_or_else(|| Error::ZeroToNegativePower(v.to_string()))?;
                value *= f;
            }
            total += value;
        }
        Ok(total)
    }

    /// Substitutes every variable and returns the resulting number.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<Rational> {
        self.eval_with_functional(assignment, &NeutralFunctional::default())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::constant(int(n))
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (m, c) in rhs.terms {
            self.accumulate(m, c);
        }
        self
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(m.clone(), -c.clone());
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.accumulate(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}
