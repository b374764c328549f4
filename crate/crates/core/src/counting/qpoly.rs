//! Generating polynomials of the number-of-ones statistic over parking
//! function sets, by formula and by enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, Serializer};

use super::combinatorics::{multinomial, spec_compositions};
use crate::algebra::rational::pow_int;
use crate::algebra::{format_rational, rat, Monomial, Polynomial, Rational, Var};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::parking::{enumerate_u_parking, ones_count, ThresholdVector};

/// Name of the variable every [`QPolynomial`] is written in.
pub const Q_VAR: &str = "q";

fn q() -> Var {
    Var::new(Q_VAR)
}

fn ratu(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A polynomial in `q` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial(Polynomial);

impl QPolynomial {
    /// Fails unless `p` only involves `q` to nonnegative powers.
    pub fn from_polynomial(p: Polynomial) -> Result<Self> {
        let qv = q();
        for (m, _) in p.terms() {
            for (v, e) in m.iter() {
                if *v != qv || e < 0 {
                    return Err(Error::BadParameter(format!("{p} is not a polynomial in q")));
                }
            }
        }
        Ok(QPolynomial(p))
    }

    /// `sum_i coeffs[i] q^i`.
    pub fn from_coefficients(coeffs: &[Rational]) -> Self {
        let qv = q();
        QPolynomial(Polynomial::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::power(qv.clone(), i as i64), c.clone())),
        ))
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.0
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let qv = q();
        self.0.terms().map(|(m, _)| m.exponent(&qv) as usize).max()
    }

    /// Dense coefficients, lowest degree first; empty for zero.
    pub fn coefficients(&self) -> Vec<Rational> {
        let qv = q();
        let mut out = vec![Rational::zero(); self.degree().map_or(0, |d| d + 1)];
        for (m, c) in self.0.terms() {
            out[m.exponent(&qv) as usize] = c.clone();
        }
        out
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coefficients().iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Whether every coefficient is a nonnegative integer.
    pub fn has_counting_coefficients(&self) -> bool {
        self.0
            .terms()
            .all(|(_, c)| c.is_integer() && !c.is_negative())
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.coefficients();
        let mut first = true;
        for (d, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let power = match d {
                0 => String::new(),
                1 => Q_VAR.to_string(),
                _ => format!("{Q_VAR}^{d}"),
            };
            if d == 0 {
                f.write_str(&format_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&power)?;
            } else {
                write!(f, "{}*{power}", format_rational(&mag))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Repr {
            coefficients: Vec<String>,
            human: String,
        }
        Repr {
            coefficients: self.coefficients().iter().map(format_rational).collect(),
            human: self.to_string(),
        }
        .serialize(serializer)
    }
}

fn q_plus(c: Rational) -> Polynomial {
    Polynomial::var(q()) + Polynomial::constant(c)
}

fn positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        return Err(Error::BadParameter(format!("{name} must be >= 1")));
    }
    Ok(())
}

/// `sum_{c parks under u} q^(number of ones in c)`.
pub fn q_bruteforce(u: &ThresholdVector, limits: &Limits) -> Result<QPolynomial> {
    let mut coeffs = vec![Rational::zero(); u.len() + 1];
    for c in enumerate_u_parking(u, limits)? {
        coeffs[ones_count(&c)] += Rational::one();
    }
    Ok(QPolynomial::from_coefficients(&coeffs))
}

/// `q (q + n)^(n-1)`.
pub fn q_classical(n: u64) -> Result<QPolynomial> {
    positive("n", n)?;
    Ok(QPolynomial(
        Polynomial::var(q()) * q_plus(ratu(n)).pow((n - 1) as u32),
    ))
}

/// `(q + a - 1)(q + a - 1 + b n)^(n-1)`, for weights `(a, b, ..., b)`.
pub fn q_basic(a: u64, b: u64, n: u64) -> Result<QPolynomial> {
    positive("a", a)?;
    positive("b", b)?;
    positive("n", n)?;
    let head = q_plus(ratu(a - 1));
    Ok(QPolynomial(
        head * q_plus(ratu(a - 1 + b * n)).pow((n - 1) as u32),
    ))
}

/// `q (q + l k)^(l-1)`, for weights `(1, k, ..., k)` of length `l`.
pub fn q_unit_head(l: u64, k: u64) -> Result<QPolynomial> {
    positive("l", l)?;
    Ok(QPolynomial(
        Polynomial::var(q()) * q_plus(ratu(l * k)).pow((l - 1) as u32),
    ))
}

/// Spec-sum over spec(d,b) of
/// `multinomial(db; J) q (q + j_1 h)^(j_1 - 1) prod_{t >= 2} (1 + j_t h)^(j_t - 1)`
/// with `h = (a-1)/b`; requires `a = 1 (mod b)`.
pub fn q_periodic(a: u64, b: u64, d: u64) -> Result<QPolynomial> {
    positive("a", a)?;
    positive("b", b)?;
    positive("d", d)?;
    if a % b != 1 % b {
        return Err(Error::ModViolation { a, b });
    }
    let h = rat(a as i64 - 1, b as i64);
    let mut total = Polynomial::zero();
    for j in spec_compositions(d, b) {
        let parts = j.parts();
        let mut scalar = Rational::from_integer(BigInt::from(multinomial(parts)));
        for &jt in &parts[1..] {
            let base = Rational::one() + &h * ratu(jt);
            scalar *= pow_int(&base, jt as i64 - 1).expect("base is at least 1");
        }
        let j1 = parts[0];
        let head = Polynomial::var(q()) * q_plus(&h * ratu(j1)).pow((j1 - 1) as u32);
        total = total + head.scale(&scalar);
    }
    Ok(QPolynomial(total))
}

/// `sum_{J in spec(d,b)} multinomial(db; J) q^(j_1)`, for the thresholds
/// `(1 x b, 2 x b, ..., d x b)`.
pub fn q_block_thresholds(b: u64, d: u64) -> Result<QPolynomial> {
    positive("b", b)?;
    positive("d", d)?;
    let mut coeffs = vec![Rational::zero(); (b * d + 1) as usize];
    for j in spec_compositions(d, b) {
        coeffs[j.parts()[0] as usize] += Rational::from_integer(BigInt::from(j.multinomial()));
    }
    Ok(QPolynomial::from_coefficients(&coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::parking::{ab_threshold_vector, block_threshold_vector};

    fn tv(u: &[i64]) -> ThresholdVector {
        ThresholdVector::from_integers(u).unwrap()
    }

    fn brute(u: &[i64]) -> QPolynomial {
        q_bruteforce(&tv(u), &Limits::DEFAULT).unwrap()
    }

    fn coeffs(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn display_and_json() {
        let p = brute(&[1, 2]);
        assert_eq!(p.to_string(), "q^2 + 2*q");
        assert_eq!(p.coefficients(), coeffs(&[0, 2, 1]));
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"coefficients":["0","2","1"],"human":"q^2 + 2*q"}"#
        );
        let mixed = QPolynomial::from_coefficients(&[rat(-1, 2), int(0), int(-3), int(1)]);
        assert_eq!(mixed.to_string(), "q^3 - 3*q^2 - 1/2");
        assert_eq!(QPolynomial::from_coefficients(&[]).to_string(), "0");
        assert_eq!(mixed.eval(&int(2)), rat(-9, 2));
    }

    #[test]
    fn from_polynomial_rejects_other_variables() {
        let p: Polynomial = "q^2 + x".parse().unwrap();
        assert!(QPolynomial::from_polynomial(p).is_err());
        let p: Polynomial = "q^2 + 3".parse().unwrap();
        assert!(QPolynomial::from_polynomial(p).is_ok());
    }

    #[test]
    fn classical() {
        assert_eq!(brute(&[1]).to_string(), "q");
        assert_eq!(q_classical(1).unwrap().to_string(), "q");
        assert_eq!(q_classical(2).unwrap(), brute(&[1, 2]));
        assert_eq!(q_classical(4).unwrap(), brute(&[1, 2, 3, 4]));
    }

    #[test]
    fn basic_and_unit_head() {
        assert_eq!(q_basic(1, 1, 3).unwrap(), q_classical(3).unwrap());
        assert_eq!(q_basic(2, 1, 2).unwrap(), brute(&[2, 3]));
        assert_eq!(
            q_basic(3, 2, 4).unwrap().eval(&int(1)),
            int(3 * 11 * 11 * 11)
        );
        assert_eq!(q_unit_head(4, 0).unwrap().to_string(), "q^4");
        assert_eq!(q_unit_head(2, 1).unwrap(), brute(&[1, 2]));
        assert_eq!(q_unit_head(3, 2).unwrap(), brute(&[1, 3, 5]));
    }

    #[test]
    fn periodic_spec_sum() {
        assert_eq!(
            q_periodic(3, 2, 1).unwrap(),
            QPolynomial(Polynomial::var(q()) * q_plus(int(2)))
        );
        let expected: Polynomial = "18*q^2 + 36*q + 4*q*(q+3)^2 + q*(q+4)^3".parse().unwrap();
        let p = q_periodic(3, 2, 2).unwrap();
        assert_eq!(p.as_polynomial(), &expected);
        assert_eq!(p, brute(&[1, 2, 4, 5]));
        assert_eq!(p.eval(&int(1)), int(243));
        for (a, b, d) in [(4u64, 3u64, 1u64), (5, 2, 2), (3, 1, 3)] {
            let u = ab_threshold_vector(a, b, (d * b) as usize);
            assert_eq!(
                q_periodic(a, b, d).unwrap(),
                q_bruteforce(&u, &Limits::DEFAULT).unwrap(),
                "({a},{b},{d})"
            );
        }
        assert_eq!(q_periodic(4, 2, 1), Err(Error::ModViolation { a: 4, b: 2 }));
    }

    #[test]
    fn block_thresholds_polynomial() {
        assert_eq!(q_block_thresholds(3, 1).unwrap().to_string(), "q^3");
        let p = q_block_thresholds(2, 2).unwrap();
        assert_eq!(p.to_string(), "q^4 + 4*q^3 + 6*q^2");
        assert_eq!(
            p,
            q_bruteforce(&block_threshold_vector(2, 2), &Limits::DEFAULT).unwrap()
        );
        for (b, d) in [(1u64, 4u64), (2, 3), (3, 2), (4, 2)] {
            let u = block_threshold_vector(b, d);
            assert_eq!(
                q_block_thresholds(b, d).unwrap(),
                q_bruteforce(&u, &Limits::DEFAULT).unwrap(),
                "({b},{d})"
            );
        }
    }
}
