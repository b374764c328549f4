//! Abel-type multinomial identities, each side evaluated on its own.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::combinatorics::{multinomial, weak_compositions};
use crate::algebra::rational::pow_int;
use crate::algebra::Rational;
use crate::error::{Error, Result};

fn ratu(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn positive_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::BadParameter("n must be >= 1".into()));
    }
    Ok(())
}

/// `(sum x)(n + sum x)^(n-1)` against
/// `sum_{i_1 + ... + i_k = n} multinomial(n; i) prod x_j (x_j + i_j)^(i_j - 1)`.
/// A factor with `i_j = 0` is `x_j / x_j = 1`.
pub fn abel_identity_sides(xs: &[Rational], n: u64) -> Result<(Rational, Rational)> {
    positive_n(n)?;
    if xs.is_empty() {
        return Err(Error::BadParameter("at least one x is required".into()));
    }
    if let Some(index) = xs.iter().position(Zero::is_zero) {
        return Err(Error::ZeroArgument { index });
    }
    let sum: Rational = xs.iter().sum();
    let lhs = &sum * Pow::pow(&(&sum + ratu(n)), (n - 1) as u32);

    let mut rhs = Rational::zero();
    for i in weak_compositions(n, xs.len()) {
        let mut term = Rational::from_integer(BigInt::from(multinomial(&i)));
        for (x, &ij) in xs.iter().zip(&i) {
            if ij == 0 {
                continue;
            }
            term *= x * Pow::pow(&(x + ratu(ij)), (ij - 1) as u32);
        }
        rhs += term;
    }
    Ok((lhs, rhs))
}

/// `k x^(n-1)` against
/// `sum_{i_1 + ... + i_k = n} multinomial(n; i) prod (1 + i_j (x - k)/n)^(i_j - 1)`.
pub fn abel_uniform_sides(x: &Rational, n: u64, k: u64) -> Result<(Rational, Rational)> {
    positive_n(n)?;
    if k == 0 {
        return Err(Error::BadParameter("k must be >= 1".into()));
    }
    if *x == ratu(k) {
        return Err(Error::DegenerateParameter(format!("x = k = {k}")));
    }
    let lhs = ratu(k) * Pow::pow(x, (n - 1) as u32);
    let slope = (x - ratu(k)) / ratu(n);

    let mut rhs = Rational::zero();
    for i in weak_compositions(n, k as usize) {
        let mut term = Rational::from_integer(BigInt::from(multinomial(&i)));
        for &ij in &i {
            let base = Rational::one() + &slope * ratu(ij);
            // i_j = 0 gives base 1, so the inverse always exists
            term *= pow_int(&base, ij as i64 - 1).expect("base is 1 when the exponent is negative");
        }
        rhs += term;
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn abel_single_variable() {
        let (l, r) = abel_identity_sides(&[rat(2, 3)], 4).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, rat(2, 3) * Pow::pow(&rat(14, 3), 3u32));
    }

    #[test]
    fn abel_two_ones() {
        assert_eq!(
            abel_identity_sides(&[int(1), int(1)], 2).unwrap(),
            (int(8), int(8))
        );
    }

    #[test]
    fn abel_mixed_signs() {
        let xs = [rat(-5, 2), rat(1, 7), int(3), rat(-1, 9)];
        for n in 1..=6 {
            let (l, r) = abel_identity_sides(&xs, n).unwrap();
            assert_eq!(l, r, "n = {n}");
        }
    }

    #[test]
    fn abel_rejects_zero() {
        assert_eq!(
            abel_identity_sides(&[int(1), int(0)], 3),
            Err(Error::ZeroArgument { index: 1 })
        );
    }

    #[test]
    fn abel_uniform_examples() {
        let (l, r) = abel_uniform_sides(&int(5), 3, 1).unwrap();
        assert_eq!((l.clone(), r), (int(25), int(25)));
        assert_eq!(
            abel_uniform_sides(&int(6), 4, 2).unwrap(),
            (int(432), int(432))
        );
        let (l, r) = abel_uniform_sides(&rat(-7, 4), 5, 3).unwrap();
        assert_eq!(l, r);
        assert!(matches!(
            abel_uniform_sides(&int(2), 3, 2),
            Err(Error::DegenerateParameter(_))
        ));
    }
}
