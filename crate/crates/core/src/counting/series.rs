use num_traits::{One, Zero};

use crate::algebra::{int, Rational};

/// Coefficients `e_0..=e_order` of `exp(s(z))` for a truncated series `s`
/// with `s_0 = 0`, via `n e_n = sum_{m=1..n} m s_m e_{n-m}`.
pub fn exp_truncated(s: &[Rational], order: usize) -> Vec<Rational> {
    assert!(
        s.first().is_none_or(Zero::is_zero),
        "constant term must be zero"
    );
    let coeff = |m: usize| s.get(m).cloned().unwrap_or_else(Rational::zero);
    let mut e = Vec::with_capacity(order + 1);
    e.push(Rational::one());
    for n in 1..=order {
        let mut acc = Rational::zero();
        for m in 1..=n {
            acc += int(m as i64) * coeff(m) * &e[n - m];
        }
        e.push(acc / int(n as i64));
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn exp_of_z_is_reciprocal_factorials() {
        let e = exp_truncated(&[int(0), int(1)], 5);
        assert_eq!(
            e,
            vec![
                int(1),
                int(1),
                rat(1, 2),
                rat(1, 6),
                rat(1, 24),
                rat(1, 120)
            ]
        );
    }

    #[test]
    fn exp_of_sum_multiplies() {
        // exp(z + z^2) up to z^3: 1 + z + 3/2 z^2 + 7/6 z^3
        let e = exp_truncated(&[int(0), int(1), int(1)], 3);
        assert_eq!(e, vec![int(1), int(1), rat(3, 2), rat(7, 6)]);
    }
}
