//! Counts of u-parking functions: the basic closed form, inclusion-exclusion
//! over ordered set partitions, and five routes to the number of (ka,kb)
//! parking functions.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::combinatorics::{compositions, factorial, multinomial, spec_compositions};
use super::series::exp_truncated;
use crate::algebra::rational::{expect_integer, pow_int};
use crate::algebra::{int, rat, Assignment, Polynomial, Rational, Var};
use crate::error::{Error, Result};
use crate::grammar::{builtin_grammar, GrammarName, SpecStepFunctional};
use crate::limits::Limits;
use crate::parking::check_coprime;

fn ratu(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn rat_of(n: &num_bigint::BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// `alpha (alpha + n beta)^(n-1)`; `n = 0` gives 1.
pub fn count_basic(alpha: &Rational, beta: &Rational, n: u64) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let base: Rational = alpha + beta * ratu(n);
    alpha * Pow::pow(&base, (n - 1) as u32)
}

/// Inclusion-exclusion over ordered set partitions of `[n]`, aggregated by
/// block sizes: `sum multinomial(n; b) (-1)^k prod (-u_{s_i + 1})^{b_{i+1}}`
/// with `s_i = b_1 + ... + b_i`.
pub fn count_u_incl_excl(u: &[Rational]) -> Rational {
    let n = u.len() as u64;
    let mut total = Rational::zero();
    for comp in compositions(n) {
        let mut term = rat_of(&multinomial(&comp));
        if comp.len() % 2 == 1 {
            term = -term;
        }
        let mut s = 0usize;
        for &part in &comp {
            let base = -u[s].clone();
            term *= Pow::pow(&base, part as u32);
            s += part as usize;
        }
        total += term;
    }
    total
}

/// Whether scaling every threshold by `k` scales the count by `k^n`.
pub fn check_scaling(u: &[Rational], k: &Rational) -> bool {
    let scaled: Vec<Rational> = u.iter().map(|x| x * k).collect();
    count_u_incl_excl(&scaled) == count_u_incl_excl(u) * Pow::pow(k, u.len() as u32)
}

/// Number of (a,b) parking functions, `a^(b-1)`.
pub fn count_rational(a: u64, b: u64) -> Result<BigInt> {
    check_coprime(a, b)?;
    Ok(Pow::pow(BigInt::from(a), (b - 1) as u32))
}

fn check_periodic(a: u64, b: u64, k: u64) -> Result<()> {
    check_coprime(a, b)?;
    if k == 0 {
        return Err(Error::BadParameter("k must be >= 1".into()));
    }
    Ok(())
}

/// `(1 + j h)^(j-1)` with `h = (a-1)/b`; `j = 0` gives `1^(-1) = 1`.
fn basic_block_count(j: u64, h: &Rational) -> Rational {
    let base = Rational::one() + h * ratu(j);
    pow_int(&base, j as i64 - 1).expect("base is at least 1")
}

/// Sum over spec(k,b) of `multinomial(kb; J) prod (1 + j_i (a-1)/b)^(j_i - 1)`.
pub fn count_periodic_specsum(a: u64, b: u64, k: u64) -> Result<BigInt> {
    check_periodic(a, b, k)?;
    let h = rat(a as i64 - 1, b as i64);
    let mut total = Rational::zero();
    for j in spec_compositions(k, b) {
        let mut term = rat_of(&j.multinomial());
        for &part in j.parts() {
            term *= basic_block_count(part, &h);
        }
        total += term;
    }
    expect_integer(&total)
}

/// The same sum scaled by `b^(kb)` so that every term is an integer:
/// `multinomial(kb; J) b^k prod (b + j_i (a-1))^(j_i - 1)`.
pub fn count_periodic_scaled(a: u64, b: u64, k: u64) -> Result<BigInt> {
    check_periodic(a, b, k)?;
    let mut total = Rational::zero();
    for j in spec_compositions(k, b) {
        let mut term = rat_of(&j.multinomial()) * Pow::pow(&ratu(b), k as u32);
        for &part in j.parts() {
            let base = ratu(b + part * (a - 1));
            term *= pow_int(&base, part as i64 - 1).expect("base is at least b");
        }
        total += term;
    }
    expect_integer(&total)
}

/// `D^(kb)(z1 ... zk)` under grammar `K(k)`, evaluated at `z_i = y_i = 1`,
/// `x_i = x`, `w_i = w`, with the step function on the counters `t_i`.
pub fn periodic_grammar_value(
    b: u64,
    k: u64,
    x: &Rational,
    w: &Rational,
    limits: &Limits,
) -> Result<Rational> {
    let order = (k * b) as usize;
    if order > limits.max_order {
        return Err(Error::OrderTooLarge {
            order,
            cap: limits.max_order,
        });
    }
    let grammar = builtin_grammar(&GrammarName::K(k as u32))?;
    let start = (1..=k).fold(Polynomial::one(), |p, i| {
        p * Polynomial::var(Var::new(&format!("z{i}")))
    });
    let derived = grammar.derive_n(&start, order, limits)?;
    let mut assignment = Assignment::new();
    for i in 1..=k {
        assignment.insert(Var::new(&format!("z{i}")), int(1));
        assignment.insert(Var::new(&format!("y{i}")), int(1));
        assignment.insert(Var::new(&format!("x{i}")), x.clone());
        assignment.insert(Var::new(&format!("w{i}")), w.clone());
    }
    let hook = SpecStepFunctional::for_k(b as i64, k as u32);
    derived.eval_with_functional(&assignment, &hook)
}

/// Grammar route to the `b^(kb)`-scaled count: `x_i = b`, `w_i = a - 1`.
pub fn count_periodic_grammar(a: u64, b: u64, k: u64, limits: &Limits) -> Result<BigInt> {
    check_periodic(a, b, k)?;
    let v = periodic_grammar_value(b, k, &ratu(b), &ratu(a - 1), limits)?;
    expect_integer(&v)
}

/// Grammar route to the unscaled count: `x_i = 1`, `w_i = (a-1)/b`.
pub fn count_periodic_grammar_normalized(
    a: u64,
    b: u64,
    k: u64,
    limits: &Limits,
) -> Result<BigInt> {
    check_periodic(a, b, k)?;
    let v = periodic_grammar_value(b, k, &int(1), &rat(a as i64 - 1, b as i64), limits)?;
    expect_integer(&v)
}

/// `(kb)!` times the `z^k` coefficient of `exp(sum_m (ma)^(mb-1) z^m / (mb)!)`.
pub fn count_periodic_egf(a: u64, b: u64, k: u64) -> Result<BigInt> {
    check_periodic(a, b, k)?;
    let mut s = vec![Rational::zero()];
    for m in 1..=k {
        let num = Pow::pow(&ratu(m * a), (m * b - 1) as u32);
        s.push(num / rat_of(&factorial((m * b) as usize)));
    }
    let e = exp_truncated(&s, k as usize);
    expect_integer(&(&e[k as usize] * rat_of(&factorial((k * b) as usize))))
}
