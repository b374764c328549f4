use std::fmt;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

static FACTORIALS: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// `n!`, memoised across calls.
pub fn factorial(n: usize) -> BigUint {
    let mut table = FACTORIALS.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigUint::one());
    }
    while table.len() <= n {
        let next = table.last().unwrap() * BigUint::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// `(p_1 + ... + p_k)! / (p_1! ... p_k!)`.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let n: u64 = parts.iter().sum();
    let mut den = BigUint::one();
    for &p in parts {
        den *= factorial(p as usize);
    }
    factorial(n as usize) / den
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    multinomial(&[k, n - k])
}

/// Ordered compositions of `n` into positive parts, lexicographic. `n = 0`
/// yields the single empty composition.
pub fn compositions(n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// All `(i_1, ..., i_k)` with `i_j >= 0` summing to `n`, lexicographic.
pub fn weak_compositions(n: u64, k: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = Vec::with_capacity(k);
    fn rec(rest: u64, k: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() + 1 == k {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for p in 0..=rest {
            cur.push(p);
            rec(rest - p, k, cur, out);
            cur.pop();
        }
    }
    rec(n, k, &mut cur, &mut out);
    out
}

/// `(j_1, ..., j_k)` with `j_1 + ... + j_t >= t b` for every `t` and total
/// `k b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpecComposition {
    parts: Vec<u64>,
    b: u64,
}

impl SpecComposition {
    pub fn new(parts: Vec<u64>, b: u64) -> Result<Self> {
        let k = parts.len() as u64;
        let mut prefix = 0;
        for (t, &j) in parts.iter().enumerate() {
            prefix += j;
            if prefix < (t as u64 + 1) * b {
                return Err(Error::BadParameter(format!(
                    "{parts:?}: prefix sum {prefix} < {}",
                    (t as u64 + 1) * b
                )));
            }
        }
        if prefix != k * b {
            return Err(Error::BadParameter(format!(
                "{parts:?}: total {prefix} != {}",
                k * b
            )));
        }
        Ok(SpecComposition { parts, b })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn multinomial(&self) -> BigUint {
        multinomial(&self.parts)
    }
}

impl fmt::Display for SpecComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// spec(k, b) in lexicographic order.
pub fn spec_compositions(k: u64, b: u64) -> Vec<SpecComposition> {
    let total = k * b;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k as usize);
    fn rec(
        k: u64,
        b: u64,
        total: u64,
        sum: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<SpecComposition>,
    ) {
        let t = cur.len() as u64;
        if t == k {
            if sum == total {
                out.push(SpecComposition {
                    parts: cur.clone(),
                    b,
                });
            }
            return;
        }
        let need = ((t + 1) * b).saturating_sub(sum);
        for j in need..=total - sum {
            cur.push(j);
            rec(k, b, total, sum + j, cur, out);
            cur.pop();
        }
    }
    if k > 0 {
        rec(k, b, total, 0, &mut cur, &mut out);
    }
    out
}
